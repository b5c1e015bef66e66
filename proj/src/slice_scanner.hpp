#pragma once

// Internal: bulk induced-face counting against one snapshot. The snapshot's
// distinct faces are enumerated once and grouped by minimum vertex; each
// query then counts the faces whose vertices all lie in a marked member set.
// Only usable when faces pack into 64 bits (size <= 4, vertex ids < 65535);
// callers fall back to induced_f_vector otherwise.

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "face_tally.hpp"
#include "hop/complex.hpp"
#include "hop/types.hpp"

namespace hop::detail {

struct MarkScratch {
    std::vector<std::uint32_t> mark;
    std::uint32_t epoch = 0;

    void begin(std::size_t size) {
        if (mark.size() < size) mark.resize(size, 0);
        if (++epoch == 0) {
            std::fill(mark.begin(), mark.end(), 0);
            epoch = 1;
        }
    }
    void set(std::size_t i) { mark[i] = epoch; }
    bool test(std::size_t i) const { return mark[i] == epoch; }
    bool visit(std::size_t i) {
        if (mark[i] == epoch) return false;
        mark[i] = epoch;
        return true;
    }
};

class SliceFaceTable {
  public:
    static bool supports(const ComplexSnapshot& snap, int D) {
        return packable(snap.max_vertex_id(), D) && snap.max_vertex_id() < (1 << 22);
    }

    void build(const ComplexSnapshot& snap, int D) {
        D_ = D;
        max_vertex_ = snap.max_vertex_id();
        faces_.assign(static_cast<std::size_t>(D_) + 1, {});
        offsets_.assign(static_cast<std::size_t>(D_) + 1, {});
        std::vector<VertexId> buf;
        for (int size = 2; size <= D_; ++size) {
            auto& keys = faces_[static_cast<std::size_t>(size)];
            for (const Simplex& m : snap.maximal()) {
                for_each_subset(m.vertices(), size, buf, [&keys](std::span<const VertexId> face) {
                    keys.push_back(pack_face(face));
                });
            }
            // packed keys sort by low 16 bits last, so sort groups by the
            // minimum vertex only after masking; plain sort + stable group
            // counting is simpler: bucket by the minimum vertex explicitly.
            std::sort(keys.begin(), keys.end());
            keys.erase(std::unique(keys.begin(), keys.end()), keys.end());

            auto& offsets = offsets_[static_cast<std::size_t>(size)];
            offsets.assign(static_cast<std::size_t>(max_vertex_) + 2, 0);
            for (std::uint64_t key : keys) {
                offsets[min_vertex(key) + 1] += 1;
            }
            for (std::size_t v = 1; v < offsets.size(); ++v) offsets[v] += offsets[v - 1];
            std::vector<std::uint64_t> grouped(keys.size());
            std::vector<std::uint32_t> cursor(offsets.begin(), offsets.end() - 1);
            for (std::uint64_t key : keys) {
                grouped[cursor[min_vertex(key)]++] = key;
            }
            keys = std::move(grouped);
        }
    }

    /// counts[0] = 1, counts[1] = |members|, counts[k+1] = induced k-faces.
    FaceVector induced_counts(std::span<const VertexId> sorted_members, MarkScratch& scratch) const {
        FaceVector counts(static_cast<std::size_t>(D_) + 1, 0);
        counts[0] = 1;
        counts[1] = static_cast<Count>(sorted_members.size());
        scratch.begin(static_cast<std::size_t>(max_vertex_) + 1);
        for (VertexId v : sorted_members) scratch.set(static_cast<std::size_t>(v));
        for (int size = 2; size <= D_; ++size) {
            const auto& keys = faces_[static_cast<std::size_t>(size)];
            const auto& offsets = offsets_[static_cast<std::size_t>(size)];
            Count inside = 0;
            for (VertexId u : sorted_members) {
                const auto lo = offsets[static_cast<std::size_t>(u)];
                const auto hi = offsets[static_cast<std::size_t>(u) + 1];
                for (std::uint32_t i = lo; i < hi; ++i) {
                    std::uint64_t rest = keys[i] >> 16;  // min vertex is marked already
                    bool all = true;
                    while (rest != 0) {
                        if (!scratch.test((rest & 0xffffu) - 1u)) {
                            all = false;
                            break;
                        }
                        rest >>= 16;
                    }
                    inside += all ? 1 : 0;
                }
            }
            counts[static_cast<std::size_t>(size)] = inside;
        }
        return counts;
    }

  private:
    static std::uint32_t min_vertex(std::uint64_t key) {
        return static_cast<std::uint32_t>((key & 0xffffu) - 1u);
    }

    int D_ = 0;
    VertexId max_vertex_ = -1;
    std::vector<std::vector<std::uint64_t>> faces_;
    std::vector<std::vector<std::uint32_t>> offsets_;
};

}  // namespace hop::detail
