#include "hop/complex.hpp"

#include <algorithm>

#include "face_tally.hpp"
#include "hop/error.hpp"

namespace hop {
namespace {

void insert_sorted_unique(std::vector<VertexId>& v, VertexId x) {
    auto it = std::lower_bound(v.begin(), v.end(), x);
    if (it == v.end() || *it != x) v.insert(it, x);
}

}  // namespace

std::span<const VertexId> ComplexSnapshot::neighbors(VertexId v) const {
    auto it = adjacency_.find(v);
    if (it == adjacency_.end()) return {};
    return it->second;
}

std::span<const std::uint32_t> ComplexSnapshot::incident(VertexId v) const {
    auto it = incidence_.find(v);
    if (it == incidence_.end()) return {};
    return it->second;
}

std::vector<VertexId> ComplexSnapshot::vertex_set() const {
    std::vector<VertexId> out;
    out.reserve(adjacency_.size());
    for (const auto& [v, _] : adjacency_) out.push_back(v);
    std::sort(out.begin(), out.end());
    return out;
}

bool ComplexSnapshot::contains(const Simplex& s) const {
    // Scan the incidence list of the least-incident vertex of s.
    std::span<const std::uint32_t> best;
    bool have = false;
    for (VertexId v : s.vertices()) {
        auto it = incidence_.find(v);
        if (it == incidence_.end()) return false;
        if (!have || it->second.size() < best.size()) {
            best = it->second;
            have = true;
        }
    }
    for (std::uint32_t idx : best) {
        if (s.is_subset_of(maximal_[idx])) return true;
    }
    return false;
}

void ComplexSnapshot::unlink(std::uint32_t idx) {
    // Swap-pop maximal_[idx]; incidence lists are fixed up for the moved slot.
    const std::uint32_t last = static_cast<std::uint32_t>(maximal_.size()) - 1;
    for (VertexId v : maximal_[idx].vertices()) {
        auto& lst = incidence_[v];
        lst.erase(std::find(lst.begin(), lst.end(), idx));
    }
    if (idx != last) {
        maximal_[idx] = std::move(maximal_[last]);
        for (VertexId v : maximal_[idx].vertices()) {
            auto& lst = incidence_[v];
            *std::find(lst.begin(), lst.end(), last) = idx;
        }
    }
    maximal_.pop_back();
}

void ComplexSnapshot::insert(const Simplex& s) {
    if (contains(s)) return;

    // Absorb maximal simplices that are subsets of s. Only simplices
    // incident to vertices of s can qualify.
    std::vector<std::uint32_t> absorbed;
    for (VertexId v : s.vertices()) {
        auto it = incidence_.find(v);
        if (it == incidence_.end()) continue;
        for (std::uint32_t idx : it->second) {
            if (maximal_[idx].is_subset_of(s)) absorbed.push_back(idx);
        }
    }
    std::sort(absorbed.begin(), absorbed.end());
    absorbed.erase(std::unique(absorbed.begin(), absorbed.end()), absorbed.end());
    for (auto it = absorbed.rbegin(); it != absorbed.rend(); ++it) unlink(*it);

    const std::uint32_t idx = static_cast<std::uint32_t>(maximal_.size());
    maximal_.push_back(s);
    const auto& verts = s.vertices();
    for (std::size_t i = 0; i < verts.size(); ++i) {
        incidence_[verts[i]].push_back(idx);
        auto& adj = adjacency_[verts[i]];  // creates entry even for 0-simplices
        for (std::size_t j = 0; j < verts.size(); ++j) {
            if (i != j) insert_sorted_unique(adj, verts[j]);
        }
        max_vertex_ = std::max(max_vertex_, verts[i]);
    }
}

ComplexSnapshot insert(ComplexSnapshot c, const Simplex& s) {
    c.insert(s);
    return c;
}

std::vector<Simplex> simplices_of_dim(const ComplexSnapshot& c, int dim) {
    if (dim < 0) throw Error(Errc::kInvalidDimension, "dimension must be non-negative");
    const int size = dim + 1;
    std::vector<VertexId> buf;
    std::vector<std::vector<VertexId>> faces;
    if (detail::packable(c.max_vertex_id(), size)) {
        std::vector<std::uint64_t> keys;
        for (const Simplex& m : c.maximal()) {
            detail::for_each_subset(m.vertices(), size, buf, [&keys](std::span<const VertexId> face) {
                keys.push_back(detail::pack_face(face));
            });
        }
        std::sort(keys.begin(), keys.end());
        keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
        faces.reserve(keys.size());
        for (std::uint64_t key : keys) faces.push_back(detail::unpack_face(key));
    } else {
        for (const Simplex& m : c.maximal()) {
            detail::for_each_subset(m.vertices(), size, buf, [&faces](std::span<const VertexId> face) {
                faces.emplace_back(face.begin(), face.end());
            });
        }
    }
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    std::vector<Simplex> out;
    out.reserve(faces.size());
    for (auto& verts : faces) out.push_back(make_simplex(std::move(verts)));
    return out;
}

FaceVector f_vector(const ComplexSnapshot& c, int D) {
    if (D < 0) throw Error(Errc::kInvalidDimension, "face-vector length must be non-negative");
    FaceVector counts(static_cast<std::size_t>(D) + 1, 0);
    counts[0] = 1;  // empty face
    if (D == 0) return counts;
    static thread_local detail::FaceTally tally;
    tally.reset(D, c.max_vertex_id());
    for (const Simplex& m : c.maximal()) tally.add_set(m.vertices());
    for (int k = 0; k < D; ++k) counts[static_cast<std::size_t>(k) + 1] = tally.distinct(k + 1);
    return counts;
}

}  // namespace hop
