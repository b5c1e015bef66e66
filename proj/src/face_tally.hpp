#pragma once

// Internal: distinct-face counting across overlapping vertex sets.

#include <algorithm>
#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "hop/types.hpp"

namespace hop::detail {

// Packs up to 4 sorted vertex ids (< 65535) into one 64-bit key; the +1
// offset keeps vertex 0 distinguishable from padding.
inline bool packable(VertexId max_vertex, int max_face_size) {
    return max_face_size <= 4 && max_vertex < 65535;
}

inline std::uint64_t pack_face(std::span<const VertexId> sorted) {
    std::uint64_t key = 0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        key |= static_cast<std::uint64_t>(static_cast<std::uint32_t>(sorted[i]) + 1u) << (16 * i);
    }
    return key;
}

inline std::vector<VertexId> unpack_face(std::uint64_t key) {
    std::vector<VertexId> out;
    while (key != 0) {
        out.push_back(static_cast<VertexId>((key & 0xffffu) - 1u));
        key >>= 16;
    }
    return out;
}

// Invokes fn(buf) for every subset of `sorted` of size `k`, in lex order.
template <typename Fn>
void for_each_subset(std::span<const VertexId> sorted, int k, std::vector<VertexId>& buf, Fn&& fn) {
    const int n = static_cast<int>(sorted.size());
    if (k <= 0 || k > n) return;
    if (k == n) {
        buf.assign(sorted.begin(), sorted.end());
        fn(std::span<const VertexId>(buf.data(), buf.size()));
        return;
    }
    std::array<int, 16> idx_small;
    std::vector<int> idx_big;
    int* idx;
    if (k <= 16) {
        idx = idx_small.data();
    } else {
        idx_big.resize(static_cast<std::size_t>(k));
        idx = idx_big.data();
    }
    for (int i = 0; i < k; ++i) idx[i] = i;
    buf.resize(static_cast<std::size_t>(k));
    while (true) {
        for (int i = 0; i < k; ++i) buf[static_cast<std::size_t>(i)] = sorted[static_cast<std::size_t>(idx[i])];
        fn(std::span<const VertexId>(buf.data(), buf.size()));
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

// Counts distinct faces per size (1..max_face_size) over a family of vertex
// sets. Reusable: reset() keeps the allocated buffers. Faces are collected
// into per-size buffers and deduplicated lazily in distinct().
class FaceTally {
  public:
    void reset(int max_face_size, VertexId max_vertex) {
        max_size_ = max_face_size;
        packed_ = packable(max_vertex, max_face_size);
        if (packed_keys_.size() < static_cast<std::size_t>(max_size_) + 1) {
            packed_keys_.resize(static_cast<std::size_t>(max_size_) + 1);
            generic_keys_.resize(static_cast<std::size_t>(max_size_) + 1);
        }
        for (auto& v : packed_keys_) v.clear();
        for (auto& v : generic_keys_) v.clear();
    }

    void add_set(std::span<const VertexId> sorted) {
        const int cap = std::min<int>(max_size_, static_cast<int>(sorted.size()));
        for (int sz = 1; sz <= cap; ++sz) {
            if (packed_) {
                auto& dst = packed_keys_[static_cast<std::size_t>(sz)];
                for_each_subset(sorted, sz, buf_, [&dst](std::span<const VertexId> face) {
                    dst.push_back(pack_face(face));
                });
            } else {
                auto& dst = generic_keys_[static_cast<std::size_t>(sz)];
                for_each_subset(sorted, sz, buf_, [&dst](std::span<const VertexId> face) {
                    dst.emplace_back(face.begin(), face.end());
                });
            }
        }
    }

    Count distinct(int size) {
        if (size < 1 || size > max_size_) return 0;
        if (packed_) {
            auto& keys = packed_keys_[static_cast<std::size_t>(size)];
            std::sort(keys.begin(), keys.end());
            keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
            return static_cast<Count>(keys.size());
        }
        auto& keys = generic_keys_[static_cast<std::size_t>(size)];
        std::sort(keys.begin(), keys.end());
        keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
        return static_cast<Count>(keys.size());
    }

  private:
    int max_size_ = 0;
    bool packed_ = true;
    std::vector<std::vector<std::uint64_t>> packed_keys_;
    std::vector<std::vector<std::vector<VertexId>>> generic_keys_;
    std::vector<VertexId> buf_;
};

}  // namespace hop::detail
