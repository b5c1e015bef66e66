#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace hop {

using VertexId = std::int32_t;
using Count = std::int64_t;

/// Face-vector of a complex: (f_{-1}, f_0, ..., f_{D-1}), length D+1.
/// The leading entry counts the empty face and is always 1.
using FaceVector = std::vector<Count>;

/// Feature of a (simplex, candidate) pair: face-vector entries followed by
/// the co-occurrence score, length D+2.
using FeatureVector = std::vector<Count>;

struct FeatureVectorHash {
    std::size_t operator()(const FeatureVector& v) const noexcept {
        std::uint64_t h = 1469598103934665603ull;
        for (Count c : v) {
            h ^= static_cast<std::uint64_t>(c);
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

/// Unordered vertex pair packed into one key (smaller id in the high word).
inline std::uint64_t pair_key(VertexId a, VertexId b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
           static_cast<std::uint32_t>(b);
}

}  // namespace hop
