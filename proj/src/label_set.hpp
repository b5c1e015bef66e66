#pragma once

// Internal: hash set of fixed-size simplices, used for arrival labeling.

#include <span>
#include <unordered_set>
#include <vector>

#include "face_tally.hpp"
#include "hop/filtration.hpp"
#include "hop/types.hpp"

namespace hop::detail {

struct VertexVecHash {
    std::size_t operator()(const std::vector<VertexId>& v) const noexcept {
        std::uint64_t h = 1469598103934665603ull;
        for (VertexId x : v) {
            h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(x));
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

class SimplexKeySet {
  public:
    SimplexKeySet(VertexId max_vertex, int size) : packed_(packable(max_vertex, size)) {}

    void add(std::span<const VertexId> sorted) {
        if (packed_) {
            packed_keys_.insert(pack_face(sorted));
        } else {
            generic_keys_.insert(std::vector<VertexId>(sorted.begin(), sorted.end()));
        }
    }

    bool contains(std::span<const VertexId> sorted) const {
        if (packed_) return packed_keys_.count(pack_face(sorted)) != 0;
        return generic_keys_.count(std::vector<VertexId>(sorted.begin(), sorted.end())) != 0;
    }

  private:
    bool packed_;
    std::unordered_set<std::uint64_t> packed_keys_;
    std::unordered_set<std::vector<VertexId>, VertexVecHash> generic_keys_;
};

// The `size`-vertex faces that are new at `slice`: faces of that slice's
// arrivals not already contained in the previous snapshot.
SimplexKeySet fresh_faces(const Filtration& f, std::int32_t slice, int size);

}  // namespace hop::detail
