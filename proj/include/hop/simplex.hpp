#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "hop/types.hpp"

namespace hop {

/// A simplex: a non-empty, strictly ascending list of vertex ids.
/// Dimension is one less than the number of vertices.
class Simplex {
  public:
    /// Sorts and deduplicates. Throws InvalidSimplex on empty input or
    /// negative vertex ids.
    static Simplex make(std::vector<VertexId> vertices);
    static Simplex make(std::initializer_list<VertexId> vertices) {
        return make(std::vector<VertexId>(vertices));
    }

    const std::vector<VertexId>& vertices() const noexcept { return verts_; }
    int dimension() const noexcept { return static_cast<int>(verts_.size()) - 1; }
    std::size_t size() const noexcept { return verts_.size(); }

    bool contains_vertex(VertexId v) const;
    bool is_subset_of(const Simplex& other) const { return is_subset_of(other.verts_); }
    bool is_subset_of(std::span<const VertexId> sorted_other) const;

    bool operator==(const Simplex& other) const noexcept = default;
    auto operator<=>(const Simplex& other) const noexcept = default;

  private:
    explicit Simplex(std::vector<VertexId> sorted) : verts_(std::move(sorted)) {}
    std::vector<VertexId> verts_;
};

/// Factory matching the artifact's functional surface.
inline Simplex make_simplex(std::vector<VertexId> vertices) { return Simplex::make(std::move(vertices)); }
inline Simplex make_simplex(std::initializer_list<VertexId> vertices) { return Simplex::make(vertices); }

/// All dim-dimensional faces of s, in lexicographic order.
/// Throws InvalidDimension unless 0 <= dim <= s.dimension().
std::vector<Simplex> faces(const Simplex& s, int dim);

struct SimplexHash {
    std::size_t operator()(const Simplex& s) const noexcept {
        std::uint64_t h = 1469598103934665603ull;
        for (VertexId v : s.vertices()) {
            h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(v));
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

}  // namespace hop
