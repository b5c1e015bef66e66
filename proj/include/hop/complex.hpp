#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "hop/simplex.hpp"
#include "hop/types.hpp"

namespace hop {

/// A graph simplicial complex snapshot, represented by its maximal simplices.
/// Closure under taking subsets is implicit: a simplex is a member iff it is
/// a subset of some maximal simplex. The maximal set is kept an antichain.
///
/// Snapshots are built single-writer (insert) and then treated as immutable;
/// all query methods are const and safe to call concurrently.
class ComplexSnapshot {
  public:
    ComplexSnapshot() = default;

    /// Attach s and all its faces. Restores the antichain: maximal simplices
    /// that become subsets of s are absorbed; inserting an existing face is
    /// a no-op.
    void insert(const Simplex& s);

    /// True iff s is a subset of some maximal simplex.
    bool contains(const Simplex& s) const;

    bool has_vertex(VertexId v) const { return adjacency_.find(v) != adjacency_.end(); }
    std::size_t num_vertices() const noexcept { return adjacency_.size(); }
    /// Sorted union of the vertices of all maximal simplices.
    std::vector<VertexId> vertex_set() const;

    const std::vector<Simplex>& maximal() const noexcept { return maximal_; }

    /// Neighbors of v in the 1-skeleton, sorted, without v itself.
    /// Empty span for unknown vertices.
    std::span<const VertexId> neighbors(VertexId v) const;
    std::size_t degree(VertexId v) const { return neighbors(v).size(); }

    /// Indices into maximal() of the simplices containing v (empty if none).
    std::span<const std::uint32_t> incident(VertexId v) const;

    VertexId max_vertex_id() const noexcept { return max_vertex_; }

  private:
    std::vector<Simplex> maximal_;
    std::unordered_map<VertexId, std::vector<std::uint32_t>> incidence_;
    std::unordered_map<VertexId, std::vector<VertexId>> adjacency_;
    VertexId max_vertex_ = -1;

    void unlink(std::uint32_t idx);
};

/// Functional form of ComplexSnapshot::insert.
ComplexSnapshot insert(ComplexSnapshot c, const Simplex& s);

inline bool contains(const ComplexSnapshot& c, const Simplex& s) { return c.contains(s); }

/// All distinct dim-dimensional faces across the maximal simplices, sorted.
std::vector<Simplex> simplices_of_dim(const ComplexSnapshot& c, int dim);

/// Face-vector (f_{-1}, f_0, ..., f_{D-1}): counts[0] = 1 for the empty face,
/// counts[k+1] = number of distinct k-faces, zero-padded up to length D+1.
/// Faces above dimension D-1 are not enumerated.
FaceVector f_vector(const ComplexSnapshot& c, int D);

}  // namespace hop
