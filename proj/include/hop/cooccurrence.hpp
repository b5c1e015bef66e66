#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "hop/simplex.hpp"
#include "hop/types.hpp"

namespace hop {

/// Cumulative pairwise co-occurrence weights over the arrival history.
/// Each arriving simplex of dimension d adds weight d to every unordered
/// vertex pair inside it; 0-dimensional arrivals contribute nothing.
/// One store instance represents the history up to one slice; filtration
/// builders keep a snapshot per slice.
class CoOccurrenceStore {
  public:
    std::int32_t last_updated_slice() const noexcept { return last_slice_; }
    std::size_t num_pairs() const noexcept { return weights_.size(); }

    /// Weight of the unordered pair {a, b}; 0 if never co-occurred.
    Count weight(VertexId a, VertexId b) const {
        auto it = weights_.find(pair_key(a, b));
        return it == weights_.end() ? 0 : it->second;
    }

    /// Apply one slice of arrivals. Slices must be applied in order
    /// (slice == last_updated_slice() + 1) or SliceOrderViolation is thrown.
    void record(const std::vector<Simplex>& arrivals, std::int32_t slice);

  private:
    std::unordered_map<std::uint64_t, Count> weights_;
    std::int32_t last_slice_ = -1;
};

/// Functional form of CoOccurrenceStore::record.
CoOccurrenceStore record_arrivals(CoOccurrenceStore store, const std::vector<Simplex>& arrivals,
                                  std::int32_t slice);

/// Scoring function: sum of pair weights between each vertex of s and the
/// candidate v. Throws VertexAlreadyMember if v is a vertex of s.
Count score(const CoOccurrenceStore& store, const Simplex& s, VertexId v);

}  // namespace hop
