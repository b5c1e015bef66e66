#pragma once

#include <cstdint>
#include <vector>

#include "hop/complex.hpp"
#include "hop/cooccurrence.hpp"
#include "hop/simplex.hpp"

namespace hop {

/// A filtered complex: cumulative snapshots indexed by slice (0-based),
/// the per-slice arrival lists that produced them, and the per-slice
/// co-occurrence stores. Snapshots are nested: every maximal simplex of
/// slice t is contained in slice t+1.
struct Filtration {
    std::vector<ComplexSnapshot> snapshots;
    std::vector<std::vector<Simplex>> slice_arrivals;
    std::vector<CoOccurrenceStore> cooccurrence;

    std::int32_t num_slices() const noexcept { return static_cast<std::int32_t>(snapshots.size()); }

    /// Extend by one slice: copy the last snapshot, attach the arrivals,
    /// and advance the co-occurrence store.
    void append_slice(std::vector<Simplex> arrivals);
};

}  // namespace hop
