#include "hop/cooccurrence.hpp"

#include "hop/error.hpp"

namespace hop {

void CoOccurrenceStore::record(const std::vector<Simplex>& arrivals, std::int32_t slice) {
    if (slice != last_slice_ + 1) {
        throw Error(Errc::kSliceOrderViolation, "slices must be recorded in order");
    }
    for (const Simplex& s : arrivals) {
        const Count d = s.dimension();
        if (d < 1) continue;
        const auto& verts = s.vertices();
        for (std::size_t i = 0; i < verts.size(); ++i) {
            for (std::size_t j = i + 1; j < verts.size(); ++j) {
                weights_[pair_key(verts[i], verts[j])] += d;
            }
        }
    }
    last_slice_ = slice;
}

CoOccurrenceStore record_arrivals(CoOccurrenceStore store, const std::vector<Simplex>& arrivals,
                                  std::int32_t slice) {
    store.record(arrivals, slice);
    return store;
}

Count score(const CoOccurrenceStore& store, const Simplex& s, VertexId v) {
    if (s.contains_vertex(v)) {
        throw Error(Errc::kVertexAlreadyMember, "candidate already belongs to the simplex");
    }
    Count total = 0;
    for (VertexId u : s.vertices()) total += store.weight(u, v);
    return total;
}

}  // namespace hop
