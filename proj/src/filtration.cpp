#include "hop/filtration.hpp"

namespace hop {

void Filtration::append_slice(std::vector<Simplex> arrivals) {
    ComplexSnapshot next = snapshots.empty() ? ComplexSnapshot{} : snapshots.back();
    for (const Simplex& s : arrivals) next.insert(s);
    CoOccurrenceStore store = cooccurrence.empty() ? CoOccurrenceStore{} : cooccurrence.back();
    store.record(arrivals, num_slices());
    snapshots.push_back(std::move(next));
    cooccurrence.push_back(std::move(store));
    slice_arrivals.push_back(std::move(arrivals));
}

}  // namespace hop
