#pragma once

#include "hop/complex.hpp"
#include "hop/cooccurrence.hpp"
#include "hop/simplex.hpp"
#include "hop/types.hpp"

namespace hop {

/// Feature of (s, v) at the store's slice: the k-ball neighborhood
/// face-vector followed by the co-occurrence score (length D+2).
/// Throws CandidateOutsideBall when v is not k-reachable from s and
/// VertexAlreadyMember when v belongs to s.
FeatureVector extract(const ComplexSnapshot& c, const CoOccurrenceStore& store, const Simplex& s,
                      VertexId v, int k, int D);

/// Assemble a feature from an already-computed neighborhood prefix.
inline FeatureVector concat_feature(FaceVector neighborhood, Count h) {
    neighborhood.push_back(h);
    return neighborhood;
}

/// Sum of absolute coordinate differences. Throws DimensionMismatch on
/// unequal lengths.
Count l1_distance(const FeatureVector& a, const FeatureVector& b);

}  // namespace hop
