#include "hop/feature.hpp"

#include <algorithm>
#include <cstdlib>

#include "hop/error.hpp"
#include "hop/neighborhood.hpp"

namespace hop {

FeatureVector extract(const ComplexSnapshot& c, const CoOccurrenceStore& store, const Simplex& s,
                      VertexId v, int k, int D) {
    if (s.contains_vertex(v)) {
        throw Error(Errc::kVertexAlreadyMember, "candidate already belongs to the simplex");
    }
    KBall ball = k_ball_simplex(c, s, k);
    if (!std::binary_search(ball.members.begin(), ball.members.end(), v)) {
        throw Error(Errc::kCandidateOutsideBall, "candidate is not k-reachable from the simplex");
    }
    return concat_feature(induced_f_vector(c, ball.members, D), score(store, s, v));
}

Count l1_distance(const FeatureVector& a, const FeatureVector& b) {
    if (a.size() != b.size()) {
        throw Error(Errc::kDimensionMismatch, "feature vectors differ in length");
    }
    Count total = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        total += a[i] > b[i] ? a[i] - b[i] : b[i] - a[i];
    }
    return total;
}

}  // namespace hop
