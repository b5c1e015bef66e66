#pragma once

#include <span>
#include <vector>

#include "hop/complex.hpp"
#include "hop/simplex.hpp"
#include "hop/types.hpp"

namespace hop {

/// k-ball around a simplex: every member is reachable from some vertex of
/// the center by a path of length <= k in the 1-skeleton.
struct KBall {
    Simplex center;
    int radius = 0;
    std::vector<VertexId> members;  // sorted
};

/// Vertices within distance k of v (including v), sorted.
/// Throws UnknownVertex if v is not in the complex.
std::vector<VertexId> k_ball_vertex(const ComplexSnapshot& c, VertexId v, int k);

/// Union of the per-vertex k-balls of the center's vertices.
/// Throws SimplexNotPresent unless the complex contains s.
KBall k_ball_simplex(const ComplexSnapshot& c, const Simplex& s, int k);

/// Induced sub-complex on the k-ball of s: a face belongs iff all of its
/// vertices lie in the ball.
ComplexSnapshot sub_complex(const ComplexSnapshot& c, const Simplex& s, int k);

/// Face-vector of the induced sub-complex on an arbitrary sorted vertex set.
FaceVector induced_f_vector(const ComplexSnapshot& c, std::span<const VertexId> sorted_members, int D);

/// Face-vector of sub_complex(c, s, k); the simplex's neighborhood feature.
FaceVector neighborhood_feature(const ComplexSnapshot& c, const Simplex& s, int k, int D);

}  // namespace hop
