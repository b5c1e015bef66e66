#pragma once

#include "hop/complex.hpp"
#include "hop/simplex.hpp"

namespace hop {

/// Single-edge heuristics on the 1-skeleton of a snapshot.

/// Sum of 1/log(deg(w)) over common neighbors w; degree-1 neighbors are
/// skipped (log 1 = 0).
double adamic_adar(const ComplexSnapshot& c, VertexId u, VertexId v);

/// |N(u) n N(v)| / |N(u) u N(v)|; 0 when the union is empty.
double jaccard(const ComplexSnapshot& c, VertexId u, VertexId v);

/// deg(u) * deg(v).
double preferential_attachment(const ComplexSnapshot& c, VertexId u, VertexId v);

enum class BaselineMethod { kAdamicAdar, kJaccard, kPreferentialAttachment };

/// Mean of the pair score between each vertex of s and the candidate v.
double baseline_score(BaselineMethod method, const ComplexSnapshot& c, const Simplex& s, VertexId v);

}  // namespace hop
