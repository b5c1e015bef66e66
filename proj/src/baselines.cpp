#include "hop/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "hop/error.hpp"

namespace hop {
namespace {

std::vector<VertexId> common(const ComplexSnapshot& c, VertexId u, VertexId v) {
    auto nu = c.neighbors(u);
    auto nv = c.neighbors(v);
    std::vector<VertexId> out;
    std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(), std::back_inserter(out));
    return out;
}

}  // namespace

double adamic_adar(const ComplexSnapshot& c, VertexId u, VertexId v) {
    double total = 0.0;
    for (VertexId w : common(c, u, v)) {
        const std::size_t deg = c.degree(w);
        if (deg <= 1) continue;
        total += 1.0 / std::log(static_cast<double>(deg));
    }
    return total;
}

double jaccard(const ComplexSnapshot& c, VertexId u, VertexId v) {
    auto nu = c.neighbors(u);
    auto nv = c.neighbors(v);
    if (nu.empty() && nv.empty()) return 0.0;
    const std::size_t inter = common(c, u, v).size();
    const std::size_t uni = nu.size() + nv.size() - inter;
    return uni == 0 ? 0.0 : static_cast<double>(inter) / static_cast<double>(uni);
}

double preferential_attachment(const ComplexSnapshot& c, VertexId u, VertexId v) {
    return static_cast<double>(c.degree(u)) * static_cast<double>(c.degree(v));
}

double baseline_score(BaselineMethod method, const ComplexSnapshot& c, const Simplex& s, VertexId v) {
    if (s.contains_vertex(v)) {
        throw Error(Errc::kVertexAlreadyMember, "candidate already belongs to the simplex");
    }
    double total = 0.0;
    for (VertexId u : s.vertices()) {
        switch (method) {
            case BaselineMethod::kAdamicAdar: total += adamic_adar(c, u, v); break;
            case BaselineMethod::kJaccard: total += jaccard(c, u, v); break;
            case BaselineMethod::kPreferentialAttachment:
                total += preferential_attachment(c, u, v);
                break;
        }
    }
    return total / static_cast<double>(s.size());
}

}  // namespace hop
