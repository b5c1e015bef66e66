#include "hop/simplex.hpp"

#include <algorithm>

#include "hop/error.hpp"

namespace hop {

Simplex Simplex::make(std::vector<VertexId> vertices) {
    if (vertices.empty()) {
        throw Error(Errc::kInvalidSimplex, "simplex requires at least one vertex");
    }
    for (VertexId v : vertices) {
        if (v < 0) throw Error(Errc::kInvalidSimplex, "vertex ids must be non-negative");
    }
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    return Simplex(std::move(vertices));
}

bool Simplex::contains_vertex(VertexId v) const {
    return std::binary_search(verts_.begin(), verts_.end(), v);
}

bool Simplex::is_subset_of(std::span<const VertexId> sorted_other) const {
    return std::includes(sorted_other.begin(), sorted_other.end(), verts_.begin(), verts_.end());
}

std::vector<Simplex> faces(const Simplex& s, int dim) {
    if (dim < 0 || dim > s.dimension()) {
        throw Error(Errc::kInvalidDimension, "face dimension out of range");
    }
    const auto& verts = s.vertices();
    const int n = static_cast<int>(verts.size());
    const int k = dim + 1;
    std::vector<Simplex> out;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    std::vector<VertexId> buf(k);
    while (true) {
        for (int i = 0; i < k; ++i) buf[i] = verts[idx[i]];
        out.push_back(make_simplex(buf));
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

}  // namespace hop
