#include "hop/neighborhood.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "face_tally.hpp"
#include "hop/error.hpp"
#include "slice_scanner.hpp"

namespace hop {
namespace {

using detail::MarkScratch;

std::vector<VertexId> bfs_ball(const ComplexSnapshot& c, std::span<const VertexId> sources, int k) {
    static thread_local MarkScratch mark_visited;
    static thread_local std::unordered_set<VertexId> set_visited;
    static thread_local std::vector<VertexId> frontier, next, members;

    // dense mark array for ordinary id ranges, hash set for huge sparse ones
    const auto limit = static_cast<std::size_t>(c.max_vertex_id()) + 1;
    const bool dense = limit <= (1u << 22);
    if (dense) {
        mark_visited.begin(limit);
    } else {
        set_visited.clear();
    }
    auto visit = [&](VertexId v) {
        return dense ? mark_visited.visit(static_cast<std::size_t>(v))
                     : set_visited.insert(v).second;
    };

    frontier.clear();
    members.clear();
    for (VertexId v : sources) {
        if (visit(v)) {
            frontier.push_back(v);
            members.push_back(v);
        }
    }
    for (int level = 0; level < k && !frontier.empty(); ++level) {
        next.clear();
        for (VertexId u : frontier) {
            for (VertexId w : c.neighbors(u)) {
                if (visit(w)) {
                    next.push_back(w);
                    members.push_back(w);
                }
            }
        }
        std::swap(frontier, next);
    }
    std::vector<VertexId> out(members.begin(), members.end());
    std::sort(out.begin(), out.end());
    return out;
}

// Distinct non-empty intersections of maximal simplices with the member
// set, handed to `fn` one by one. Intersection buffers are reused.
template <typename Fn>
void for_each_member_intersection(const ComplexSnapshot& c, std::span<const VertexId> sorted_members,
                                  Fn&& fn) {
    static thread_local MarkScratch seen_idx;
    static thread_local std::vector<std::vector<VertexId>> cuts;
    static thread_local std::vector<std::size_t> order;
    seen_idx.begin(c.maximal().size());

    std::size_t used = 0;
    for (VertexId v : sorted_members) {
        for (std::uint32_t idx : c.incident(v)) {
            if (!seen_idx.visit(idx)) continue;
            if (used == cuts.size()) cuts.emplace_back();
            auto& cut = cuts[used];
            cut.clear();
            const auto& mv = c.maximal()[idx].vertices();
            std::set_intersection(mv.begin(), mv.end(), sorted_members.begin(),
                                  sorted_members.end(), std::back_inserter(cut));
            if (!cut.empty()) ++used;
        }
    }
    order.resize(used);
    for (std::size_t i = 0; i < used; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [](std::size_t a, std::size_t b) { return cuts[a] < cuts[b]; });
    for (std::size_t i = 0; i < used; ++i) {
        if (i > 0 && cuts[order[i]] == cuts[order[i - 1]]) continue;
        fn(std::span<const VertexId>(cuts[order[i]].data(), cuts[order[i]].size()));
    }
}

}  // namespace

std::vector<VertexId> k_ball_vertex(const ComplexSnapshot& c, VertexId v, int k) {
    if (!c.has_vertex(v)) throw Error(Errc::kUnknownVertex, "vertex not in complex");
    if (k < 0) throw Error(Errc::kInvalidDimension, "ball radius must be non-negative");
    const VertexId src[1] = {v};
    return bfs_ball(c, src, k);
}

KBall k_ball_simplex(const ComplexSnapshot& c, const Simplex& s, int k) {
    if (!c.contains(s)) throw Error(Errc::kSimplexNotPresent, "simplex not in complex");
    if (k < 0) throw Error(Errc::kInvalidDimension, "ball radius must be non-negative");
    return KBall{s, k, bfs_ball(c, s.vertices(), k)};
}

ComplexSnapshot sub_complex(const ComplexSnapshot& c, const Simplex& s, int k) {
    KBall ball = k_ball_simplex(c, s, k);
    ComplexSnapshot out;
    for_each_member_intersection(c, ball.members, [&out](std::span<const VertexId> cut) {
        out.insert(make_simplex(std::vector<VertexId>(cut.begin(), cut.end())));
    });
    return out;
}

FaceVector induced_f_vector(const ComplexSnapshot& c, std::span<const VertexId> sorted_members, int D) {
    if (D < 0) throw Error(Errc::kInvalidDimension, "face-vector length must be non-negative");
    FaceVector counts(static_cast<std::size_t>(D) + 1, 0);
    counts[0] = 1;
    if (D == 0) return counts;
    static thread_local detail::FaceTally tally;
    tally.reset(D, c.max_vertex_id());
    for_each_member_intersection(
        c, sorted_members, [](std::span<const VertexId> cut) { tally.add_set(cut); });
    for (int k = 0; k < D; ++k) counts[static_cast<std::size_t>(k) + 1] = tally.distinct(k + 1);
    return counts;
}

FaceVector neighborhood_feature(const ComplexSnapshot& c, const Simplex& s, int k, int D) {
    KBall ball = k_ball_simplex(c, s, k);
    return induced_f_vector(c, ball.members, D);
}

}  // namespace hop
