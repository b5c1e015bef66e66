#include "hop/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "face_tally.hpp"
#include "hop/error.hpp"
#include "hop/feature.hpp"
#include "hop/neighborhood.hpp"
#include "hop/rng.hpp"
#include "label_set.hpp"
#include "parallel.hpp"
#include "slice_scanner.hpp"

namespace hop {
namespace {

void merge_cube(FeatureIndex::Cube& into, const FeatureIndex::Cube& from) {
    for (const auto& [key, counts] : from) {
        auto& dst = into[key];
        dst.possible += counts.possible;
        dst.realized += counts.realized;
    }
}

// Ball sums for one cube: possible/realized mass within L1 distance delta
// of F (including F itself), plus the exact-match entry.
struct BallSums {
    Count exact_possible = 0;
    Count exact_realized = 0;
    Count ball_possible = 0;
    Count ball_realized = 0;
};

// Enumerates every non-negative lattice point within L1 distance delta of F.
template <typename Fn>
void enumerate_ball(FeatureVector& point, const FeatureVector& F, std::size_t coord, Count budget,
                    Fn&& fn) {
    if (coord == F.size()) {
        fn(const_cast<const FeatureVector&>(point));
        return;
    }
    const Count lo = std::max<Count>(0, F[coord] - budget);
    const Count hi = F[coord] + budget;
    for (Count v = lo; v <= hi; ++v) {
        point[coord] = v;
        const Count used = v > F[coord] ? v - F[coord] : F[coord] - v;
        enumerate_ball(point, F, coord + 1, budget - used, fn);
    }
    point[coord] = F[coord];
}

BallSums ball_sums(const FeatureIndex::Cube& cube, const FeatureVector& F, Count delta) {
    BallSums out;
    const auto tally = [&](const FeatureIndex::Counts& counts, Count dist) {
        out.ball_possible += counts.possible;
        out.ball_realized += counts.realized;
        if (dist == 0) {
            out.exact_possible = counts.possible;
            out.exact_realized = counts.realized;
        }
    };
    // Probing the lattice neighbors beats scanning the cube whenever the
    // ball is the smaller side.
    if (lattice_ball_size(F, delta) < static_cast<Count>(cube.size())) {
        FeatureVector point = F;
        enumerate_ball(point, F, 0, delta, [&](const FeatureVector& candidate) {
            const auto it = cube.find(candidate);
            if (it == cube.end()) return;
            Count dist = 0;
            for (std::size_t i = 0; i < F.size(); ++i) {
                dist += candidate[i] > F[i] ? candidate[i] - F[i] : F[i] - candidate[i];
            }
            tally(it->second, dist);
        });
        return out;
    }
    for (const auto& [key, counts] : cube) {
        if (key.size() != F.size()) continue;
        Count dist = 0;
        for (std::size_t i = 0; i < key.size() && dist <= delta; ++i) {
            dist += key[i] > F[i] ? key[i] - F[i] : F[i] - key[i];
        }
        if (dist > delta) continue;
        tally(counts, dist);
    }
    return out;
}

}  // namespace

FeatureIndex build_index(const Filtration& f, std::int32_t anchor, std::int32_t window, int d, int k,
                         int D, int jobs) {
    if (window < 1 || anchor - window < 0) {
        throw Error(Errc::kInvalidArgument, "window must satisfy 1 <= p <= anchor");
    }
    if (anchor + 1 >= f.num_slices()) {
        throw Error(Errc::kLabelSliceMissing, "labels need slice anchor+1");
    }
    FeatureIndex index;
    index.anchor = anchor;
    index.window = window;
    index.d = d;
    index.k = k;
    index.D = D;

    for (std::int32_t t = anchor - window; t <= anchor; ++t) {
        const ComplexSnapshot& snap = f.snapshots[static_cast<std::size_t>(t)];
        const CoOccurrenceStore& store = f.cooccurrence[static_cast<std::size_t>(t)];

        // (d+1)-simplices new at slice t+1.
        const detail::SimplexKeySet fresh = detail::fresh_faces(f, t + 1, d + 2);

        const std::vector<Simplex> sigmas = simplices_of_dim(snap, d);
        detail::SliceFaceTable face_table;
        const bool bulk = detail::SliceFaceTable::supports(snap, D);
        if (bulk) face_table.build(snap, D);

        std::vector<FeatureIndex::Cube> partial(
            static_cast<std::size_t>(detail::resolve_jobs(jobs)));
        detail::run_chunks(sigmas.size(), jobs, [&](std::size_t chunk, std::size_t lo, std::size_t hi) {
            FeatureIndex::Cube& cube = partial[chunk];
            std::vector<VertexId> tau;
            detail::MarkScratch scratch;
            // simplices with identical balls share their neighborhood
            // face-vector; frequent on dense snapshots
            std::unordered_map<std::vector<VertexId>, FaceVector, detail::VertexVecHash> prefix_cache;
            for (std::size_t i = lo; i < hi; ++i) {
                const Simplex& sigma = sigmas[i];
                KBall ball = k_ball_simplex(snap, sigma, k);
                auto cached = prefix_cache.find(ball.members);
                if (cached == prefix_cache.end()) {
                    FaceVector prefix = bulk ? face_table.induced_counts(ball.members, scratch)
                                             : induced_f_vector(snap, ball.members, D);
                    cached = prefix_cache.emplace(ball.members, std::move(prefix)).first;
                }
                FaceVector feature = cached->second;
                for (VertexId v : ball.members) {
                    if (sigma.contains_vertex(v)) continue;
                    feature.push_back(score(store, sigma, v));
                    tau.assign(sigma.vertices().begin(), sigma.vertices().end());
                    tau.insert(std::upper_bound(tau.begin(), tau.end(), v), v);
                    auto& counts = cube[feature];
                    counts.possible += 1;
                    if (fresh.contains(tau)) counts.realized += 1;
                    feature.pop_back();
                }
            }
        });

        FeatureIndex::Cube layer;
        for (const auto& cube : partial) merge_cube(layer, cube);
        merge_cube(index.cube, layer);
        index.layers.push_back(std::move(layer));
    }

    for (const auto& [key, counts] : index.cube) {
        index.possible_total += counts.possible;
        index.realized_total += counts.realized;
    }
    return index;
}

Count lattice_ball_size(const FeatureVector& F, Count delta) {
    if (delta < 0) throw Error(Errc::kInvalidArgument, "delta must be non-negative");
    // ways[r] = #vectors over the coordinates seen so far at L1 distance r.
    std::vector<Count> ways(static_cast<std::size_t>(delta) + 1, 0);
    ways[0] = 1;
    for (Count coord : F) {
        std::vector<Count> next(ways.size(), 0);
        for (std::size_t r = 0; r < ways.size(); ++r) {
            if (ways[r] == 0) continue;
            for (std::size_t e = 0; r + e < next.size(); ++e) {
                Count moves = e == 0 ? 1 : (coord >= static_cast<Count>(e) ? 2 : 1);
                next[r + e] += ways[r] * moves;
            }
        }
        ways = std::move(next);
    }
    Count total = 0;
    for (Count w : ways) total += w;
    return total;
}

double kernel(const FeatureVector& F, const FeatureVector& F2, const KernelParams& params) {
    const Count dist = l1_distance(F, F2);
    const double num =
        (dist == 0 ? 1.0 : 0.0) + params.beta * (dist <= params.delta ? 1.0 : 0.0);
    const double den = 1.0 + params.beta * static_cast<double>(lattice_ball_size(F, params.delta));
    return num / den;
}

double estimate(const FeatureIndex& index, const FeatureVector& F, const KernelParams& params,
                EmptyPolicy policy) {
    if (index.empty()) {
        throw InsufficientDataError(std::numeric_limits<double>::quiet_NaN(),
                                    "estimate on an empty index");
    }
    const BallSums sums = ball_sums(index.cube, F, params.delta);
    const double num =
        static_cast<double>(sums.exact_realized) + params.beta * static_cast<double>(sums.ball_realized);
    const double den =
        static_cast<double>(sums.exact_possible) + params.beta * static_cast<double>(sums.ball_possible);
    if (den == 0.0) {
        const double fallback =
            static_cast<double>(index.realized_total) / static_cast<double>(index.possible_total);
        if (policy == EmptyPolicy::kThrow) {
            throw InsufficientDataError(fallback, "no observations near the queried feature");
        }
        return fallback;
    }
    return num / den;
}

Interval confidence_interval(const FeatureIndex& index, const FeatureVector& F,
                             const KernelParams& params, double level, int n_boot,
                             std::uint64_t seed) {
    if (level < 0.0 || level >= 1.0) {
        throw Error(Errc::kInvalidArgument, "confidence level must lie in [0, 1)");
    }
    if (n_boot < 1) throw Error(Errc::kInvalidArgument, "need at least one bootstrap replicate");
    if (index.layers.size() < 5) {
        throw Error(Errc::kInsufficientSlices, "bootstrap needs at least 5 window slices");
    }
    const double point = estimate(index, F, params);
    if (level == 0.0) return Interval{point, point};

    const std::size_t W = index.layers.size();
    std::vector<BallSums> per_slice(W);
    for (std::size_t i = 0; i < W; ++i) per_slice[i] = ball_sums(index.layers[i], F, params.delta);
    const double base_rate =
        static_cast<double>(index.realized_total) / static_cast<double>(index.possible_total);

    Rng rng(seed);
    std::vector<double> boots(static_cast<std::size_t>(n_boot));
    for (auto& b : boots) {
        BallSums acc;
        for (std::size_t i = 0; i < W; ++i) {
            const BallSums& s = per_slice[static_cast<std::size_t>(rng.uniform(W))];
            acc.exact_possible += s.exact_possible;
            acc.exact_realized += s.exact_realized;
            acc.ball_possible += s.ball_possible;
            acc.ball_realized += s.ball_realized;
        }
        const double num = static_cast<double>(acc.exact_realized) +
                           params.beta * static_cast<double>(acc.ball_realized);
        const double den = static_cast<double>(acc.exact_possible) +
                           params.beta * static_cast<double>(acc.ball_possible);
        b = den == 0.0 ? base_rate : num / den;
    }
    std::sort(boots.begin(), boots.end());
    auto quantile = [&](double q) {
        const double pos = q * static_cast<double>(boots.size() - 1);
        return boots[static_cast<std::size_t>(std::llround(pos))];
    };
    Interval out;
    out.lo = std::min(point, quantile((1.0 - level) / 2.0));
    out.hi = std::max(point, quantile(1.0 - (1.0 - level) / 2.0));
    return out;
}

void dump_index(const FeatureIndex& index, std::ostream& os) {
    os << "# hop-index T=" << index.anchor << " p=" << index.window << " d=" << index.d
       << " k=" << index.k << " D=" << index.D << "\n";
    std::map<FeatureVector, FeatureIndex::Counts> ordered(index.cube.begin(), index.cube.end());
    for (const auto& [key, counts] : ordered) {
        for (std::size_t i = 0; i < key.size(); ++i) {
            if (i) os << ',';
            os << key[i];
        }
        os << '\t' << counts.possible << '\t' << counts.realized << '\n';
    }
}

FeatureIndex load_index(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line.rfind("# hop-index", 0) != 0) {
        throw Error(Errc::kParseError, "missing index header");
    }
    FeatureIndex index;
    {
        std::istringstream hs(line.substr(11));
        std::string token;
        while (hs >> token) {
            auto eq = token.find('=');
            if (eq == std::string::npos) throw Error(Errc::kParseError, "bad header token: " + token);
            const std::string name = token.substr(0, eq);
            long long value = 0;
            try {
                value = std::stoll(token.substr(eq + 1));
            } catch (const std::exception&) {
                throw Error(Errc::kParseError, "bad header value: " + token);
            }
            if (name == "T") index.anchor = static_cast<std::int32_t>(value);
            else if (name == "p") index.window = static_cast<std::int32_t>(value);
            else if (name == "d") index.d = static_cast<int>(value);
            else if (name == "k") index.k = static_cast<int>(value);
            else if (name == "D") index.D = static_cast<int>(value);
            else throw Error(Errc::kParseError, "unknown header field: " + name);
        }
    }
    const std::size_t feature_len = static_cast<std::size_t>(index.D) + 2;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string features;
        long long possible = 0, realized = 0;
        if (!(ls >> features >> possible >> realized)) {
            throw Error(Errc::kParseError, "bad index record: " + line);
        }
        FeatureVector key;
        std::istringstream fs(features);
        std::string item;
        while (std::getline(fs, item, ',')) {
            try {
                key.push_back(std::stoll(item));
            } catch (const std::exception&) {
                throw Error(Errc::kParseError, "bad feature value: " + item);
            }
        }
        if (key.size() != feature_len) {
            throw Error(Errc::kMalformedDataset, "feature length does not match D");
        }
        if (possible < 1 || realized < 0 || realized > possible) {
            throw Error(Errc::kMalformedDataset, "counts must satisfy 0 <= realized <= possible, possible >= 1");
        }
        auto& counts = index.cube[key];
        counts.possible += possible;
        counts.realized += realized;
        index.possible_total += possible;
        index.realized_total += realized;
    }
    return index;
}

}  // namespace hop
