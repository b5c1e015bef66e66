#include "hop/synthetic.hpp"

#include <algorithm>
#include <cmath>

#include "hop/error.hpp"
#include "hop/feature.hpp"
#include "hop/neighborhood.hpp"
#include "hop/rng.hpp"

namespace hop {
namespace {

// One pod: vertices [base, base+d+1]; the first d+1 form the closed core
// simplex, the last is the antenna attached to a seeded core vertex.
// Heavy pods repeat the antenna arrival, shifting the pair score by one.
void pod_arrivals(std::vector<Simplex>& arrivals, VertexId base, int d, bool heavy, Rng& rng) {
    std::vector<VertexId> core(static_cast<std::size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) core[static_cast<std::size_t>(i)] = base + i;
    const VertexId antenna = base + d + 1;
    const VertexId attach = base + static_cast<VertexId>(rng.uniform(static_cast<std::uint64_t>(d) + 1));
    arrivals.push_back(make_simplex(core));
    arrivals.push_back(make_simplex({attach, antenna}));
    if (heavy) arrivals.push_back(make_simplex({attach, antenna}));
}

bool draw_heavy(const SyntheticConfig& config, Rng& rng) {
    // guarded so that configs without heavy pods keep their draw sequence
    return config.heavy_fraction > 0.0 && rng.bernoulli(config.heavy_fraction);
}

}  // namespace

Filtration generate(const SyntheticConfig& config) {
    if (config.T < 2) throw Error(Errc::kInvalidArgument, "need at least 2 slices");
    if (config.d < 1) throw Error(Errc::kInvalidArgument, "d must be at least 1");
    const int D = config.resolved_D();
    const int pod_width = config.d + 2;
    Rng rng(config.seed);

    VertexId next_vertex = 0;
    auto can_birth = [&] { return next_vertex + pod_width <= config.n_vertices; };

    Filtration f;
    {
        std::vector<Simplex> start;
        for (int i = 0; i < config.start_pods && can_birth(); ++i) {
            pod_arrivals(start, next_vertex, config.d, draw_heavy(config, rng), rng);
            next_vertex += pod_width;
        }
        f.append_slice(std::move(start));
    }
    if (simplices_of_dim(f.snapshots[0], config.d).empty()) {
        throw Error(Errc::kDegenerateStart, "start snapshot has no d-simplices");
    }

    std::vector<VertexId> tau;
    for (std::int32_t t = 0; t + 1 < config.T; ++t) {
        const ComplexSnapshot& snap = f.snapshots[static_cast<std::size_t>(t)];
        const CoOccurrenceStore& store = f.cooccurrence[static_cast<std::size_t>(t)];
        std::vector<Simplex> arrivals;
        for (const Simplex& sigma : simplices_of_dim(snap, config.d)) {
            KBall ball = k_ball_simplex(snap, sigma, config.k);
            FaceVector feature = induced_f_vector(snap, ball.members, D);
            for (VertexId v : ball.members) {
                if (sigma.contains_vertex(v)) continue;
                tau.assign(sigma.vertices().begin(), sigma.vertices().end());
                tau.insert(std::upper_bound(tau.begin(), tau.end(), v), v);
                Simplex candidate = make_simplex(tau);
                if (snap.contains(candidate)) continue;  // already arrived; a draw would be a no-op
                feature.push_back(score(store, sigma, v));
                const double p = config.ground_truth(feature);
                feature.pop_back();
                if (rng.bernoulli(p)) arrivals.push_back(std::move(candidate));
            }
        }
        if (config.birth_period > 0 && (t + 1) % config.birth_period == 0) {
            for (int i = 0; i < config.pods_per_birth && can_birth(); ++i) {
                pod_arrivals(arrivals, next_vertex, config.d, draw_heavy(config, rng), rng);
                next_vertex += pod_width;
            }
        }
        f.append_slice(std::move(arrivals));
    }
    return f;
}

FeatureIndex index_of(const Filtration& f, const SyntheticConfig& config) {
    const std::int32_t anchor = f.num_slices() - 2;
    return build_index(f, anchor, anchor, config.d, config.k, config.resolved_D());
}

FeatureVector pick_probe_feature(const FeatureIndex& index) {
    const FeatureVector* best = nullptr;
    Count best_possible = -1;
    for (const auto& [key, counts] : index.cube) {
        if (counts.realized == 0 || counts.realized == counts.possible) continue;
        if (counts.possible > best_possible ||
            (counts.possible == best_possible && key < *best)) {
            best = &key;
            best_possible = counts.possible;
        }
    }
    if (best == nullptr) {
        throw Error(Errc::kDegenerateDistribution,
                    "no feature with a non-degenerate arrival rate");
    }
    return *best;
}

std::vector<ConsistencyRow> consistency_experiment(const SyntheticConfig& config,
                                                   const std::vector<int>& T_grid, int replicates,
                                                   std::optional<double> fixed_beta) {
    if (replicates < 1) throw Error(Errc::kInvalidArgument, "replicates must be positive");
    for (std::size_t i = 1; i < T_grid.size(); ++i) {
        if (T_grid[i] <= T_grid[i - 1]) {
            throw Error(Errc::kInvalidArgument, "T grid must be ascending");
        }
    }
    std::vector<ConsistencyRow> rows;
    for (int T : T_grid) {
        SyntheticConfig cfg = config;
        cfg.T = T;
        const KernelParams params{fixed_beta.value_or(1.0 / static_cast<double>(T)), 1};

        cfg.seed = Rng::derive(config.seed, 0xdead0000u + static_cast<std::uint64_t>(T));
        const FeatureVector probe = pick_probe_feature(index_of(generate(cfg), cfg));
        const double truth = config.ground_truth(probe);

        double err = 0.0;
        for (int r = 0; r < replicates; ++r) {
            cfg.seed = Rng::derive(config.seed,
                                   static_cast<std::uint64_t>(T) * 100003u + static_cast<std::uint64_t>(r));
            const FeatureIndex index = index_of(generate(cfg), cfg);
            err += std::abs(estimate(index, probe, params, EmptyPolicy::kBaseRate) - truth);
        }
        rows.push_back({T, err / replicates});
    }
    return rows;
}

NormalityResult normality_experiment(const SyntheticConfig& config, int T, int replicates) {
    if (replicates < 100) {
        throw Error(Errc::kInvalidArgument, "normality check needs at least 100 replicates");
    }
    SyntheticConfig cfg = config;
    cfg.T = T;
    const KernelParams params{std::pow(static_cast<double>(T), -0.6), 1};

    cfg.seed = Rng::derive(config.seed, 0xbeef0000u + static_cast<std::uint64_t>(T));
    const FeatureVector probe = pick_probe_feature(index_of(generate(cfg), cfg));
    const double truth = config.ground_truth(probe);

    NormalityResult out;
    out.z_values.reserve(static_cast<std::size_t>(replicates));
    for (int r = 0; r < replicates; ++r) {
        cfg.seed = Rng::derive(config.seed, 0x70000000u + static_cast<std::uint64_t>(r));
        const FeatureIndex index = index_of(generate(cfg), cfg);
        const double est = estimate(index, probe, params, EmptyPolicy::kBaseRate);
        out.z_values.push_back(std::sqrt(static_cast<double>(T)) * (est - truth));
    }

    double mean = 0.0;
    for (double z : out.z_values) mean += z;
    mean /= replicates;
    double var = 0.0;
    for (double z : out.z_values) var += (z - mean) * (z - mean);
    var /= replicates > 1 ? replicates - 1 : 1;
    out.empirical_variance = var;

    const auto [d_stat, p] = ks_against_normal(out.z_values);
    out.ks_statistic = d_stat;
    out.p_value = p;
    return out;
}

std::pair<double, double> ks_against_normal(const std::vector<double>& values) {
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= static_cast<double>(values.size());
    double var = 0.0;
    for (double v : values) var += (v - mean) * (v - mean);
    var /= values.size() > 1 ? static_cast<double>(values.size() - 1) : 1.0;
    if (var <= 0.0) {
        throw Error(Errc::kDegenerateDistribution, "sample has zero variance");
    }

    std::vector<double> z = values;
    const double sd = std::sqrt(var);
    for (double& v : z) v = (v - mean) / sd;
    std::sort(z.begin(), z.end());

    const auto n = static_cast<double>(z.size());
    double d_stat = 0.0;
    for (std::size_t i = 0; i < z.size(); ++i) {
        const double cdf = 0.5 * std::erfc(-z[i] / std::sqrt(2.0));
        d_stat = std::max(d_stat, std::abs(cdf - static_cast<double>(i) / n));
        d_stat = std::max(d_stat, std::abs(static_cast<double>(i + 1) / n - cdf));
    }

    // Asymptotic Kolmogorov tail with the Stephens small-sample correction.
    const double lambda = (std::sqrt(n) + 0.12 + 0.11 / std::sqrt(n)) * d_stat;
    double q = 0.0;
    for (int j = 1; j <= 100; ++j) {
        const double term = 2.0 * std::exp(-2.0 * j * j * lambda * lambda);
        q += (j % 2 == 1) ? term : -term;
    }
    return {d_stat, std::clamp(q, 0.0, 1.0)};
}

}  // namespace hop
