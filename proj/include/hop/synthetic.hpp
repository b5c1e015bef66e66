#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hop/estimator.hpp"
#include "hop/filtration.hpp"
#include "hop/types.hpp"

namespace hop {

/// Known arrival-probability function of the feature vector.
struct GroundTruth {
    enum class Kind { kConstant, kScoreStep };
    Kind kind = Kind::kConstant;
    double value = 0.0;      ///< kConstant
    double below = 0.0;      ///< kScoreStep: probability when score < threshold
    double at_or_above = 0.0;
    Count threshold = 0;

    double operator()(const FeatureVector& F) const {
        if (kind == Kind::kConstant) return value;
        return F.back() < threshold ? below : at_or_above;
    }

    static GroundTruth constant(double p) {
        GroundTruth g;
        g.kind = Kind::kConstant;
        g.value = p;
        return g;
    }
    static GroundTruth score_step(double below, double at_or_above, Count threshold) {
        GroundTruth g;
        g.kind = Kind::kScoreStep;
        g.below = below;
        g.at_or_above = at_or_above;
        g.threshold = threshold;
        return g;
    }
};

/// Synthetic filtration family: "pods" (a closed d-simplex plus one antenna
/// edge on fresh vertices, each pod its own component) seeded at slice 0 and
/// born every birth_period slices, evolved by Bernoulli(g(F)) draws over all
/// (d-simplex, ball candidate) pairs whose (d+1)-simplex is not yet present.
/// For d >= 2 a live pod exposes exactly one candidate pair, so the realized
/// arrival law per feature equals g exactly.
struct SyntheticConfig {
    int n_vertices = 2000;  ///< vertex pool cap; births stop when exhausted
    int T = 50;
    int d = 2;
    int k = 1;
    int D = -1;  ///< -1 resolves to d+2
    GroundTruth ground_truth = GroundTruth::score_step(0.1, 0.0, 2);
    std::uint64_t seed = 1;
    int birth_period = 5;  ///< <= 0 disables births after slice 0
    int pods_per_birth = 1;
    int start_pods = 3;
    /// Probability that a pod is born "heavy": its antenna edge arrives
    /// twice, shifting the pair's score by one. Heavy and light pods sit
    /// one L1 step apart in feature space, so a non-vanishing bandwidth
    /// mixes their arrival rates while beta -> 0 keeps them separate.
    double heavy_fraction = 0.0;

    int resolved_D() const { return D < 0 ? d + 2 : D; }
};

/// Reproducible under (config, seed). Throws DegenerateStart when slice 0
/// ends up with no d-simplices.
Filtration generate(const SyntheticConfig& config);

/// Build the full-history index of a generated filtration (anchor T-2).
FeatureIndex index_of(const Filtration& f, const SyntheticConfig& config);

/// Most frequent feature with a non-degenerate arrival rate
/// (0 < realized < possible); distribution probes need a feature whose
/// limiting variance is positive. Throws DegenerateDistribution when no
/// such feature exists.
FeatureVector pick_probe_feature(const FeatureIndex& index);

struct ConsistencyRow {
    int T = 0;
    double mean_abs_error = 0.0;
};

/// Mean |estimate(F) - g(F)| over replicates at each T, with beta = 1/T
/// unless fixed_beta overrides it (used to contrast a non-vanishing
/// bandwidth against the vanishing schedule).
std::vector<ConsistencyRow> consistency_experiment(const SyntheticConfig& config,
                                                   const std::vector<int>& T_grid, int replicates,
                                                   std::optional<double> fixed_beta = {});

struct NormalityResult {
    double ks_statistic = 0.0;
    double p_value = 0.0;
    double empirical_variance = 0.0;
    std::vector<double> z_values;
};

/// Kolmogorov-Smirnov statistic and p-value of a sample against the
/// standard normal after standardizing by the sample mean and stddev.
/// Throws DegenerateDistribution on zero variance.
std::pair<double, double> ks_against_normal(const std::vector<double>& values);

/// z_r = sqrt(T)(estimate - g) across replicates at the probe feature with
/// beta = T^-0.6, standardized and tested against the standard normal
/// (Kolmogorov-Smirnov). Requires replicates >= 100; throws
/// DegenerateDistribution on zero empirical variance.
NormalityResult normality_experiment(const SyntheticConfig& config, int T, int replicates);

}  // namespace hop
