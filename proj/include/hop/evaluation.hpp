#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hop/baselines.hpp"
#include "hop/estimator.hpp"
#include "hop/filtration.hpp"

namespace hop {

/// One evaluation unit: a d-simplex observed at origin_slice paired with a
/// candidate from its k-ball. Positive iff the (d+1)-simplex is contained
/// in the label slice's snapshot and not in the one before it.
struct LabeledSample {
    Simplex simplex;
    VertexId candidate = -1;
    std::int32_t origin_slice = 0;
    bool positive = false;
};

/// Draw exactly n_per_class positives and negatives, uniformly without
/// replacement, from the population of all (origin slice, d-simplex,
/// ball candidate) triples with origins before the label slice.
/// label_slice -1 means the final slice. Throws InsufficientPositives /
/// InsufficientNegatives (carrying the achievable count) on shortfall.
std::vector<LabeledSample> sample_candidates(const Filtration& f, int d, int k, int n_per_class,
                                             std::uint64_t seed, std::int32_t label_slice = -1);

/// Probability that a random positive outranks a random negative; ties
/// count one half. Throws DegenerateLabels unless both classes appear.
double auc(const std::vector<double>& scores, const std::vector<bool>& labels);

enum class Method { kOurs, kAdamicAdar, kJaccard, kPreferentialAttachment };

Method method_from_name(const std::string& name);
std::string method_name(Method m);

struct ExperimentConfig {
    Method method = Method::kOurs;
    int d = 1;
    int k = 1;
    int D = -1;  ///< -1 resolves to d+2
    Count delta = 1;
    std::vector<double> beta_grid{0.01, 0.1, 1.0, 10.0};
    int cv_folds = 3;
    int n_per_class = 100;
    int repeats = 10;
    std::uint64_t seed = 1;
    int jobs = 1;

    int resolved_D() const { return D < 0 ? d + 2 : D; }
};

struct EvalReport {
    double auc = 0.0;
    double runtime_seconds = 0.0;
    double beta_selected = 0.0;
    std::int64_t n_samples = 0;
    int repeats = 0;
};

std::string to_json(const EvalReport& report);

/// Feature-extract and estimate each sample at its origin slice against a
/// prebuilt index.
std::vector<double> score_samples(const Filtration& f, const std::vector<LabeledSample>& samples,
                                  const FeatureIndex& index, const KernelParams& params);

/// Baseline scores on the origin slice's 1-skeleton.
std::vector<double> score_samples(const Filtration& f, const std::vector<LabeledSample>& samples,
                                  BaselineMethod method);

/// K-fold selection of beta: fold j uses label slice (T-1)-j with the index
/// anchored two slices earlier; the beta with the best mean fold AUC wins,
/// ties toward the smaller value. A single-element grid is returned as-is.
double cross_validate_beta(const Filtration& f, const std::vector<double>& betas, int K,
                           const ExperimentConfig& cfg, std::uint64_t seed);

/// The full protocol: per repeat, select beta by CV, draw a fresh balanced
/// sample set for the final label slice, rebuild the scoring index, score,
/// and report the mean AUC and mean wall-clock of index build + scoring.
EvalReport run_experiment(const Filtration& f, const ExperimentConfig& cfg);

}  // namespace hop
