#include "hop/evaluation.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "hop/error.hpp"
#include "hop/feature.hpp"
#include "hop/neighborhood.hpp"
#include "hop/rng.hpp"
#include "json.hpp"
#include "label_set.hpp"

namespace hop {
namespace {

// The sampling population, stored compactly: per origin slice a d-simplex
// table plus (simplex, candidate) entries with their labels. Enumeration
// order is fixed (slices ascending, simplices sorted, candidates ascending),
// so sampling is deterministic given a seed.
struct Population {
    struct SliceEntries {
        std::int32_t origin_slice = 0;
        std::vector<Simplex> sigmas;
        std::vector<std::uint32_t> sigma_id;
        std::vector<VertexId> candidate;
        std::vector<bool> positive;
    };
    std::vector<SliceEntries> slices;
    std::int64_t n_positive = 0;
    std::int64_t n_negative = 0;
};

Population enumerate_population(const Filtration& f, int d, int k, std::int32_t label_slice) {
    const detail::SimplexKeySet fresh = detail::fresh_faces(f, label_slice, d + 2);
    Population pop;
    std::vector<VertexId> tau;
    for (std::int32_t t = 0; t < label_slice; ++t) {
        const ComplexSnapshot& snap = f.snapshots[static_cast<std::size_t>(t)];
        Population::SliceEntries entries;
        entries.origin_slice = t;
        entries.sigmas = simplices_of_dim(snap, d);
        for (std::uint32_t i = 0; i < entries.sigmas.size(); ++i) {
            const Simplex& sigma = entries.sigmas[i];
            const KBall ball = k_ball_simplex(snap, sigma, k);
            for (VertexId v : ball.members) {
                if (sigma.contains_vertex(v)) continue;
                tau.assign(sigma.vertices().begin(), sigma.vertices().end());
                tau.insert(std::upper_bound(tau.begin(), tau.end(), v), v);
                const bool positive = fresh.contains(tau);
                entries.sigma_id.push_back(i);
                entries.candidate.push_back(v);
                entries.positive.push_back(positive);
                (positive ? pop.n_positive : pop.n_negative) += 1;
            }
        }
        pop.slices.push_back(std::move(entries));
    }
    return pop;
}

// Draw n_per_class of each label, uniformly without replacement, walking
// the population in enumeration order. Output order matches the draw order
// of the rank sampler (positives first, then negatives).
std::vector<LabeledSample> sample_from(const Population& pop, int n_per_class, std::uint64_t seed) {
    if (pop.n_positive < n_per_class) {
        throw SampleShortfallError(Errc::kInsufficientPositives, pop.n_positive,
                                   "only " + std::to_string(pop.n_positive) +
                                       " positive samples exist");
    }
    if (pop.n_negative < n_per_class) {
        throw SampleShortfallError(Errc::kInsufficientNegatives, pop.n_negative,
                                   "only " + std::to_string(pop.n_negative) +
                                       " negative samples exist");
    }

    Rng rng(seed);
    const auto n = static_cast<std::size_t>(n_per_class);
    // rank -> emit position, preserving the sampler's draw order
    std::unordered_map<std::size_t, std::size_t> want_pos, want_neg;
    {
        const auto pos_ranks =
            rng.sample_indices(static_cast<std::size_t>(pop.n_positive), n);
        const auto neg_ranks =
            rng.sample_indices(static_cast<std::size_t>(pop.n_negative), n);
        for (std::size_t i = 0; i < n; ++i) {
            want_pos.emplace(pos_ranks[i], i);
            want_neg.emplace(neg_ranks[i], n + i);
        }
    }

    std::vector<std::pair<std::size_t, LabeledSample>> picked;
    picked.reserve(2 * n);
    std::size_t pos_rank = 0, neg_rank = 0;
    for (const auto& entries : pop.slices) {
        for (std::size_t i = 0; i < entries.candidate.size(); ++i) {
            const std::size_t rank = entries.positive[i] ? pos_rank++ : neg_rank++;
            const auto& want = entries.positive[i] ? want_pos : want_neg;
            const auto it = want.find(rank);
            if (it == want.end()) continue;
            picked.emplace_back(it->second,
                                LabeledSample{entries.sigmas[entries.sigma_id[i]],
                                              entries.candidate[i], entries.origin_slice,
                                              static_cast<bool>(entries.positive[i])});
        }
    }
    std::sort(picked.begin(), picked.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<LabeledSample> out;
    out.reserve(picked.size());
    for (auto& [pos, sample] : picked) out.push_back(std::move(sample));
    return out;
}

double elapsed_seconds(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

std::vector<LabeledSample> sample_candidates(const Filtration& f, int d, int k, int n_per_class,
                                             std::uint64_t seed, std::int32_t label_slice) {
    if (f.num_slices() < 2) throw Error(Errc::kInvalidArgument, "need at least 2 slices");
    if (n_per_class < 1) throw Error(Errc::kInvalidArgument, "n_per_class must be positive");
    if (label_slice < 0) label_slice = f.num_slices() - 1;
    if (label_slice < 1 || label_slice >= f.num_slices()) {
        throw Error(Errc::kInvalidArgument, "label slice out of range");
    }
    return sample_from(enumerate_population(f, d, k, label_slice), n_per_class, seed);
}

double auc(const std::vector<double>& scores, const std::vector<bool>& labels) {
    if (scores.size() != labels.size()) {
        throw Error(Errc::kDimensionMismatch, "scores and labels differ in length");
    }
    std::size_t n_pos = 0;
    for (bool l : labels) n_pos += l ? 1 : 0;
    const std::size_t n_neg = labels.size() - n_pos;
    if (n_pos == 0 || n_neg == 0) {
        throw Error(Errc::kDegenerateLabels, "AUC needs both classes");
    }

    std::vector<std::size_t> order(scores.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&scores](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });

    // Rank sum of positives with average ranks over tie groups.
    double rank_sum_pos = 0.0;
    std::size_t i = 0;
    while (i < order.size()) {
        std::size_t j = i;
        while (j < order.size() && scores[order[j]] == scores[order[i]]) ++j;
        const double avg_rank = static_cast<double>(i + 1 + j) / 2.0;  // 1-based ranks i+1..j
        for (std::size_t m = i; m < j; ++m) {
            if (labels[order[m]]) rank_sum_pos += avg_rank;
        }
        i = j;
    }
    const double u = rank_sum_pos - static_cast<double>(n_pos) * (static_cast<double>(n_pos) + 1.0) / 2.0;
    return u / (static_cast<double>(n_pos) * static_cast<double>(n_neg));
}

Method method_from_name(const std::string& name) {
    if (name == "ours") return Method::kOurs;
    if (name == "aa") return Method::kAdamicAdar;
    if (name == "jc") return Method::kJaccard;
    if (name == "pa") return Method::kPreferentialAttachment;
    throw Error(Errc::kInvalidArgument, "unknown method: " + name);
}

std::string method_name(Method m) {
    switch (m) {
        case Method::kOurs: return "ours";
        case Method::kAdamicAdar: return "aa";
        case Method::kJaccard: return "jc";
        case Method::kPreferentialAttachment: return "pa";
    }
    return "?";
}

std::string to_json(const EvalReport& report) {
    nlohmann::json j{{"auc", report.auc},
                     {"runtime_seconds", report.runtime_seconds},
                     {"beta_selected", report.beta_selected},
                     {"n_samples", report.n_samples},
                     {"repeats", report.repeats}};
    return j.dump();
}

namespace {

std::vector<FeatureVector> extract_features(const Filtration& f,
                                            const std::vector<LabeledSample>& samples, int k,
                                            int D) {
    std::vector<FeatureVector> features;
    features.reserve(samples.size());
    for (const LabeledSample& s : samples) {
        const auto t = static_cast<std::size_t>(s.origin_slice);
        features.push_back(extract(f.snapshots[t], f.cooccurrence[t], s.simplex, s.candidate, k, D));
    }
    return features;
}

std::vector<double> estimate_all(const FeatureIndex& index, const std::vector<FeatureVector>& features,
                                 const KernelParams& params) {
    std::vector<double> scores;
    scores.reserve(features.size());
    for (const FeatureVector& F : features) {
        scores.push_back(estimate(index, F, params, EmptyPolicy::kBaseRate));
    }
    return scores;
}

}  // namespace

std::vector<double> score_samples(const Filtration& f, const std::vector<LabeledSample>& samples,
                                  const FeatureIndex& index, const KernelParams& params) {
    return estimate_all(index, extract_features(f, samples, index.k, index.D), params);
}

std::vector<double> score_samples(const Filtration& f, const std::vector<LabeledSample>& samples,
                                  BaselineMethod method) {
    std::vector<double> scores;
    scores.reserve(samples.size());
    for (const LabeledSample& s : samples) {
        scores.push_back(
            baseline_score(method, f.snapshots[static_cast<std::size_t>(s.origin_slice)], s.simplex,
                           s.candidate));
    }
    return scores;
}

namespace {

struct Fold {
    std::int32_t label_slice;
    FeatureIndex index;
};

std::int32_t fold_label_slice(const Filtration& f, int j) {
    const std::int32_t label_slice = f.num_slices() - 1 - j;
    if (label_slice < 3) {
        throw Error(Errc::kInvalidArgument, "too few slices for the requested fold count");
    }
    return label_slice;
}

std::vector<Fold> build_folds(const Filtration& f, int K, const ExperimentConfig& cfg) {
    std::vector<Fold> folds;
    for (int j = 1; j <= K; ++j) {
        const std::int32_t label_slice = fold_label_slice(f, j);
        const std::int32_t anchor = label_slice - 2;
        FeatureIndex index = build_index(f, anchor, anchor, cfg.d, cfg.k, cfg.resolved_D(), cfg.jobs);
        index.layers.clear();  // tuning never bootstraps; keep fold memory flat
        index.layers.shrink_to_fit();
        folds.push_back({label_slice, std::move(index)});
    }
    return folds;
}

// One fold's balanced samples for every repeat, drawn while the fold's
// population is alive; the population is dropped before the next fold so
// only one exists at a time.
std::vector<std::vector<LabeledSample>> draw_fold_repeats(const Filtration& f, int d, int k,
                                                          std::int32_t label_slice, int n_per_class,
                                                          const std::vector<std::uint64_t>& seeds) {
    const Population population = enumerate_population(f, d, k, label_slice);
    std::vector<std::vector<LabeledSample>> out;
    out.reserve(seeds.size());
    for (std::uint64_t seed : seeds) out.push_back(sample_from(population, n_per_class, seed));
    return out;
}

double select_beta(const Filtration& f, std::vector<double> betas, const std::vector<Fold>& folds,
                   const ExperimentConfig& cfg,
                   const std::vector<std::vector<LabeledSample>>& fold_samples) {
    std::sort(betas.begin(), betas.end());  // ties resolve toward the smaller beta
    double best_beta = betas.front();
    double best_mean = -1.0;
    std::vector<std::vector<FeatureVector>> fold_features;
    std::vector<std::vector<bool>> fold_labels;
    for (std::size_t j = 0; j < folds.size(); ++j) {
        std::vector<bool> labels;
        labels.reserve(fold_samples[j].size());
        for (const auto& s : fold_samples[j]) labels.push_back(s.positive);
        fold_features.push_back(extract_features(f, fold_samples[j], cfg.k, cfg.resolved_D()));
        fold_labels.push_back(std::move(labels));
    }
    for (double beta : betas) {
        double mean = 0.0;
        for (std::size_t j = 0; j < folds.size(); ++j) {
            const auto scores =
                estimate_all(folds[j].index, fold_features[j], KernelParams{beta, cfg.delta});
            mean += auc(scores, fold_labels[j]);
        }
        mean /= static_cast<double>(folds.size());
        if (mean > best_mean) {
            best_mean = mean;
            best_beta = beta;
        }
    }
    return best_beta;
}

}  // namespace

double cross_validate_beta(const Filtration& f, const std::vector<double>& betas, int K,
                           const ExperimentConfig& cfg, std::uint64_t seed) {
    if (betas.empty()) throw Error(Errc::kEmptyGrid, "beta grid is empty");
    if (betas.size() == 1) return betas.front();
    if (K < 2) throw Error(Errc::kInvalidArgument, "need at least 2 folds");
    if (f.num_slices() <= K + 1) throw Error(Errc::kInvalidArgument, "need more slices than folds+1");
    const std::vector<Fold> folds = build_folds(f, K, cfg);
    std::vector<std::vector<LabeledSample>> fold_samples;
    for (std::size_t j = 0; j < folds.size(); ++j) {
        fold_samples.push_back(draw_fold_repeats(f, cfg.d, cfg.k, folds[j].label_slice,
                                                 cfg.n_per_class,
                                                 {Rng::derive(seed, 17 + j)})[0]);
    }
    return select_beta(f, betas, folds, cfg, fold_samples);
}

EvalReport run_experiment(const Filtration& f, const ExperimentConfig& cfg) {
    if (cfg.repeats < 1) throw Error(Errc::kInvalidArgument, "repeats must be positive");
    const std::int32_t label_slice = f.num_slices() - 1;
    const std::int32_t anchor = label_slice - 2;
    if (cfg.method == Method::kOurs && anchor < 1) {
        throw Error(Errc::kInvalidArgument, "too few slices to anchor the index");
    }
    if (cfg.method == Method::kOurs && cfg.beta_grid.empty()) {
        throw Error(Errc::kEmptyGrid, "beta grid is empty");
    }

    // Fold indexes and the per-repeat sample draws depend only on the
    // filtration and the seeds; prepare them up front, one population at a
    // time, so a single population is ever in memory. Only the final
    // scoring work is timed per repeat.
    std::vector<std::uint64_t> repeat_seeds;
    for (int r = 0; r < cfg.repeats; ++r) {
        repeat_seeds.push_back(Rng::derive(cfg.seed, 1000 + static_cast<std::uint64_t>(r)));
    }

    std::vector<Fold> folds;
    std::vector<std::vector<std::vector<LabeledSample>>> fold_samples;  // [fold][repeat]
    const bool tune = cfg.method == Method::kOurs && cfg.beta_grid.size() > 1;
    if (tune) {
        if (cfg.cv_folds < 2) throw Error(Errc::kInvalidArgument, "need at least 2 folds");
        if (f.num_slices() <= cfg.cv_folds + 1) {
            throw Error(Errc::kInvalidArgument, "need more slices than folds+1");
        }
        folds = build_folds(f, cfg.cv_folds, cfg);
        for (std::size_t j = 0; j < folds.size(); ++j) {
            std::vector<std::uint64_t> seeds;
            for (std::uint64_t rs : repeat_seeds) seeds.push_back(Rng::derive(rs, 17 + j));
            fold_samples.push_back(draw_fold_repeats(f, cfg.d, cfg.k, folds[j].label_slice,
                                                     cfg.n_per_class, seeds));
        }
    }
    std::vector<std::vector<LabeledSample>> final_samples;
    {
        std::vector<std::uint64_t> seeds;
        for (std::uint64_t rs : repeat_seeds) seeds.push_back(Rng::derive(rs, 99));
        final_samples = draw_fold_repeats(f, cfg.d, cfg.k, label_slice, cfg.n_per_class, seeds);
    }

    EvalReport report;
    report.repeats = cfg.repeats;
    report.n_samples = 2LL * cfg.n_per_class;
    std::map<double, int> beta_votes;
    double auc_sum = 0.0, runtime_sum = 0.0;

    for (int r = 0; r < cfg.repeats; ++r) {
        double beta = 0.0;
        if (cfg.method == Method::kOurs) {
            if (tune) {
                std::vector<std::vector<LabeledSample>> this_repeat;
                for (std::size_t j = 0; j < folds.size(); ++j) {
                    this_repeat.push_back(fold_samples[j][static_cast<std::size_t>(r)]);
                }
                beta = select_beta(f, cfg.beta_grid, folds, cfg, this_repeat);
            } else {
                beta = cfg.beta_grid.front();
            }
        }
        const auto& samples = final_samples[static_cast<std::size_t>(r)];
        std::vector<bool> labels;
        labels.reserve(samples.size());
        for (const auto& s : samples) labels.push_back(s.positive);

        const auto start = std::chrono::steady_clock::now();
        std::vector<double> scores;
        if (cfg.method == Method::kOurs) {
            FeatureIndex index = build_index(f, anchor, anchor, cfg.d, cfg.k, cfg.resolved_D(), cfg.jobs);
            scores = score_samples(f, samples, index, KernelParams{beta, cfg.delta});
        } else {
            BaselineMethod bm = cfg.method == Method::kAdamicAdar ? BaselineMethod::kAdamicAdar
                                : cfg.method == Method::kJaccard
                                    ? BaselineMethod::kJaccard
                                    : BaselineMethod::kPreferentialAttachment;
            scores = score_samples(f, samples, bm);
        }
        runtime_sum += elapsed_seconds(start);
        auc_sum += auc(scores, labels);
        if (cfg.method == Method::kOurs) beta_votes[beta] += 1;
    }

    report.auc = auc_sum / cfg.repeats;
    report.runtime_seconds = runtime_sum / cfg.repeats;
    if (!beta_votes.empty()) {
        int best = 0;
        for (const auto& [beta, votes] : beta_votes) {  // ascending: ties keep the smaller beta
            if (votes > best) {
                best = votes;
                report.beta_selected = beta;
            }
        }
    }
    return report;
}

}  // namespace hop
