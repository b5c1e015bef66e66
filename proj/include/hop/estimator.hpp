#pragma once

#include <cstdint>
#include <iosfwd>
#include <unordered_map>
#include <vector>

#include "hop/filtration.hpp"
#include "hop/types.hpp"

namespace hop {

/// Discrete-kernel parameters: bandwidth beta and L1 radius delta.
struct KernelParams {
    double beta = 0.0;
    Count delta = 1;
};

/// Aggregated observation counts ("data cube"): for every observed feature
/// vector, how many (simplex, candidate) pairs carried it (possible) and how
/// many of those formed the (d+1)-simplex in the next slice (realized).
struct FeatureIndex {
    struct Counts {
        Count possible = 0;
        Count realized = 0;
    };
    using Cube = std::unordered_map<FeatureVector, Counts, FeatureVectorHash>;

    Cube cube;
    /// Per-window-slice contributions (cube == sum of layers). Needed by the
    /// bootstrap; empty for indexes restored from a dump.
    std::vector<Cube> layers;

    std::int32_t anchor = 0;  ///< last slice whose pairs are included (T)
    std::int32_t window = 0;  ///< number of slices before the anchor (p)
    int d = 1;
    int k = 1;
    int D = 3;
    Count possible_total = 0;
    Count realized_total = 0;

    bool empty() const noexcept { return cube.empty(); }
};

/// Scan slices t' in [anchor - window, anchor]: every d-simplex of the
/// snapshot paired with every candidate in its k-ball contributes one
/// observation; the observation is realized iff the (d+1)-simplex is
/// contained in slice t'+1 but not in slice t'. Requires slice anchor+1
/// (LabelSliceMissing otherwise).
FeatureIndex build_index(const Filtration& f, std::int32_t anchor, std::int32_t window, int d, int k,
                         int D, int jobs = 1);

/// Number of non-negative integer vectors of the same length within L1
/// distance delta of F (coordinates cannot go below zero).
Count lattice_ball_size(const FeatureVector& F, Count delta);

/// Discrete kernel: (1[F==F2] + beta*1[||F-F2||_1 <= delta]) /
/// (1 + beta*|Gamma(F, delta)|).
double kernel(const FeatureVector& F, const FeatureVector& F2, const KernelParams& params);

enum class EmptyPolicy {
    kBaseRate,  ///< empty denominator falls back to the global base rate
    kThrow,     ///< empty denominator raises InsufficientData
};

/// The estimator in ratio form: kernel-weighted realized counts over
/// kernel-weighted possible counts; the kernel's normalizing constant
/// cancels. Result is in [0, 1]. A feature with an empty denominator is
/// resolved per policy; an entirely empty index always throws.
double estimate(const FeatureIndex& index, const FeatureVector& F, const KernelParams& params,
                EmptyPolicy policy = EmptyPolicy::kBaseRate);

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

/// Percentile interval from a moving-block bootstrap over the window's
/// slice contributions (block = one slice). The interval always contains
/// the point estimate; level 0 collapses to it. Requires at least 5 slices
/// of layers (InsufficientSlices).
Interval confidence_interval(const FeatureIndex& index, const FeatureVector& F,
                             const KernelParams& params, double level, int n_boot,
                             std::uint64_t seed);

/// Line-oriented dump: a header carrying (T, p, d, k, D), then one record
/// per feature: comma-separated ints, TAB, possible, TAB, realized.
void dump_index(const FeatureIndex& index, std::ostream& os);
FeatureIndex load_index(std::istream& is);

}  // namespace hop
