#pragma once

#include <stdexcept>
#include <string>

namespace hop {

enum class Errc {
    kInvalidSimplex,
    kInvalidDimension,
    kUnknownVertex,
    kSimplexNotPresent,
    kSliceOrderViolation,
    kVertexAlreadyMember,
    kCandidateOutsideBall,
    kDimensionMismatch,
    kInsufficientData,
    kInsufficientSlices,
    kLabelSliceMissing,
    kMalformedDataset,
    kParseError,
    kTooManySlices,
    kInsufficientPositives,
    kInsufficientNegatives,
    kDegenerateLabels,
    kEmptyGrid,
    kDegenerateStart,
    kDegenerateDistribution,
    kInvalidArgument,
};

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const noexcept { return code_; }

  private:
    Errc code_;
};

/// Empty estimator denominator. Carries the global base rate so the caller
/// can fall back to it.
class InsufficientDataError : public Error {
  public:
    InsufficientDataError(double fallback, const std::string& what)
        : Error(Errc::kInsufficientData, what), fallback_(fallback) {}
    double fallback() const noexcept { return fallback_; }

  private:
    double fallback_;
};

/// Sampler could not fill a class. Carries the achievable count.
class SampleShortfallError : public Error {
  public:
    SampleShortfallError(Errc code, long long achievable, const std::string& what)
        : Error(code, what), achievable_(achievable) {}
    long long achievable() const noexcept { return achievable_; }

  private:
    long long achievable_;
};

}  // namespace hop
