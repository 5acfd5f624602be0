#pragma once

// Big r-Theta approximator: fits value ~ coeff * shape(n) + intercept for a
// set of model families, keeps the best one per metric, and answers
// finite-input questions (crossover, extrapolation) about the result.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rcomplexity/growth.hpp"

namespace rcx {

struct SamplePoint {
  std::int64_t n;
  double value;
};

struct SampleSeries {
  std::string metricName;
  std::string unit;
  std::vector<SamplePoint> points;
};

/// Throws DomainError unless n is strictly increasing and >= 1, values are
/// positive and there are at least 3 points.
void validate(const SampleSeries& series);

enum class Family { Const, Log, Poly, NLogN, Exp };

std::string_view family_name(Family f);
std::optional<Family> family_from_name(std::string_view name);

inline constexpr Family kAllFamilies[] = {Family::Const, Family::Log, Family::Poly, Family::NLogN,
                                          Family::Exp};

struct FitModel {
  Family family = Family::Const;
  double degree = 0.0;  // POLY only
  double coeff = 1.0;
  double intercept = 0.0;
  double score = 0.0;  // RMSE / mean(value); +inf when discarded
};

struct Embedding {
  std::vector<std::pair<SampleSeries, FitModel>> metrics;
};

/// Basis function: 1, log n, n^degree, n log n, 2^n. DomainError for n < 2.
double shape(Family family, double degree, double n);

/// Least-squares fit of value ~ coeff * shape(n) + intercept. A fit with
/// coeff <= 0 comes back with score = +inf. CONST fits carry the level in
/// coeff with intercept 0.
FitModel fit_family(const SampleSeries& series, Family family, double degree = 0.0);

struct FitConfig {
  std::vector<double> degrees{1, 2, 3, 4, 5, 6};
  std::vector<Family> families{std::begin(kAllFamilies), std::end(kAllFamilies)};
};

/// Scores closer than this are ties, broken by simplicity.
inline constexpr double kScoreTieTolerance = 1e-9;

/// Orders models from simplest to fastest growing:
/// CONST < LOG < POLY(d <= 1) < NLOGN < POLY(d > 1) < EXP.
bool simpler_than(const FitModel& a, const FitModel& b);

/// Lowest-score model over the configured families and degrees. Throws
/// NoViableModel when every candidate was discarded.
FitModel fit_best(const SampleSeries& series, const FitConfig& config = {});

/// Fits every series independently (in parallel); output keeps input order.
Embedding fit_embedding(std::vector<SampleSeries> series, const FitConfig& config = {});

struct BridgedFunction {
  GrowthFunction function;
  std::optional<std::string> warning;  // set when a negative intercept was dropped
};

BridgedFunction to_growth_function(const FitModel& model);

/// coeff * shape(n) + intercept. Overflow yields +inf rather than an error.
double extrapolate(const FitModel& model, std::int64_t n);

/// Smallest n >= 2 such that f2(m) > f1(m) at every sampled m in [n, horizon].
/// Sampling covers every integer up to 256, then a geometric grid with ratio
/// 1 + 1/64, then the exact boundary is found by bisection. Empty when f2
/// does not beat f1 at the horizon. DomainError for horizon < 2.
std::optional<std::int64_t> crossover(const GrowthFunction& f1, const GrowthFunction& f2,
                                      std::int64_t horizon);

/// True when f2(n) > f1(n), comparing in log space once evaluate() overflows.
bool strictly_above(const GrowthFunction& f2, const GrowthFunction& f1, std::int64_t n);

}  // namespace rcx
