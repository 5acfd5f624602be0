#include "rcomplexity/oracle.hpp"

#include <algorithm>
#include <cmath>

namespace rcx {

namespace {

// Largest |log ratio| for which exp() stays a normal double.
constexpr double kLogRange = 700.0;

// log of each term relative to a pivot term, so that equal exponential
// bases cancel exactly instead of subtracting two huge n*log(q) values.
double log_relative(const GrowthTerm& t, const GrowthTerm& pivot, double n) {
  const double logn = std::log(n);
  double v = std::log(t.coeff) - std::log(pivot.coeff);
  if (t.expBase != pivot.expBase) v += n * (std::log(t.expBase) - std::log(pivot.expBase));
  if (t.polyExp != pivot.polyExp) v += (t.polyExp - pivot.polyExp) * logn;
  if (t.logExp != pivot.logExp) v += (t.logExp - pivot.logExp) * std::log(logn);
  return v;
}

double log_sum_relative(const GrowthFunction& f, const GrowthTerm& pivot, double n) {
  std::vector<double> logs;
  logs.reserve(f.size());
  for (const auto& t : f.terms()) logs.push_back(log_relative(t, pivot, n));
  const double peak = *std::max_element(logs.begin(), logs.end());
  double acc = 0.0;
  for (double l : logs) acc += std::exp(l - peak);
  return peak + std::log(acc);
}

}  // namespace

OracleEstimate estimate_limit(const GrowthFunction& f, const GrowthFunction& g,
                              OracleSchedule schedule) {
  OracleEstimate est;
  const GrowthTerm& pivot = g.terms().front();
  for (int k = schedule.firstPower; k <= schedule.lastPower; ++k) {
    const double n = std::ldexp(1.0, k);
    const double logRatio = log_sum_relative(f, pivot, n) - log_sum_relative(g, pivot, n);
    if (!std::isfinite(logRatio) || std::abs(logRatio) > kLogRange) break;
    est.samples.emplace_back(n, std::exp(logRatio));
  }
  if (est.samples.size() < 3) return est;

  const auto last = est.samples.size() - 1;
  const double r1 = est.samples[last - 2].second;
  const double r2 = est.samples[last - 1].second;
  const double r3 = est.samples[last].second;

  if (r3 < kOracleZeroBelow && r1 > r2 && r2 > r3) {
    est.classification = OracleEstimate::Kind::Zero;
  } else if (r3 > kOracleInfiniteAbove && r1 < r2 && r2 < r3) {
    est.classification = OracleEstimate::Kind::Infinite;
  } else {
    const double hi = std::max({r1, r2, r3});
    const double lo = std::min({r1, r2, r3});
    if (hi > 0.0 && (hi - lo) / hi < kOracleAgreement) {
      est.classification = OracleEstimate::Kind::Finite;
      est.value = r3;
    }
  }
  return est;
}

std::optional<bool> oracle_member(const OracleEstimate& est, ClassKind kind, double rate) {
  using K = OracleEstimate::Kind;
  const double lo = rate * (1.0 - kOracleAgreement);
  const double hi = rate * (1.0 + kOracleAgreement);
  switch (est.classification) {
    case K::Inconclusive:
      return std::nullopt;
    case K::Zero:
      return kind == ClassKind::BigO || kind == ClassKind::SmallO;
    case K::Infinite:
      return kind == ClassKind::BigOmega || kind == ClassKind::SmallOmega;
    case K::Finite:
      break;
  }
  switch (kind) {
    case ClassKind::BigTheta:
      return est.value >= lo && est.value <= hi;
    case ClassKind::BigO:
      return est.value <= hi;
    case ClassKind::BigOmega:
      return est.value >= lo;
    case ClassKind::SmallO:
    case ClassKind::SmallOmega:
      break;
  }
  return false;
}

bool oracle_agrees(const OracleEstimate& est, const Limit& exact) {
  using K = OracleEstimate::Kind;
  switch (est.classification) {
    case K::Inconclusive:
      return true;
    case K::Zero:
      return exact.is_zero();
    case K::Infinite:
      return exact.is_infinite();
    case K::Finite:
      break;
  }
  return exact.is_finite() &&
         std::abs(est.value - exact.value()) <= kOracleAgreement * exact.value();
}

}  // namespace rcx
