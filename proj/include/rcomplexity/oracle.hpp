#pragma once

// Numeric referee for limit_ratio: evaluates f(n)/g(n) along n = 2^k and
// classifies the trend. Shares nothing with the symbolic path except term
// evaluation.

#include <optional>
#include <utility>
#include <vector>

#include "rcomplexity/growth.hpp"
#include "rcomplexity/rclass.hpp"

namespace rcx {

struct OracleSchedule {
  int firstPower = 4;
  int lastPower = 40;
};

struct OracleEstimate {
  enum class Kind { Zero, Finite, Infinite, Inconclusive };

  Kind classification = Kind::Inconclusive;
  double value = 0.0;  // last sampled ratio when Finite
  std::vector<std::pair<double, double>> samples;  // (n, f(n)/g(n))
};

inline constexpr double kOracleZeroBelow = 1e-9;
inline constexpr double kOracleInfiniteAbove = 1e9;
inline constexpr double kOracleAgreement = 1e-3;

OracleEstimate estimate_limit(const GrowthFunction& f, const GrowthFunction& g,
                              OracleSchedule schedule = {});

/// Membership of the estimated limit in a class kind, with the oracle's own
/// tolerance on rate comparisons. Empty when the estimate is Inconclusive.
std::optional<bool> oracle_member(const OracleEstimate& est, ClassKind kind, double rate);

/// True when the estimate is compatible with the exact limit (same tag and,
/// for finite limits, within kOracleAgreement relative).
bool oracle_agrees(const OracleEstimate& est, const Limit& exact);

}  // namespace rcx
