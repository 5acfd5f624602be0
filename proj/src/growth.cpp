#include "rcomplexity/growth.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "rcomplexity/errors.hpp"

namespace rcx {

void validate(const GrowthTerm& t) {
  if (!std::isfinite(t.coeff) || t.coeff <= 0.0) {
    throw InvalidTerm("coefficient must be a finite positive real, got " + std::to_string(t.coeff));
  }
  if (!std::isfinite(t.expBase) || t.expBase < 1.0) {
    throw InvalidTerm("exponential base must be >= 1, got " + std::to_string(t.expBase));
  }
  if (!std::isfinite(t.polyExp) || t.polyExp < 0.0) {
    throw InvalidTerm("polynomial exponent must be >= 0, got " + std::to_string(t.polyExp));
  }
  if (!std::isfinite(t.logExp)) {
    throw InvalidTerm("log exponent must be finite");
  }
  // log(n)^-b alone decays to zero; it needs a growing factor next to it.
  if (t.logExp < 0.0 && t.polyExp == 0.0 && t.expBase == 1.0) {
    throw InvalidTerm("negative log exponent requires a polynomial or exponential factor");
  }
}

GrowthTerm term(double coeff, double polyExp, double logExp, double expBase) {
  return GrowthTerm{coeff, expBase, polyExp, logExp};
}

GrowthFunction normalize(std::vector<GrowthTerm> terms) {
  if (terms.empty()) throw EmptyFunction();
  for (const auto& t : terms) validate(t);

  std::sort(terms.begin(), terms.end(),
            [](const GrowthTerm& a, const GrowthTerm& b) { return a.key() > b.key(); });

  std::vector<GrowthTerm> merged;
  merged.reserve(terms.size());
  for (const auto& t : terms) {
    if (!merged.empty() && merged.back().key() == t.key()) {
      merged.back().coeff += t.coeff;
    } else {
      merged.push_back(t);
    }
  }
  for (const auto& t : merged) validate(t);  // merged coefficients may overflow
  return GrowthFunction::from_terms(std::move(merged));
}

GrowthFunction GrowthFunction::from_terms(std::vector<GrowthTerm> terms) {
  if (terms.empty()) throw EmptyFunction();
  const bool normal = std::adjacent_find(terms.begin(), terms.end(),
                                         [](const GrowthTerm& a, const GrowthTerm& b) {
                                           return !(a.key() > b.key());
                                         }) == terms.end();
  if (!normal) return normalize(std::move(terms));
  for (const auto& t : terms) validate(t);
  return GrowthFunction(std::move(terms));
}

namespace {

double term_value(const GrowthTerm& t, double n) {
  double v = t.coeff;
  if (t.expBase != 1.0) v *= std::pow(t.expBase, n);
  if (t.polyExp != 0.0) v *= std::pow(n, t.polyExp);
  if (t.logExp != 0.0) v *= std::pow(std::log(n), t.logExp);
  return v;
}

double term_log_value(const GrowthTerm& t, double n) {
  double v = std::log(t.coeff);
  if (t.expBase != 1.0) v += n * std::log(t.expBase);
  if (t.polyExp != 0.0) v += t.polyExp * std::log(n);
  if (t.logExp != 0.0) v += t.logExp * std::log(std::log(n));
  return v;
}

}  // namespace

double evaluate(const GrowthFunction& f, std::int64_t n) {
  if (n < 2) throw DomainError("evaluate requires n >= 2, got " + std::to_string(n));
  const double x = static_cast<double>(n);
  double sum = 0.0;
  for (const auto& t : f.terms()) {
    const double v = term_value(t, x);
    if (!std::isfinite(v)) throw Overflow("term value overflows at n = " + std::to_string(n));
    sum += v;
  }
  if (!std::isfinite(sum)) throw Overflow("sum overflows at n = " + std::to_string(n));
  return sum;
}

double log_evaluate(const GrowthFunction& f, double n) {
  if (!(n >= 2.0)) throw DomainError("log_evaluate requires n >= 2");
  std::vector<double> logs;
  logs.reserve(f.size());
  for (const auto& t : f.terms()) logs.push_back(term_log_value(t, n));
  const double peak = *std::max_element(logs.begin(), logs.end());
  double acc = 0.0;
  for (double l : logs) acc += std::exp(l - peak);
  return peak + std::log(acc);
}

GrowthFunction add(const GrowthFunction& f, const GrowthFunction& g) {
  std::vector<GrowthTerm> all(f.terms().begin(), f.terms().end());
  all.insert(all.end(), g.terms().begin(), g.terms().end());
  return normalize(std::move(all));
}

GrowthFunction scale(const GrowthFunction& f, double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw NonPositiveScalar("scale factor must be a finite positive real");
  }
  std::vector<GrowthTerm> out(f.terms().begin(), f.terms().end());
  for (auto& t : out) t.coeff *= x;
  return GrowthFunction::from_terms(std::move(out));
}

GrowthFunction multiply(const GrowthFunction& f, const GrowthFunction& g) {
  std::vector<GrowthTerm> out;
  out.reserve(f.size() * g.size());
  for (const auto& a : f.terms()) {
    for (const auto& b : g.terms()) {
      out.push_back(GrowthTerm{a.coeff * b.coeff, a.expBase * b.expBase, a.polyExp + b.polyExp,
                               a.logExp + b.logExp});
    }
  }
  return normalize(std::move(out));
}

Limit Limit::finite(double v) {
  if (!std::isfinite(v) || v <= 0.0) {
    throw DomainError("finite limit must be a positive real");
  }
  return Limit(Tag::Finite, v);
}

double Limit::value() const {
  switch (tag_) {
    case Tag::Zero:
      return 0.0;
    case Tag::Finite:
      return value_;
    case Tag::Infinite:
      break;
  }
  return std::numeric_limits<double>::infinity();
}

Limit Limit::reciprocal() const {
  switch (tag_) {
    case Tag::Zero:
      return infinite();
    case Tag::Finite:
      return finite(1.0 / value_);
    case Tag::Infinite:
      break;
  }
  return zero();
}

bool rates_equal(double a, double b) {
  if (a == b) return true;
  return std::abs(a - b) <= kRateTolerance * std::max(std::abs(a), std::abs(b));
}

bool same_limit(const Limit& a, const Limit& b) {
  if (a.tag() != b.tag()) return false;
  return !a.is_finite() || rates_equal(a.value(), b.value());
}

Limit limit_ratio(const GrowthFunction& f, const GrowthFunction& g) {
  const auto& df = f.dominant();
  const auto& dg = g.dominant();
  if (df.key() > dg.key()) return Limit::infinite();
  if (df.key() < dg.key()) return Limit::zero();
  return Limit::finite(df.coeff / dg.coeff);
}

}  // namespace rcx
