#pragma once

// Closed algebra of positive growth functions: finite sums of terms
//   coeff * expBase^n * n^polyExp * log(n)^logExp
// with exact dominance ordering and exact limits of ratios.

#include <cstdint>
#include <span>
#include <tuple>
#include <vector>

namespace rcx {

struct GrowthTerm {
  double coeff = 1.0;
  double expBase = 1.0;
  double polyExp = 0.0;
  double logExp = 0.0;

  /// Dominance key. A term with a lexicographically larger key grows
  /// strictly faster than one with a smaller key.
  std::tuple<double, double, double> key() const { return {expBase, polyExp, logExp}; }

  bool has_factors() const { return expBase != 1.0 || polyExp != 0.0 || logExp != 0.0; }

  friend bool operator==(const GrowthTerm&, const GrowthTerm&) = default;
};

/// Throws InvalidTerm if `t` is not an eventually positive, well defined term.
void validate(const GrowthTerm& t);

/// Shorthand for a single term; arguments in rendering order (c * q^n * n^a * log^b).
GrowthTerm term(double coeff, double polyExp = 0.0, double logExp = 0.0, double expBase = 1.0);

class GrowthFunction {
 public:
  /// Builds a normalized function: like terms merged, dominant term first.
  /// Throws EmptyFunction or InvalidTerm.
  static GrowthFunction from_terms(std::vector<GrowthTerm> terms);

  static GrowthFunction constant(double c) { return from_terms({term(c)}); }
  static GrowthFunction monomial(double coeff, double polyExp, double logExp = 0.0,
                                 double expBase = 1.0) {
    return from_terms({term(coeff, polyExp, logExp, expBase)});
  }

  std::span<const GrowthTerm> terms() const { return terms_; }
  const GrowthTerm& dominant() const { return terms_.front(); }
  std::size_t size() const { return terms_.size(); }

  friend bool operator==(const GrowthFunction&, const GrowthFunction&) = default;

 private:
  explicit GrowthFunction(std::vector<GrowthTerm> terms) : terms_(std::move(terms)) {}

  std::vector<GrowthTerm> terms_;
};

GrowthFunction normalize(std::vector<GrowthTerm> terms);

/// Sum of all terms at `n`. Throws DomainError for n < 2 and Overflow when
/// the result is not representable as a finite double.
double evaluate(const GrowthFunction& f, std::int64_t n);

/// Natural log of f(n), computed term-wise with log-sum-exp so it stays
/// finite far past the point where evaluate() overflows.
double log_evaluate(const GrowthFunction& f, double n);

GrowthFunction add(const GrowthFunction& f, const GrowthFunction& g);
GrowthFunction scale(const GrowthFunction& f, double x);
GrowthFunction multiply(const GrowthFunction& f, const GrowthFunction& g);

/// A limit value in [0, +inf]. Finite values are strictly positive.
class Limit {
 public:
  enum class Tag { Zero, Finite, Infinite };

  static Limit zero() { return Limit(Tag::Zero, 0.0); }
  static Limit infinite() { return Limit(Tag::Infinite, 0.0); }
  /// Throws DomainError unless v is finite and > 0.
  static Limit finite(double v);

  Tag tag() const { return tag_; }
  bool is_zero() const { return tag_ == Tag::Zero; }
  bool is_finite() const { return tag_ == Tag::Finite; }
  bool is_infinite() const { return tag_ == Tag::Infinite; }
  /// Finite value; 0 for Zero, +inf for Infinite.
  double value() const;

  Limit reciprocal() const;

  friend bool operator==(const Limit&, const Limit&) = default;

 private:
  Limit(Tag tag, double v) : tag_(tag), value_(v) {}

  Tag tag_;
  double value_;
};

/// Relative tolerance used wherever two rates or coefficient ratios are
/// compared for equality.
inline constexpr double kRateTolerance = 1e-12;

bool rates_equal(double a, double b);

/// Same tag, and finite values equal within kRateTolerance.
bool same_limit(const Limit& a, const Limit& b);

/// lim_{n->inf} f(n)/g(n), decided from the dominant terms alone.
Limit limit_ratio(const GrowthFunction& f, const GrowthFunction& g);

}  // namespace rcx
