#pragma once

// r-Complexity classes: membership by the limit criterion, and the algebraic
// rules that relate classes (rescaling, transitivity, symmetry, transpose,
// projection, addition).

#include <string_view>

#include "rcomplexity/growth.hpp"

namespace rcx {

enum class ClassKind { BigTheta, BigO, BigOmega, SmallO, SmallOmega };

constexpr bool is_big(ClassKind k) {
  return k == ClassKind::BigTheta || k == ClassKind::BigO || k == ClassKind::BigOmega;
}

std::string_view kind_name(ClassKind k);

/// K_r(g). Small kinds carry no rate; theirs is stored as 1 and ignored.
class RClass {
 public:
  /// Throws DomainError for a non-positive or non-finite rate on a big kind.
  RClass(ClassKind kind, double rate, GrowthFunction reference);

  static RClass theta(double r, GrowthFunction g) { return {ClassKind::BigTheta, r, std::move(g)}; }
  static RClass big_o(double r, GrowthFunction g) { return {ClassKind::BigO, r, std::move(g)}; }
  static RClass big_omega(double r, GrowthFunction g) {
    return {ClassKind::BigOmega, r, std::move(g)};
  }
  static RClass small_o(GrowthFunction g) { return {ClassKind::SmallO, 1.0, std::move(g)}; }
  static RClass small_omega(GrowthFunction g) { return {ClassKind::SmallOmega, 1.0, std::move(g)}; }

  ClassKind kind() const { return kind_; }
  double rate() const { return rate_; }
  const GrowthFunction& reference() const { return reference_; }

  friend bool operator==(const RClass&, const RClass&) = default;

 private:
  ClassKind kind_;
  double rate_;
  GrowthFunction reference_;
};

struct MembershipVerdict {
  bool member = false;
  Limit limit = Limit::zero();  // lim f/g, the witness for the verdict
};

/// Decides membership from a known limit l = lim f/g:
///   Theta_r: l == r        O_r: l in [0, r]       Omega_r: l in [r, inf]
///   o:       l == 0        omega: l == inf
/// Rate comparisons use kRateTolerance, so boundary cases l == r are inclusive.
bool limit_satisfies(const Limit& l, ClassKind kind, double rate);

MembershipVerdict member(const GrowthFunction& f, const RClass& cls);

struct ThetaSignature {
  GrowthFunction shape;  // dominant term of f with coefficient 1
  double rate;           // dominant coefficient of f
};

/// Canonical (monic dominant shape, rate) such that f is in Theta_rate(shape).
ThetaSignature theta_signature(const GrowthFunction& f);

/// K_r(g) -> K_{r*x}(g/x). Same member set. NotApplicable for small kinds.
RClass rescale_reference(const RClass& cls, double x);

/// Rate of the class reached by chaining f in K_r(g) and g in K_{r'}(h):
/// f is then in K_{r*r'}(h). Small kinds ignore rates and return 1.
double compose_transitive(const RClass& outer, double innerRate);

/// Given f in Theta_r(g), returns the verdict for g in Theta_{1/r}(f).
/// Throws PreconditionFailed when f is not in Theta_r(g).
MembershipVerdict symmetry_dual(const GrowthFunction& f, const GrowthFunction& g, double r);

struct TransposePair {
  MembershipVerdict forward;   // f in O_r(g)
  MembershipVerdict backward;  // g in Omega_{1/r}(f)
};

TransposePair transpose_dual(const GrowthFunction& f, const GrowthFunction& g, double r);

struct Projection {
  MembershipVerdict theta;
  MembershipVerdict bigO;
  MembershipVerdict bigOmega;
};

Projection project_theta(const GrowthFunction& f, const GrowthFunction& g, double r);

/// Class containing every sum f' + g' with f' in a and g' in b.
///
/// With t = lim f/g for the references f (of a) and g (of b):
///   t == 0    -> b
///   t == inf  -> a
///   t finite  -> K_r(f + (q/r) g)
/// The finite case is derived from the limit criterion: f' ~ r f and
/// g' ~ q g give f' + g' ~ r (f + (q/r) g).
///
/// Small kinds follow the classical rules (the faster reference wins,
/// either one on a tie). Throws KindMismatch if the kinds differ.
RClass add_classes(const RClass& a, const RClass& b);

}  // namespace rcx
