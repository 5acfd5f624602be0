#include "rcomplexity/rclass.hpp"

#include <cmath>
#include <string>

#include "rcomplexity/errors.hpp"

namespace rcx {

std::string_view kind_name(ClassKind k) {
  switch (k) {
    case ClassKind::BigTheta:
      return "theta";
    case ClassKind::BigO:
      return "O";
    case ClassKind::BigOmega:
      return "omega";
    case ClassKind::SmallO:
      return "o";
    case ClassKind::SmallOmega:
      break;
  }
  return "w";
}

RClass::RClass(ClassKind kind, double rate, GrowthFunction reference)
    : kind_(kind), rate_(is_big(kind) ? rate : 1.0), reference_(std::move(reference)) {
  if (is_big(kind) && (!std::isfinite(rate) || rate <= 0.0)) {
    throw DomainError("class rate must be a finite positive real, got " + std::to_string(rate));
  }
}

bool limit_satisfies(const Limit& l, ClassKind kind, double rate) {
  switch (kind) {
    case ClassKind::BigTheta:
      return l.is_finite() && rates_equal(l.value(), rate);
    case ClassKind::BigO:
      return l.is_zero() || (l.is_finite() && (l.value() <= rate || rates_equal(l.value(), rate)));
    case ClassKind::BigOmega:
      return l.is_infinite() ||
             (l.is_finite() && (l.value() >= rate || rates_equal(l.value(), rate)));
    case ClassKind::SmallO:
      return l.is_zero();
    case ClassKind::SmallOmega:
      break;
  }
  return l.is_infinite();
}

MembershipVerdict member(const GrowthFunction& f, const RClass& cls) {
  const Limit l = limit_ratio(f, cls.reference());
  return {limit_satisfies(l, cls.kind(), cls.rate()), l};
}

ThetaSignature theta_signature(const GrowthFunction& f) {
  GrowthTerm monic = f.dominant();
  const double rate = monic.coeff;
  monic.coeff = 1.0;
  return {GrowthFunction::from_terms({monic}), rate};
}

RClass rescale_reference(const RClass& cls, double x) {
  if (!is_big(cls.kind())) {
    throw NotApplicable("rescaling is meaningless for small classes");
  }
  if (!std::isfinite(x) || x <= 0.0) throw NonPositiveScalar("rescale factor must be positive");
  if (x == 1.0) return cls;
  return RClass(cls.kind(), cls.rate() * x, scale(cls.reference(), 1.0 / x));
}

double compose_transitive(const RClass& outer, double innerRate) {
  if (!is_big(outer.kind())) return 1.0;
  if (!std::isfinite(innerRate) || innerRate <= 0.0) {
    throw DomainError("inner rate must be a finite positive real");
  }
  return outer.rate() * innerRate;
}

MembershipVerdict symmetry_dual(const GrowthFunction& f, const GrowthFunction& g, double r) {
  if (!member(f, RClass::theta(r, g)).member) {
    throw PreconditionFailed("symmetry requires f in theta_r(g)");
  }
  return member(g, RClass::theta(1.0 / r, f));
}

TransposePair transpose_dual(const GrowthFunction& f, const GrowthFunction& g, double r) {
  return {member(f, RClass::big_o(r, g)), member(g, RClass::big_omega(1.0 / r, f))};
}

Projection project_theta(const GrowthFunction& f, const GrowthFunction& g, double r) {
  return {member(f, RClass::theta(r, g)), member(f, RClass::big_o(r, g)),
          member(f, RClass::big_omega(r, g))};
}

RClass add_classes(const RClass& a, const RClass& b) {
  if (a.kind() != b.kind()) {
    throw KindMismatch("cannot add " + std::string(kind_name(a.kind())) + " and " +
                       std::string(kind_name(b.kind())) + " classes");
  }
  const Limit t = limit_ratio(a.reference(), b.reference());
  if (t.is_zero()) return b;
  if (t.is_infinite()) return a;
  if (!is_big(a.kind())) return a;

  const double r = a.rate();
  const double q = b.rate();
  return RClass(a.kind(), r, add(a.reference(), scale(b.reference(), q / r)));
}

}  // namespace rcx
