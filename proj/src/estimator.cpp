#include "rcomplexity/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <tuple>

#include "rcomplexity/errors.hpp"

namespace rcx {

void validate(const SampleSeries& series) {
  if (series.points.size() < 3) {
    throw DomainError("metric '" + series.metricName + "' needs at least 3 points, has " +
                      std::to_string(series.points.size()));
  }
  std::int64_t prev = 1;
  for (const auto& p : series.points) {
    if (p.n < 2) throw DomainError("input sizes must be >= 2");
    if (p.n <= prev) throw DomainError("input sizes must be strictly increasing");
    if (!std::isfinite(p.value) || p.value <= 0.0) {
      throw DomainError("metric values must be finite and positive");
    }
    prev = p.n;
  }
}

std::string_view family_name(Family f) {
  switch (f) {
    case Family::Const:
      return "CONST";
    case Family::Log:
      return "LOG";
    case Family::Poly:
      return "POLY";
    case Family::NLogN:
      return "NLOGN";
    case Family::Exp:
      break;
  }
  return "EXP";
}

std::optional<Family> family_from_name(std::string_view name) {
  for (Family f : kAllFamilies) {
    if (family_name(f) == name) return f;
  }
  return std::nullopt;
}

double shape(Family family, double degree, double n) {
  if (!(n >= 2.0)) throw DomainError("shape requires n >= 2");
  switch (family) {
    case Family::Const:
      return 1.0;
    case Family::Log:
      return std::log(n);
    case Family::Poly:
      return std::pow(n, degree);
    case Family::NLogN:
      return n * std::log(n);
    case Family::Exp:
      break;
  }
  return std::exp2(n);
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double mean_value(const SampleSeries& s) {
  long double sum = 0;
  for (const auto& p : s.points) sum += p.value;
  return static_cast<double>(sum / s.points.size());
}

double normalized_rmse(const SampleSeries& s, const FitModel& m) {
  long double sq = 0;
  for (const auto& p : s.points) {
    const long double pred =
        static_cast<long double>(m.coeff) * shape(m.family, m.degree, static_cast<double>(p.n)) +
        m.intercept;
    const long double r = pred - p.value;
    sq += r * r;
  }
  return static_cast<double>(std::sqrt(sq / s.points.size())) / mean_value(s);
}

}  // namespace

FitModel fit_family(const SampleSeries& series, Family family, double degree) {
  validate(series);
  FitModel m;
  m.family = family;
  m.degree = family == Family::Poly ? degree : 0.0;
  if (family == Family::Poly && !(degree >= 1.0)) {
    throw DomainError("POLY degree must be >= 1");
  }

  if (family == Family::Const) {
    m.coeff = mean_value(series);
    m.intercept = 0.0;
    m.score = normalized_rmse(series, m);
    return m;
  }

  const auto count = static_cast<long double>(series.points.size());
  std::vector<long double> xs;
  xs.reserve(series.points.size());
  for (const auto& p : series.points) {
    const double x = shape(family, degree, static_cast<double>(p.n));
    if (!std::isfinite(x)) {
      m.coeff = 0.0;
      m.score = kInf;
      return m;
    }
    xs.push_back(x);
  }
  if (std::all_of(xs.begin(), xs.end(), [&](long double x) { return x == xs.front(); })) {
    throw DegenerateDesign(std::string(family_name(family)) + " shape is constant over the samples");
  }

  long double xm = 0, ym = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    xm += xs[i];
    ym += series.points[i].value;
  }
  xm /= count;
  ym /= count;
  long double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const long double dx = xs[i] - xm;
    sxx += dx * dx;
    sxy += dx * (series.points[i].value - ym);
  }
  if (sxx == 0) {
    throw DegenerateDesign(std::string(family_name(family)) + " normal equations are singular");
  }
  const long double slope = sxy / sxx;
  m.coeff = static_cast<double>(slope);
  m.intercept = static_cast<double>(ym - slope * xm);
  m.score = m.coeff > 0.0 ? normalized_rmse(series, m) : kInf;
  return m;
}

bool simpler_than(const FitModel& a, const FitModel& b) {
  // (growth exponent, sub-rank); NLOGN sits just above POLY 1.
  auto rank = [](const FitModel& m) -> std::pair<double, int> {
    switch (m.family) {
      case Family::Const:
        return {0.0, 0};
      case Family::Log:
        return {0.0, 1};
      case Family::Poly:
        return {m.degree, 0};
      case Family::NLogN:
        return {1.0, 1};
      case Family::Exp:
        break;
    }
    return {kInf, 0};
  };
  return rank(a) < rank(b);
}

FitModel fit_best(const SampleSeries& series, const FitConfig& config) {
  validate(series);
  std::optional<FitModel> best;
  auto consider = [&](const FitModel& m) {
    if (!std::isfinite(m.score)) return;
    if (!best || m.score < best->score - kScoreTieTolerance ||
        (std::abs(m.score - best->score) <= kScoreTieTolerance && simpler_than(m, *best))) {
      best = m;
    }
  };
  for (Family family : config.families) {
    try {
      if (family == Family::Poly) {
        for (double d : config.degrees) consider(fit_family(series, family, d));
      } else {
        consider(fit_family(series, family));
      }
    } catch (const DegenerateDesign&) {
      // candidate discarded
    }
  }
  if (!best) throw NoViableModel("no model family produced a positive coefficient");
  return *best;
}

Embedding fit_embedding(std::vector<SampleSeries> series, const FitConfig& config) {
  std::vector<std::future<FitModel>> jobs;
  jobs.reserve(series.size());
  for (const auto& s : series) {
    jobs.push_back(std::async(std::launch::async, [&s, &config] { return fit_best(s, config); }));
  }
  Embedding out;
  out.metrics.reserve(series.size());
  for (std::size_t i = 0; i < series.size(); ++i) {
    out.metrics.emplace_back(std::move(series[i]), jobs[i].get());
  }
  return out;
}

BridgedFunction to_growth_function(const FitModel& model) {
  std::vector<GrowthTerm> terms;
  switch (model.family) {
    case Family::Const:
      terms.push_back(term(model.coeff));
      break;
    case Family::Log:
      terms.push_back(term(model.coeff, 0.0, 1.0));
      break;
    case Family::Poly:
      terms.push_back(term(model.coeff, model.degree));
      break;
    case Family::NLogN:
      terms.push_back(term(model.coeff, 1.0, 1.0));
      break;
    case Family::Exp:
      terms.push_back(term(model.coeff, 0.0, 0.0, 2.0));
      break;
  }
  BridgedFunction out{GrowthFunction::from_terms(terms), std::nullopt};
  if (model.intercept > 0.0) {
    terms.push_back(term(model.intercept));
    out.function = GrowthFunction::from_terms(std::move(terms));
  } else if (model.intercept < 0.0) {
    out.warning = "negative intercept " + std::to_string(model.intercept) +
                  " dropped: growth functions need positive coefficients";
  }
  return out;
}

double extrapolate(const FitModel& model, std::int64_t n) {
  if (n < 2) throw DomainError("extrapolate requires n >= 2");
  const double v = model.coeff * shape(model.family, model.degree, static_cast<double>(n)) +
                   model.intercept;
  return std::isfinite(v) ? v : kInf;
}

bool strictly_above(const GrowthFunction& f2, const GrowthFunction& f1, std::int64_t n) {
  try {
    return evaluate(f2, n) > evaluate(f1, n);
  } catch (const Overflow&) {
    const auto x = static_cast<double>(n);
    return log_evaluate(f2, x) > log_evaluate(f1, x);
  }
}

std::optional<std::int64_t> crossover(const GrowthFunction& f1, const GrowthFunction& f2,
                                      std::int64_t horizon) {
  if (horizon < 2) throw DomainError("crossover horizon must be >= 2");

  std::vector<std::int64_t> samples;
  for (std::int64_t m = 2; m <= std::min<std::int64_t>(256, horizon); ++m) samples.push_back(m);
  while (samples.back() < horizon) {
    const auto next = samples.back() + std::max<std::int64_t>(1, samples.back() / 64);
    samples.push_back(std::min(next, horizon));
  }

  std::optional<std::size_t> lastBelow;
  for (std::size_t i = samples.size(); i-- > 0;) {
    if (!strictly_above(f2, f1, samples[i])) {
      lastBelow = i;
      break;
    }
  }
  if (!lastBelow) return 2;
  if (*lastBelow + 1 == samples.size()) return std::nullopt;

  // f2 <= f1 at lo, f2 > f1 at hi.
  std::int64_t lo = samples[*lastBelow];
  std::int64_t hi = samples[*lastBelow + 1];
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (strictly_above(f2, f1, mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

}  // namespace rcx
