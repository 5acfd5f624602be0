#include "rcomplexity/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <optional>

#include "rcomplexity/errors.hpp"
#include "rcomplexity/estimator.hpp"
#include "rcomplexity/expression_io.hpp"
#include "rcomplexity/oracle.hpp"
#include "rcomplexity/rclass.hpp"

namespace rcx::cli {

namespace {

using json = nlohmann::json;

constexpr const char* kExitCodeHelp =
    "Exit codes:\n"
    "  0  success / function is a member\n"
    "  1  function is not a member\n"
    "  2  input error (bad expression, CSV, flags or file)\n"
    "  3  no viable model could be fitted\n"
    "  4  symbolic limit disagrees with the numeric oracle (limit --verify)\n";

// Numbers are reported with 12 significant digits in both output modes.
double round12(double v) {
  if (!std::isfinite(v)) return v;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::strtod(buf, nullptr);
}

std::string text12(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

json json12(double v) {
  if (!std::isfinite(v)) return nullptr;
  const double r = round12(v);
  if (r == std::trunc(r) && std::abs(r) < 1e15) return static_cast<std::int64_t>(r);
  return r;
}

json limit_json(const Limit& l) {
  switch (l.tag()) {
    case Limit::Tag::Zero:
      return {{"kind", "zero"}, {"value", 0}};
    case Limit::Tag::Finite:
      return {{"kind", "finite"}, {"value", json12(l.value())}};
    case Limit::Tag::Infinite:
      break;
  }
  return {{"kind", "infinite"}, {"value", nullptr}};
}

std::string limit_text(const Limit& l) {
  if (l.is_zero()) return "0";
  if (l.is_infinite()) return "Infinite";
  return text12(l.value());
}

std::string_view oracle_kind_name(OracleEstimate::Kind k) {
  switch (k) {
    case OracleEstimate::Kind::Zero:
      return "zero";
    case OracleEstimate::Kind::Finite:
      return "finite";
    case OracleEstimate::Kind::Infinite:
      return "infinite";
    case OracleEstimate::Kind::Inconclusive:
      break;
  }
  return "inconclusive";
}

json model_json(const SampleSeries& s, const FitModel& m) {
  return {{"name", s.metricName},      {"unit", s.unit},
          {"family", family_name(m.family)}, {"degree", json12(m.degree)},
          {"coeff", json12(m.coeff)},    {"intercept", json12(m.intercept)},
          {"score", json12(m.score)}};
}

FitModel model_from_json(const json& j) {
  const auto family = family_from_name(j.at("family").get<std::string>());
  if (!family) throw DomainError("unknown model family '" + j.at("family").get<std::string>() + "'");
  FitModel m;
  m.family = *family;
  m.degree = j.value("degree", 0.0);
  m.coeff = j.at("coeff").get<double>();
  m.intercept = j.value("intercept", 0.0);
  m.score = j.contains("score") && j["score"].is_number() ? j["score"].get<double>() : 0.0;
  if (!(m.coeff > 0.0)) throw DomainError("model coefficient must be positive");
  return m;
}

// A compare operand: either an expression or one metric of a fit JSON file.
struct Operand {
  GrowthFunction function;
  std::optional<FitModel> model;

  double at(std::int64_t n) const {
    if (model) return extrapolate(*model, n);
    try {
      return evaluate(function, n);
    } catch (const Overflow&) {
      return std::numeric_limits<double>::infinity();
    }
  }
};

Operand load_operand(const std::string& arg, const std::string& metric, std::ostream& err) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(arg, ec)) return {parse_function(arg), std::nullopt};

  std::ifstream in(arg);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw DomainError("cannot read fit JSON '" + arg + "': " + e.what());
  }
  try {
    const auto& metrics = doc.at("metrics");
    if (!metrics.is_array() || metrics.empty()) throw DomainError("fit JSON has no metrics");
    const json* chosen = &metrics.front();
    if (!metric.empty()) {
      const auto it = std::find_if(metrics.begin(), metrics.end(),
                                   [&](const json& m) { return m.value("name", "") == metric; });
      if (it == metrics.end()) throw DomainError("metric '" + metric + "' not in '" + arg + "'");
      chosen = &*it;
    }
    FitModel model = model_from_json(*chosen);
    BridgedFunction bridged = to_growth_function(model);
    if (bridged.warning) err << "warning: " << *bridged.warning << "\n";
    return {std::move(bridged.function), model};
  } catch (const json::exception& e) {
    throw DomainError("malformed fit JSON '" + arg + "': " + e.what());
  }
}

struct Options {
  std::string output = "human";

  std::string input;
  std::vector<double> degrees{1, 2, 3, 4, 5, 6};
  std::vector<std::string> families;

  std::string function;
  std::string klass;

  std::string num;
  std::string den;
  bool verify = false;

  std::string left;
  std::string right;

  std::string f1;
  std::string f2;
  std::string metric;
  std::int64_t horizon = 1'000'000;
  std::optional<std::int64_t> at;
};

int cmd_fit(const Options& o, std::ostream& out, std::ostream& err) {
  FitConfig config;
  config.degrees = o.degrees;
  if (!o.families.empty()) {
    config.families.clear();
    for (const auto& name : o.families) {
      const auto f = family_from_name(name);
      if (!f) throw DomainError("unknown family '" + name + "'");
      config.families.push_back(*f);
    }
  }
  for (double d : config.degrees) {
    if (!(d >= 1.0)) throw DomainError("POLY degrees must be >= 1");
  }

  const Embedding emb = fit_embedding(read_csv_file(o.input), config);

  for (const auto& [s, m] : emb.metrics) {
    if (m.intercept < 0.0) {
      err << "warning: metric '" << s.metricName << "' has negative intercept "
          << text12(m.intercept) << "; it is dropped when used as a growth function\n";
    }
  }
  if (o.output == "json") {
    json metrics = json::array();
    for (const auto& [s, m] : emb.metrics) metrics.push_back(model_json(s, m));
    out << json{{"metrics", metrics}}.dump(2) << "\n";
  } else {
    for (const auto& [s, m] : emb.metrics) {
      out << s.metricName << " (" << s.unit << "): (\"" << family_name(m.family) << "\", "
          << text12(m.degree) << ", " << text12(m.coeff) << ", " << text12(m.intercept)
          << ")  score " << text12(m.score) << "\n";
    }
  }
  return kSuccess;
}

int cmd_member(const Options& o, std::ostream& out) {
  const GrowthFunction f = parse_function(o.function);
  const RClass cls = parse_class(o.klass);
  const MembershipVerdict v = member(f, cls);
  if (o.output == "json") {
    out << json{{"function", format_function(f)},
                {"class", format_class(cls)},
                {"member", v.member},
                {"limit", limit_json(v.limit)}}
               .dump(2)
        << "\n";
  } else {
    out << format_function(f) << (v.member ? " is a member of " : " is not a member of ")
        << format_class(cls) << "\n"
        << "limit: " << limit_text(v.limit) << "\n";
  }
  return v.member ? kSuccess : kNotMember;
}

int cmd_limit(const Options& o, std::ostream& out) {
  const GrowthFunction num = parse_function(o.num);
  const GrowthFunction den = parse_function(o.den);
  const Limit l = limit_ratio(num, den);

  std::optional<OracleEstimate> est;
  if (o.verify) est = estimate_limit(num, den);
  const bool agrees = !est || oracle_agrees(*est, l);

  if (o.output == "json") {
    json j{{"limit", limit_json(l)}};
    if (est) {
      j["oracle"] = {{"classification", oracle_kind_name(est->classification)},
                     {"value", est->classification == OracleEstimate::Kind::Finite
                                   ? json12(est->value)
                                   : json(nullptr)}};
      j["agrees"] = agrees;
    }
    out << j.dump(2) << "\n";
  } else {
    out << limit_text(l) << "\n";
    if (est) {
      out << "oracle: " << oracle_kind_name(est->classification);
      if (est->classification == OracleEstimate::Kind::Finite) out << " " << text12(est->value);
      out << (agrees ? " (agrees)" : " (DISAGREES)") << "\n";
    }
  }
  return agrees ? kSuccess : kOracleDisagreement;
}

int cmd_add(const Options& o, std::ostream& out) {
  const RClass sum = add_classes(parse_class(o.left), parse_class(o.right));
  if (o.output == "json") {
    out << json{{"class", format_class(sum)}}.dump(2) << "\n";
  } else {
    out << format_class(sum) << "\n";
  }
  return kSuccess;
}

int cmd_compare(const Options& o, std::ostream& out, std::ostream& err) {
  const Operand a = load_operand(o.f1, o.metric, err);
  const Operand b = load_operand(o.f2, o.metric, err);
  const auto cross = crossover(a.function, b.function, o.horizon);
  if (o.at && *o.at < 2) throw DomainError("--at requires n >= 2");

  if (o.output == "json") {
    json j{{"horizon", o.horizon},
           {"crossover", cross ? json(*cross) : json(nullptr)},
           {"f1", format_function(a.function)},
           {"f2", format_function(b.function)}};
    if (o.at) j["at"] = {{"n", *o.at}, {"f1", json12(a.at(*o.at))}, {"f2", json12(b.at(*o.at))}};
    out << j.dump(2) << "\n";
  } else {
    if (cross) {
      out << "crossover: " << *cross << "\n";
    } else {
      out << "crossover: none <= " << o.horizon << "\n";
    }
    if (o.at) {
      out << "f1(" << *o.at << ") = " << text12(a.at(*o.at)) << "\n"
          << "f2(" << *o.at << ") = " << text12(b.at(*o.at)) << "\n";
    }
  }
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"r-Complexity calculus and Big r-Theta estimation", "rcx"};
  app.footer(kExitCodeHelp);
  app.require_subcommand(1, 1);
  app.fallthrough();

  Options o;
  app.add_option("--output", o.output, "Output mode")
      ->check(CLI::IsMember({"human", "json"}))
      ->capture_default_str();

  auto* fit = app.add_subcommand("fit", "Fit Big r-Theta descriptors to metrics from a CSV file");
  fit->add_option("--input", o.input, "CSV with header metric,unit,n,value")->required();
  fit->add_option("--degrees", o.degrees, "POLY degree grid")->delimiter(',')->capture_default_str();
  fit->add_option("--families", o.families, "Families to try (CONST,LOG,POLY,NLOGN,EXP)")
      ->delimiter(',');

  auto* mem = app.add_subcommand("member", "Check membership of a function in a class");
  mem->add_option("--function", o.function, "Growth function expression")->required();
  mem->add_option("--class", o.klass, "Class, e.g. theta_2.1(n)")->required();

  auto* lim = app.add_subcommand("limit", "Exact limit of num(n)/den(n)");
  lim->add_option("--num", o.num)->required();
  lim->add_option("--den", o.den)->required();
  lim->add_flag("--verify", o.verify, "Cross-check with the numeric oracle");

  auto* add_cmd = app.add_subcommand("add", "Sum of two classes of the same kind");
  add_cmd->add_option("--left", o.left)->required();
  add_cmd->add_option("--right", o.right)->required();

  auto* cmp = app.add_subcommand("compare", "Crossover point and extrapolated values");
  cmp->add_option("--f1", o.f1, "Expression or fit JSON file")->required();
  cmp->add_option("--f2", o.f2, "Expression or fit JSON file")->required();
  cmp->add_option("--horizon", o.horizon)->check(CLI::Range(std::int64_t{2}, INT64_MAX))
      ->capture_default_str();
  cmp->add_option("--metric", o.metric, "Metric to use from fit JSON operands (default: first)");
  cmp->add_option("--at", o.at, "Also evaluate both functions at this input size");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }

  try {
    if (*fit) return cmd_fit(o, out, err);
    if (*mem) return cmd_member(o, out);
    if (*lim) return cmd_limit(o, out);
    if (*add_cmd) return cmd_add(o, out);
    return cmd_compare(o, out, err);
  } catch (const NoViableModel& e) {
    err << "error: " << e.what() << "\n";
    return kNoModel;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace rcx::cli
