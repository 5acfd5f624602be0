#include "rcomplexity/expression_io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <set>

#include "rcomplexity/errors.hpp"

namespace rcx {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  GrowthFunction expression() {
    std::vector<GrowthTerm> terms;
    terms.push_back(parse_term());
    while (skip_ws(), peek() == '+') {
      ++pos_;
      terms.push_back(parse_term());
    }
    return normalize(std::move(terms));
  }

  RClass klass() {
    skip_ws();
    const std::size_t kindAt = pos_;
    std::string_view ident = identifier();
    ClassKind kind;
    if (ident == "theta") {
      kind = ClassKind::BigTheta;
    } else if (ident == "O") {
      kind = ClassKind::BigO;
    } else if (ident == "omega") {
      kind = ClassKind::BigOmega;
    } else if (ident == "o") {
      kind = ClassKind::SmallO;
    } else if (ident == "w") {
      kind = ClassKind::SmallOmega;
    } else {
      fail(kindAt, "class kind: one of theta, O, omega, o, w");
    }

    double rate = 1.0;
    skip_ws();
    if (is_big(kind)) {
      expect('_');
      skip_ws();
      rate = real(true);
    } else if (peek() == '_') {
      throw RateNotAllowed("small class '" + std::string(ident) + "' does not take a rate");
    }
    skip_ws();
    expect('(');
    GrowthFunction ref = expression();
    skip_ws();
    expect(')');
    return RClass(kind, rate, std::move(ref));
  }

  void finish() {
    skip_ws();
    if (pos_ != text_.size()) fail(pos_, "'+' or end of input");
  }

 private:
  GrowthTerm parse_term() {
    GrowthTerm t{1.0, 1.0, 0.0, 0.0};
    bool any = false;
    for (;;) {
      skip_ws();
      bool starred = false;
      if (any && peek() == '*') {
        ++pos_;
        skip_ws();
        starred = true;
      }
      if (!factor(t)) {
        if (starred) fail(pos_, "factor after '*'");
        break;
      }
      any = true;
    }
    if (!any) fail(pos_, "term: number, n, log(n) or q^n");
    validate(t);
    return t;
  }

  // Consumes one coefficient or factor into `t`. False if none starts here.
  bool factor(GrowthTerm& t) {
    if (text_.substr(pos_).starts_with("log")) {
      pos_ += 3;
      skip_ws();
      expect('(');
      skip_ws();
      expect('n');
      skip_ws();
      expect(')');
      t.logExp += exponent();
      return true;
    }
    if (peek() == 'n') {
      ++pos_;
      t.polyExp += exponent();
      return true;
    }
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      const double v = real(false);
      const std::size_t save = pos_;
      skip_ws();
      if (peek() == '^') {
        ++pos_;
        skip_ws();
        expect('n');
        t.expBase *= v;
      } else {
        pos_ = save;
        t.coeff *= v;
      }
      return true;
    }
    return false;
  }

  double exponent() {
    const std::size_t save = pos_;
    skip_ws();
    if (peek() != '^') {
      pos_ = save;
      return 1.0;
    }
    ++pos_;
    skip_ws();
    return real(true);
  }

  double real(bool allowSign) {
    const std::size_t start = pos_;
    if (allowSign && peek() == '+') ++pos_;
    const char c = peek();
    const bool startsNumber = std::isdigit(static_cast<unsigned char>(c)) || c == '.' ||
                              (allowSign && c == '-');
    if (!startsNumber) fail(start, "number");
    double v = 0.0;
    const auto* first = text_.data() + pos_;
    const auto [ptr, ec] = std::from_chars(first, text_.data() + text_.size(), v);
    if (ec != std::errc() || !std::isfinite(v)) fail(start, "finite number");
    pos_ += static_cast<std::size_t>(ptr - first);
    return v;
  }

  std::string_view identifier() {
    const std::size_t start = pos_;
    while (std::isalpha(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start) fail(start, "class kind: one of theta, O, omega, o, w");
    return text_.substr(start, pos_ - start);
  }

  void expect(char c) {
    if (peek() != c) fail(pos_, std::string("'") + c + "'");
    ++pos_;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  // Offsets always point into the text; end of input maps to the last byte.
  [[noreturn]] void fail(std::size_t at, const std::string& expected) const {
    const std::size_t clamped = text_.empty() ? 0 : std::min(at, text_.size() - 1);
    const std::string found = at < text_.size() ? std::string("'") + text_[at] + "'" : "end of input";
    throw ParseError(clamped, "expected " + expected + ", found " + found);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto at = line.find(sep, start);
    out.push_back(trim(line.substr(start, at - start)));
    if (at == std::string_view::npos) break;
    start = at + 1;
  }
  return out;
}

template <typename T>
std::optional<T> parse_exact(std::string_view s) {
  T v{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

}  // namespace

GrowthFunction parse_function(std::string_view text) {
  if (text.empty()) throw ParseError(0, "expected an expression, found empty input");
  Parser p(text);
  GrowthFunction f = p.expression();
  p.finish();
  return f;
}

std::string format_number(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

std::string format_function(const GrowthFunction& f) {
  std::string out;
  for (const auto& t : f.terms()) {
    if (!out.empty()) out += " + ";
    std::vector<std::string> parts;
    if (t.coeff != 1.0 || !t.has_factors()) parts.push_back(format_number(t.coeff));
    if (t.expBase != 1.0) parts.push_back(format_number(t.expBase) + "^n");
    if (t.polyExp == 1.0) {
      parts.emplace_back("n");
    } else if (t.polyExp != 0.0) {
      parts.push_back("n^" + format_number(t.polyExp));
    }
    if (t.logExp == 1.0) {
      parts.emplace_back("log(n)");
    } else if (t.logExp != 0.0) {
      parts.push_back("log(n)^" + format_number(t.logExp));
    }
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) out += '*';
      out += parts[i];
    }
  }
  return out;
}

RClass parse_class(std::string_view text) {
  if (text.empty()) throw ParseError(0, "expected a class, found empty input");
  Parser p(text);
  RClass cls = p.klass();
  p.finish();
  return cls;
}

std::string format_class(const RClass& cls) {
  std::string out(kind_name(cls.kind()));
  if (is_big(cls.kind())) out += "_" + format_number(cls.rate());
  return out + "(" + format_function(cls.reference()) + ")";
}

std::vector<SampleSeries> read_csv(std::istream& in) {
  std::vector<SampleSeries> out;
  std::set<std::string, std::less<>> closed;
  std::string line;
  std::size_t lineNo = 0;
  bool sawHeader = false;

  while (std::getline(in, line)) {
    ++lineNo;
    const std::string_view row = trim(line);
    if (row.empty()) continue;
    if (!sawHeader) {
      if (row != "metric,unit,n,value") {
        throw CsvError(lineNo, "expected header 'metric,unit,n,value'");
      }
      sawHeader = true;
      continue;
    }

    const auto fields = split(row, ',');
    if (fields.size() != 4) {
      throw CsvError(lineNo, "expected 4 fields, found " + std::to_string(fields.size()));
    }
    if (fields[0].empty()) throw CsvError(lineNo, "empty metric name");
    const auto n = parse_exact<std::int64_t>(fields[2]);
    if (!n || *n < 2) throw CsvError(lineNo, "input size must be an integer >= 2");
    const auto value = parse_exact<double>(fields[3]);
    if (!value || !std::isfinite(*value) || *value <= 0.0) {
      throw CsvError(lineNo, "value must be a finite positive number");
    }

    if (out.empty() || out.back().metricName != fields[0]) {
      if (closed.contains(fields[0])) {
        throw CsvError(lineNo, "rows of metric '" + std::string(fields[0]) + "' are not contiguous");
      }
      if (!out.empty()) closed.insert(out.back().metricName);
      out.push_back(SampleSeries{std::string(fields[0]), std::string(fields[1]), {}});
    }
    SampleSeries& s = out.back();
    if (s.unit != fields[1]) throw CsvError(lineNo, "unit changes within metric '" + s.metricName + "'");
    if (!s.points.empty() && *n <= s.points.back().n) {
      throw CsvError(lineNo, "input sizes must be strictly increasing within a metric");
    }
    s.points.push_back({*n, *value});
  }

  if (!sawHeader) throw CsvError(0, "empty input");
  if (out.empty()) throw CsvError(0, "no data rows");
  for (const auto& s : out) {
    if (s.points.size() < 3) {
      throw CsvError(0, "metric '" + s.metricName + "' has " + std::to_string(s.points.size()) +
                            " points, needs at least 3");
    }
  }
  return out;
}

std::vector<SampleSeries> read_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CsvError(0, "cannot open '" + path + "'");
  return read_csv(in);
}

}  // namespace rcx
