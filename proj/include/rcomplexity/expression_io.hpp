#pragma once

// Text formats: growth-function expressions, class notation, and the
// metric CSV.
//
// Expression grammar (whitespace insignificant):
//   expr   := term ("+" term)*
//   term   := coeff? factor*          (factors optionally separated by "*")
//   factor := "n" ("^" real)? | "log(n)" ("^" real)? | real "^n"
//   coeff  := positive real
//
// Class notation:
//   class  := ("theta" | "O" | "omega") "_" real "(" expr ")"
//           | ("o" | "w") "(" expr ")"
//
// CSV: header `metric,unit,n,value`; rows of one metric are contiguous and
// n is strictly increasing within a metric.

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "rcomplexity/estimator.hpp"
#include "rcomplexity/growth.hpp"
#include "rcomplexity/rclass.hpp"

namespace rcx {

/// Throws ParseError (with byte offset) or InvalidTerm.
GrowthFunction parse_function(std::string_view text);

/// Canonical text, dominant term first. parse_function inverts it exactly.
std::string format_function(const GrowthFunction& f);

/// Throws ParseError, RateNotAllowed (rate on a small kind) or DomainError.
RClass parse_class(std::string_view text);
std::string format_class(const RClass& cls);

/// Shortest decimal text that parses back to exactly `v`.
std::string format_number(double v);

std::vector<SampleSeries> read_csv(std::istream& in);
std::vector<SampleSeries> read_csv_file(const std::string& path);

}  // namespace rcx
