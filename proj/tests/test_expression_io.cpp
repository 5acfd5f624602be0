#include <doctest.h>

#include <sstream>

#include "rcomplexity/errors.hpp"
#include "rcomplexity/expression_io.hpp"
#include "support/generators.hpp"

using namespace rcx;

TEST_CASE("parse_function") {
  CHECK(parse_function("3*n^2 + 6") == normalize({term(3, 2), term(6)}));
  CHECK(parse_function("n") == GrowthFunction::monomial(1, 1));
  CHECK(parse_function("5*2^n*log(n)^-1 + n") == normalize({term(5, 0, -1, 2), term(1, 1)}));
  CHECK(parse_function("  6+3 n ^ 2 ") == parse_function("3*n^2 + 6"));
  CHECK(parse_function("n*n*log(n)") == GrowthFunction::monomial(1, 2, 1));
  CHECK(parse_function("2^n * 3^n") == GrowthFunction::monomial(1, 0, 0, 6));
  CHECK(parse_function("1e-3*n^1.5") == GrowthFunction::monomial(1e-3, 1.5));
  CHECK(parse_function("n + n") == GrowthFunction::monomial(2, 1));
}

TEST_CASE("parse_function errors carry offsets") {
  auto offset_of = [](const char* text) -> std::size_t {
    try {
      parse_function(text);
    } catch (const ParseError& e) {
      return e.offset();
    }
    FAIL("expected ParseError for ", text);
    return 0;
  };
  CHECK(offset_of("3*n^2 +") == 6);
  CHECK(offset_of("n - 1") == 2);
  CHECK(offset_of("2^3") == 2);
  CHECK(offset_of("log(x)") == 4);
  CHECK(offset_of("3 * ") == 3);
  CHECK(offset_of("n^") == 1);
  CHECK_THROWS_AS(parse_function(""), ParseError);
  CHECK_THROWS_AS(parse_function("0.5^n"), InvalidTerm);
  CHECK_THROWS_AS(parse_function("0*n"), InvalidTerm);
  CHECK_THROWS_AS(parse_function("n^-1"), InvalidTerm);
  CHECK_THROWS_AS(parse_function("log(n)^-1"), InvalidTerm);
}

TEST_CASE("format_function") {
  CHECK(format_function(parse_function("3*n^2 + 6")) == "3*n^2 + 6");
  CHECK(format_function(GrowthFunction::monomial(1, 1)) == "n");
  CHECK(format_function(GrowthFunction::monomial(2.5, 1, 1)) == "2.5*n*log(n)");
  CHECK(format_function(parse_function("5*2^n*log(n)^-1 + n")) == "5*2^n*log(n)^-1 + n");
  CHECK(format_function(GrowthFunction::constant(1)) == "1");
}

TEST_CASE("parse_class and format_class") {
  auto c = parse_class("theta_2.1(n)");
  CHECK(c.kind() == ClassKind::BigTheta);
  CHECK(c.rate() == 2.1);
  CHECK(c.reference() == parse_function("n"));

  c = parse_class("o(n^2)");
  CHECK(c.kind() == ClassKind::SmallO);
  CHECK(c.reference() == parse_function("n^2"));

  c = parse_class("omega_0.5(n*log(n))");
  CHECK(c.kind() == ClassKind::BigOmega);
  CHECK(c.rate() == 0.5);
  CHECK(format_class(c) == "omega_0.5(n*log(n))");
  CHECK(parse_class(format_class(c)) == c);

  CHECK(parse_class(" O_3 ( n^2 ) ") == RClass::big_o(3, parse_function("n^2")));
  CHECK(parse_class("w(n)").kind() == ClassKind::SmallOmega);

  CHECK_THROWS_AS(parse_class("o_2(n)"), RateNotAllowed);
  CHECK_THROWS_AS(parse_class("theta(n)"), ParseError);
  CHECK_THROWS_AS(parse_class("big_2(n)"), ParseError);
  CHECK_THROWS_AS(parse_class("theta_2(n"), ParseError);
  CHECK_THROWS_AS(parse_class("theta_2(n) x"), ParseError);
  CHECK_THROWS_AS(parse_class("theta_0(n)"), DomainError);
}

TEST_CASE("property: format then parse is the identity") {
  testing::Gen gen(51);
  for (int i = 0; i < 1000; ++i) {
    const auto f = gen.any_function(5);
    CHECK(parse_function(format_function(f)) == f);
  }
}

TEST_CASE("property: malformed input never escapes as anything but a library error") {
  testing::Gen gen(52);
  const std::string alphabet = "n^log()*+-.0123456789e _x";
  for (int i = 0; i < 2000; ++i) {
    std::string text;
    const int len = gen.integer(1, 14);
    for (int j = 0; j < len; ++j) text += alphabet[gen.integer(0, static_cast<int>(alphabet.size()) - 1)];
    try {
      parse_function(text);
    } catch (const ParseError& e) {
      CHECK(e.offset() < text.size());
    } catch (const rcx::Error&) {
    }
  }
}

TEST_CASE("read_csv") {
  std::istringstream in(
      "metric,unit,n,value\n"
      "time,seconds,10,306\n"
      "time,seconds,20,1206\n"
      "time,seconds,30,2706\n"
      "memory,kB,10,22\r\n"
      "memory,kB,20,43\n"
      "memory,kB,30,64\n");
  const auto all = read_csv(in);
  REQUIRE(all.size() == 2);
  CHECK(all[0].metricName == "time");
  CHECK(all[0].unit == "seconds");
  REQUIRE(all[0].points.size() == 3);
  CHECK(all[0].points[1].n == 20);
  CHECK(all[0].points[1].value == 1206);
  CHECK(all[1].metricName == "memory");
  CHECK(all[1].points.back().value == 64);
}

TEST_CASE("read_csv rejects malformed input") {
  auto fails = [](const std::string& text) {
    std::istringstream in(text);
    CHECK_THROWS_AS(read_csv(in), CsvError);
  };
  const std::string header = "metric,unit,n,value\n";
  fails("");
  fails(header);
  fails("n,value\n1,2\n");
  fails(header + "t,s,10,1\nt,s,10,2\nt,s,30,3\n");
  fails(header + "t,s,10,1\nt,s,20,0\nt,s,30,3\n");
  fails(header + "t,s,10,1\nt,s,20,-4\nt,s,30,3\n");
  fails(header + "t,s,10,1\nt,s,20,2\n");
  fails(header + "t,s,10,1\nt,s,20,abc\nt,s,30,3\n");
  fails(header + "t,s,10,1,9\n");
  fails(header + "t,s,10,1\nm,k,10,1\nt,s,20,2\n");
  fails(header + "t,s,10,1\nt,ms,20,2\nt,s,30,3\n");
  fails(header + "t,s,1,1\nt,s,20,2\nt,s,30,3\n");
  CHECK_THROWS_AS(read_csv_file("/nonexistent/metrics.csv"), CsvError);
}
