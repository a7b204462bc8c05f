#include <doctest.h>

#include "newtonspec/error.hpp"
#include "newtonspec/poly.hpp"

using namespace newtonspec;

TEST_CASE("parse the worked examples") {
  auto p = parse_polynomial("u^2 + u^2*v^2 + v^2");
  CHECK(p.vars == std::vector<std::string>{"u", "v"});
  CHECK(p.terms.size() == 3);
  CHECK(p.terms.at({2, 0}) == 1);
  CHECK(p.terms.at({2, 2}) == 1);
  CHECK(p.terms.at({0, 2}) == 1);

  auto q = parse_polynomial("x^5 + x^2*y^2 + y^5", Mode::Local);
  CHECK(q.mode == Mode::Local);
  CHECK(q.terms.count({5, 0}) == 1);
  CHECK(q.terms.count({2, 2}) == 1);
  CHECK(q.terms.count({0, 5}) == 1);

  auto r = parse_polynomial("2*u - u");
  CHECK(r.terms.size() == 1);
  CHECK(r.terms.at({1}) == 1);
}

TEST_CASE("coefficients, signs and cancellation") {
  auto p = parse_polynomial("-3/2*u*v + 2u^3 - v + v + 1");
  CHECK(p.terms.at({1, 1}) == Rat(-3, 2));
  CHECK(p.terms.at({3, 0}) == 2);
  CHECK(p.terms.at({0, 0}) == 1);
  CHECK(p.terms.count({0, 1}) == 0);
  CHECK(parse_polynomial("x_1^2 + x_2").vars == std::vector<std::string>{"x_1", "x_2"});
}

TEST_CASE("variable order") {
  auto p = parse_polynomial("v^2 + u", Mode::Global);
  CHECK(p.vars == std::vector<std::string>{"v", "u"});
  auto q = parse_polynomial("v^2 + u", Mode::Global, std::vector<std::string>{"u", "v"});
  CHECK(q.terms.count({0, 2}) == 1);
  CHECK_THROWS_WITH_AS(parse_polynomial("u + w", Mode::Global, std::vector<std::string>{"u", "v"}),
                       doctest::Contains("w"), Error);
}

TEST_CASE("parse errors carry a kind and a byte offset") {
  try {
    parse_polynomial("u^2 + * v");
    FAIL("expected a syntax error");
  } catch (const ParseError& e) {
    CHECK(e.kind() == ErrorKind::Syntax);
    CHECK(e.offset() == 6);
  }
  try {
    parse_polynomial("u^-2 + v");
    FAIL("expected a negative exponent error");
  } catch (const ParseError& e) {
    CHECK(e.kind() == ErrorKind::NegativeExponent);
  }
  try {
    parse_polynomial("x^2 + 1 + y^2", Mode::Local);
    FAIL("expected a constant term error");
  } catch (const ParseError& e) {
    CHECK(e.kind() == ErrorKind::ConstantTermInLocalMode);
  }
  CHECK_THROWS_AS(parse_polynomial("u v"), ParseError);
  CHECK_THROWS_AS(parse_polynomial(""), Error);
  CHECK_THROWS_AS(parse_polynomial("3"), Error);
}

TEST_CASE("round trip through the canonical text") {
  for (const char* text : {"u^2 + u^2*v^2 + v^2", "-3/2*u*v + 2*u^3 - v + 7", "x^5 + x^2*y^2 + y^5"}) {
    auto p = parse_polynomial(text);
    auto again = parse_polynomial(p.to_string(), p.mode, p.vars);
    CHECK(again == p);
    CHECK(again.to_string() == p.to_string());
  }
}

TEST_CASE("check_convenient") {
  CHECK(check_convenient(parse_polynomial("u^2 + u^2*v^2 + v^2")) == std::vector<std::int64_t>{2, 2});
  CHECK(check_convenient(parse_polynomial("u+v+w+u^2*v^2*w^2+v^2*w^2")) == std::vector<std::int64_t>{1, 1, 1});
  CHECK(check_convenient(parse_polynomial("u^3 + u + v^4 + v^2")) == std::vector<std::int64_t>{1, 2});
  try {
    check_convenient(parse_polynomial("u + u*v"));
    FAIL("expected NotConvenient");
  } catch (const NotConvenientError& e) {
    CHECK(e.missing_axes() == std::vector<std::size_t>{2});
    CHECK(std::string(e.what()).find("axis 2") != std::string::npos);
  }
}

TEST_CASE("restrictions") {
  auto sq = parse_polynomial("u^2 + u^2*v^2 + v^2");
  auto r = restrict_poly(sq, {1});
  CHECK(r.vars == std::vector<std::string>{"u"});
  CHECK(r == parse_polynomial("u^2"));

  auto p = parse_polynomial("u+v+w+u^2*v^2*w^2+v^2*w^2");
  CHECK(restrict_poly(p, {0}) == parse_polynomial("v+w+v^2*w^2"));

  auto x = parse_polynomial("x^5 + x^2*y^2 + y^5", Mode::Local);
  CHECK(restrict_poly(x, {1}) == parse_polynomial("x^5", Mode::Local));

  CHECK_THROWS_AS(restrict_poly(sq, {0, 1}), Error);
  CHECK_THROWS_AS(restrict_poly(sq, {5}), Error);
}

TEST_CASE("restriction commutes and keeps convenience") {
  auto p = parse_polynomial("u+v+w+u^2*v^2*w^2+v^2*w^2+u*w");
  auto stepwise = restrict_poly(restrict_poly(p, {0}), {1});  // u, then w (index 1 after dropping u)
  CHECK(stepwise == restrict_poly(p, {0, 2}));
  CHECK_NOTHROW(check_convenient(restrict_poly(p, {1})));
}

TEST_CASE("monomials") {
  std::vector<std::string> vars = {"u", "v"};
  CHECK(parse_monomial("u^2*v", vars) == ExpVec{2, 1});
  CHECK(parse_monomial("1", vars) == ExpVec{0, 0});
  CHECK(monomial_to_string({2, 1}, vars) == "u^2*v");
  CHECK(monomial_to_string({0, 0}, vars) == "1");
  CHECK_THROWS_AS(parse_monomial("w", vars), Error);
}
