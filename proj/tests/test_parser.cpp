#include <doctest.h>

#include "purebetti/error.hpp"
#include "purebetti/parser.hpp"
#include "support.hpp"

using namespace purebetti;
using namespace purebetti::testing;

namespace {

HomogeneousPolynomial make(int n, std::initializer_list<std::pair<std::vector<int>, Rational>> terms) {
  HomogeneousPolynomial::Terms t;
  for (const auto& [e, c] : terms) t.emplace(Monomial{e}, c);
  return HomogeneousPolynomial(n, t);
}

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return Errc::InternalConsistency;
}

std::size_t position_of(std::string_view text, int n) {
  try {
    parse_generators(text, n);
  } catch (const SyntaxError& e) {
    return e.position();
  }
  FAIL("no syntax error for " << text);
  return 0;
}

}  // namespace

TEST_CASE("polynomials") {
  CHECK(parse_polynomial("x1*x2", 2) == make(2, {{{1, 1}, 1}}));
  CHECK(parse_polynomial("x1^2 - x2^2", 2) == make(2, {{{2, 0}, 1}, {{0, 2}, -1}}));
  CHECK(parse_polynomial("x^2 - y^2", 2) == parse_polynomial("x1^2 - x2^2", 2));
  CHECK(parse_polynomial("  -3/2 x y + 2*x^2 ", 2) == make(2, {{{1, 1}, q(-3, 2)}, {{2, 0}, 2}}));
  CHECK(parse_polynomial("x*x*y", 3) == make(3, {{{2, 1, 0}, 1}}));
  CHECK(parse_polynomial("2^3*z", 3) == make(3, {{{0, 0, 1}, 8}}));
  CHECK(parse_polynomial("x1 + x2 - x1", 2) == make(2, {{{0, 1}, 1}}));
  CHECK(parse_polynomial("u v", 6) == make(6, {{{0, 0, 0, 0, 1, 1}, 1}}));
}

TEST_CASE("printing round-trips") {
  for (const char* text : {"x1*x2", "x1^2 - x2^2", "-3/2*x1*x2 + x3^2", "7*x2^3"}) {
    const auto p = parse_polynomial(text, 3);
    CHECK(parse_polynomial(p.to_string(), 3) == p);
  }
  CHECK(parse_polynomial("x1*x2", 2).to_string() == "x1*x2");
}

TEST_CASE("generator lists") {
  const auto gens = parse_generators("x1*x2, x2*x3 ,x1^2-x3^2", 3);
  REQUIRE(gens.size() == 3);
  CHECK(gens[2] == make(3, {{{2, 0, 0}, 1}, {{0, 0, 2}, -1}}));
}

TEST_CASE("error codes") {
  CHECK(code_of([] { parse_polynomial("x3", 2); }) == Errc::UnknownVariable);
  CHECK(code_of([] { parse_polynomial("w", 3); }) == Errc::UnknownVariable);
  CHECK(code_of([] { parse_polynomial("x1^2 + x2", 2); }) == Errc::InhomogeneousPolynomial);
  CHECK(code_of([] { parse_polynomial("x1 - x1", 2); }) == Errc::ZeroPolynomial);
  CHECK(code_of([] { parse_polynomial("0*x1", 2); }) == Errc::ZeroPolynomial);
  CHECK(code_of([] { parse_polynomial("x1 + ", 2); }) == Errc::SyntaxError);
  CHECK(code_of([] { parse_polynomial("1/0*x1", 2); }) == Errc::SyntaxError);
  CHECK(code_of([] { parse_polynomial("x0", 2); }) == Errc::SyntaxError);
  CHECK(code_of([] { parse_polynomial("", 2); }) == Errc::SyntaxError);
}

TEST_CASE("syntax error positions") {
  CHECK(position_of("x1 + ", 2) == 5);
  CHECK(position_of("x1 * * x2", 2) == 5);
  CHECK(position_of("x1^", 2) == 3);
  CHECK(position_of("x1 ) x2", 2) == 3);
  CHECK(position_of("x1, x2 +", 2) == 8);
  CHECK(position_of("x1*x2,,x1", 2) == 6);
}
