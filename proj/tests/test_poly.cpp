#include <doctest.h>

#include "invol/error.hpp"
#include "invol/harness.hpp"
#include "invol/poly.hpp"
#include "oracle.hpp"

using namespace invol;

namespace {

Poly P(const char* s) { return parse_poly(s); }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::AssertionFailure;
}

}  // namespace

TEST_CASE("rationals print and parse in lowest terms") {
  CHECK(to_string(Rat(6) / 4) == "3/2");
  CHECK(to_string(Rat(-3)) == "-3");
  CHECK(parse_rat("-10/4") == Rat(-5, 2));
  CHECK(parse_rat("7") == Rat(7));
  CHECK(code_of([] { parse_rat("1/0"); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { parse_rat("abc"); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("parse and render") {
  CHECK(render(P("y + x^2")) == "x^2 + y");
  CHECK(render(P("2x*y^2 - 1/2 + x^2")) == "x^2 + 2*x*y^2 - 1/2");
  CHECK(render(P("x - x")) == "0");
  CHECK(render(P("-x")) == "-x");
  CHECK(render(P("x y x")) == "x^2*y");
  CHECK(render(parse_poly("u + v^3", kUV), kUV) == "u + v^3");
  CHECK(P("3/6*x") == Rat(1, 2) * Poly::x());

  for (const char* bad : {"", "x +", "x^", "x^0", "(x)", "3/0", "x ** 2", "z"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(P(bad), SyntaxError);
  }
  try {
    P("x + ?");
  } catch (const SyntaxError& e) {
    CHECK(e.position() == 4);
    CHECK(e.code() == ErrorCode::Syntax);
  }
}

TEST_CASE("terms are grlex-descending and canonical") {
  const Poly p = P("y^3 + x*y + x^3 + 1 - x*y");
  REQUIRE(p.size() == 3);
  CHECK(p.terms()[0].m == Monomial{3, 0});
  CHECK(p.terms()[1].m == Monomial{0, 3});
  CHECK(p.terms()[2].m == Monomial{0, 0});
  CHECK(p.degree() == 3);
  CHECK(Poly().degree() == -1);
  CHECK(p.degree_in(Var::Y) == 3);
  CHECK(leading_form(p) == P("x^3 + y^3"));
  CHECK(code_of([] { leading_form(Poly()); }) == ErrorCode::ZeroPolynomial);
  CHECK(code_of([] { Poly().leading_term(); }) == ErrorCode::ZeroPolynomial);
}

TEST_CASE("calculus") {
  CHECK(partial(P("x^3*y + y^2"), Var::X) == P("3x^2 y"));
  CHECK(partial(P("x^3*y + y^2"), Var::Y) == P("x^3 + 2y"));
  CHECK(jac(P("x + y^2"), P("y")) == Poly(1));
  CHECK(jac(P("y"), P("x")) == Poly(-1));
  CHECK(pow(P("x + y"), 3) == P("x^3 + 3x^2y + 3x y^2 + y^3"));
  CHECK(pow(P("x"), 0) == Poly(1));
  CHECK(substitute(P("x^2 + y"), P("x + y"), P("x - y")) == P("x^2 + 2xy + y^2 + x - y"));
  CHECK(univariate({1, 0, 2}, Var::Y) == P("1 + 2y^2"));
  CHECK(evaluate_univariate({1, 0, 2}, P("x + y")) == P("1 + 2x^2 + 4xy + 2y^2"));
}

TEST_CASE("degree cap") {
  const Poly big = Poly::monomial(1, 0, kMaxVarDegree);
  CHECK(code_of([&] { (void)(big * Poly::y()); }) == ErrorCode::DegreeCapExceeded);
  CHECK(code_of([&] { pow(P("y^300"), 300); }) == ErrorCode::DegreeCapExceeded);
}

TEST_CASE("arithmetic matches the reference implementation") {
  Rng rng(11, 0);
  for (int round = 0; round < 60; ++round) {
    const Poly a = random_poly(rng, 6, 9), b = random_poly(rng, 6, 9);
    const Rat s = Rat(rng.nonzero(7)) / rng.uniform(1, 5);
    CAPTURE(render(a));
    CAPTURE(render(b));
    CHECK(a + b == oracle::to_poly(oracle::add(oracle::from(a), oracle::from(b))));
    CHECK(s * a * b == oracle::to_poly(oracle::scale(oracle::mul(oracle::from(a), oracle::from(b)), s)));
    CHECK(jac(a, b) == oracle::to_poly(oracle::jac(oracle::from(a), oracle::from(b))));
  }
}

TEST_CASE("large products and substitutions match the reference") {
  // Sizes above the integer-kernel thresholds, with rational coefficients
  // and negative terms, so both schoolbook and Kronecker paths run.
  Rng rng(12, 0);
  for (int round = 0; round < 4; ++round) {
    Poly a = random_poly(rng, 30, 1000), b = random_poly(rng, 24, 1000);
    a = Rat(1, 3 + round) * a + Poly(Rat(-7, 2));
    b = Rat(-5, 4) * b;
    CHECK(a * b == oracle::to_poly(oracle::mul(oracle::from(a), oracle::from(b))));
  }
  for (int round = 0; round < 3; ++round) {
    const Poly p = Rat(1, 2) * random_poly(rng, 7, 50);
    const Poly px = Rat(2, 3) * random_poly(rng, 3, 20) + Poly::monomial(Rat(1, 5), 0, 6);
    const Poly py = random_poly(rng, 2, 20) - Poly::monomial(Rat(3, 7), 5, 0);
    CHECK(substitute(p, px, py) ==
          oracle::to_poly(oracle::substitute(oracle::from(p), oracle::from(px), oracle::from(py))));
  }
  // Sparse, far apart exponents: falls back to hashed accumulation.
  const Poly sparse_a = P("x^3000 + 2y^3000 - 1/3") + random_poly(rng, 40, 5);
  const Poly sparse_b = P("x^2999*y - y^2900") + random_poly(rng, 40, 5);
  CHECK(sparse_a * sparse_b ==
        oracle::to_poly(oracle::mul(oracle::from(sparse_a), oracle::from(sparse_b))));
}
