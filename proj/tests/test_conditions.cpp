#include <doctest.h>

#include "invol/conditions.hpp"
#include "invol/error.hpp"
#include "oracle.hpp"

using namespace invol;

namespace {

Poly P(const char* s) { return parse_poly(s); }
Endo E(const char* s) { return parse_endo(s); }

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

TEST_CASE("gamma and delta") {
  const Endo f = E("P = x + y^2; Q = y");
  const auto pair = find_gamma_delta(f);
  REQUIRE(pair.has_value());
  CHECK(pair->delta == alpha());
  CHECK(pair->gamma == oracle::compose(oracle::compose(E("P = x - y^2; Q = y"), alpha()), f));
  CHECK(oracle::compose(f, pair->gamma) == oracle::compose(alpha(), f));

  const auto id = find_gamma_delta(Endo::identity());
  REQUIRE(id.has_value());
  CHECK(id->gamma == alpha());

  const Endo lin = E("P = x + y; Q = x - y");
  const auto lp = find_gamma_delta(lin);
  REQUIRE(lp.has_value());
  CHECK(oracle::compose(lin, lp->gamma) == oracle::compose(alpha(), lin));

  CHECK(code_of([] { find_gamma_delta(E("P = x^2; Q = y")); }) == ErrorCode::JacobianNotUnit);
}

TEST_CASE("reduction to an alpha-endomorphism") {
  const Endo f = E("P = x + y^2; Q = y");
  const AlphaReduction r = reduce_to_alpha_endo(f, {beta(), beta()});
  CHECK(r.g == E("P = x + y; Q = x - y"));
  CHECK(r.h == r.g);
  CHECK(oracle::compose(r.core, alpha()) == oracle::compose(alpha(), r.core));
  CHECK(is_jacobian_unit(r.core));

  const AlphaReduction ra = reduce_to_alpha_endo(alpha(), {alpha(), alpha()});
  CHECK(ra.g == Endo::identity());
  CHECK(ra.core == alpha());

  CHECK(code_of([&] { reduce_to_alpha_endo(f, {alpha(), alpha()}); }) ==
        ErrorCode::NotIntertwining);
  const Endo minus = E("P = -x; Q = -y");
  CHECK(code_of([&] { reduce_to_alpha_endo(Endo::identity(), {minus, minus}); }) ==
        ErrorCode::NotConjugateToAlpha);
}

TEST_CASE("restriction and extension") {
  const Endo f = E("P = x + y^2; Q = y");
  const auto ra = check_restriction(f, alpha());
  REQUIRE(ra.has_value());
  CHECK(ra->phiP.phi == parse_poly("v + u^2 - 2u v^2 + v^4", kUV));  // y + x^2
  CHECK(ra->phiQ.phi == parse_poly("u - v^2", kUV));                 // x
  const auto rb = check_restriction(f, beta());
  REQUIRE(rb.has_value());
  CHECK(rb->phiP.phi == parse_poly("u", kUV));
  CHECK(rb->phiQ.phi == parse_poly("-v", kUV));
  CHECK(code_of([] { check_restriction(E("P = x^2; Q = y"), alpha()); }) ==
        ErrorCode::JacobianNotUnit);
  CHECK(code_of([&] { check_restriction(f, E("P = x + 1; Q = y")); }) == ErrorCode::NotInvolution);

  const auto sigma = check_extension(f);
  REQUIRE(sigma.has_value());
  CHECK(oracle::apply(*sigma, f.P) == f.Q);
  CHECK(oracle::apply(*sigma, f.Q) == f.P);
  CHECK(oracle::compose(*sigma, *sigma) == Endo::identity());
  CHECK(check_extension(alpha()) == alpha());

  // Degree 5 and 9: the word-based paths.
  const Endo f5 = E("P = x + y^5; Q = y");
  const auto s5 = check_extension(f5);
  REQUIRE(s5.has_value());
  CHECK(oracle::apply(*s5, f5.P) == f5.Q);
  CHECK(oracle::apply(*s5, f5.Q) == f5.P);
  const Endo f9 = oracle::compose(E("P = x + y^3; Q = y"), E("P = x; Q = y + 2x^3 - x"));
  const auto r9 = check_restriction(f9, alpha());
  REQUIRE(r9.has_value());
  const auto direct = in_subalgebra(apply(alpha(), f9.P), f9.P, f9.Q);
  REQUIRE(direct.has_value());
  CHECK(r9->phiP.phi == direct->phi);
  CHECK(check_extension(Endo::identity()) == alpha());
}

TEST_CASE("generalized endomorphisms") {
  CHECK(is_generalized(E("P = x + y^2; Q = y"), alpha()) == Branch::Q);
  CHECK_FALSE(is_generalized(E("P = x + y; Q = x - y"), alpha()).has_value());
  CHECK(is_generalized(E("P = x + y; Q = x - y"), beta()) == Branch::P);
  CHECK(is_generalized(E("P = 2x + 3y; Q = x + 2y"), alpha()) == Branch::P);
  CHECK(jac(P("2x + 3y"), apply(alpha(), P("2x + 3y"))) == Poly(-5));

  const auto q = invert_via_generalized(E("P = x + y^2; Q = y"), alpha());
  CHECK(q.inverse == E("P = x - y^2; Q = y"));
  CHECK(q.cert.a == 1);
  CHECK(q.cert.b == -1);
  CHECK(q.cert.branch == Branch::Q);
  CHECK(verify(q.cert, E("P = x + y^2; Q = y"), alpha()));

  const auto l = invert_via_generalized(E("P = 2x + 3y; Q = x + 2y"), alpha());
  CHECK(l.inverse == E("P = 2x - 3y; Q = -x + 2y"));
  CHECK(l.cert.a == 1);
  CHECK(l.cert.b == -5);
  // eps P = (b/a) Q + b H(P)
  CHECK(l.cert.epsP == (l.cert.b / l.cert.a) * P("x + 2y") + l.cert.b * l.cert.h.evaluate(P("2x + 3y")));

  const auto b = invert_via_generalized(E("P = x + y; Q = x - y"), beta());
  CHECK(b.inverse == E("P = 1/2x + 1/2y; Q = 1/2x - 1/2y"));
  CHECK(b.cert.b == -2);

  CHECK(code_of([] { invert_via_generalized(E("P = x + y; Q = x - y"), alpha()); }) ==
        ErrorCode::HypothesisFailed);

  // A tampered certificate is rejected.
  auto bad = q.cert;
  bad.b = 2;
  CHECK_FALSE(verify(bad, E("P = x + y^2; Q = y"), alpha()));
}

TEST_CASE("symmetric images") {
  const auto s = invert_via_symmetry(E("P = x + y; Q = y"), alpha());
  CHECK(s.cert.fixed == Branch::P);
  CHECK(s.cert.sign == 1);
  CHECK(s.cert.a == 1);
  CHECK(s.cert.b == -1);
  CHECK(s.cert.h.h == std::vector<Rat>{0, 1});
  CHECK(s.cert.restriction.phiQ.phi == parse_poly("u - v", kUV));
  CHECK(s.inverse == E("P = x - y; Q = y"));
  CHECK(verify(s.cert, E("P = x + y; Q = y"), alpha()));

  const auto t = invert_via_symmetry(E("P = x; Q = y + x^2"), beta());
  CHECK(t.inverse == E("P = x; Q = y - x^2"));

  CHECK(code_of([] { invert_via_symmetry(E("P = x + y^2; Q = y"), alpha()); }) ==
        ErrorCode::SymmetryHypothesisFailed);
}

TEST_CASE("symmetric and skew generators") {
  const auto a = invert_via_sk(E("P = x + y; Q = x - y"), P("x + y"), P("x - y"));
  CHECK(a.g == E("P = 2x; Q = 2y"));
  CHECK(a.inverse == E("P = 1/2x + 1/2y; Q = 1/2x - 1/2y"));

  const auto b = invert_via_sk(alpha(), P("x + y"), P("y - x"));
  CHECK(b.g == E("P = 2y; Q = 2x"));
  CHECK(b.inverse == alpha());

  try {
    invert_via_sk(E("P = x + y^2; Q = y"), P("x + y"), Poly());
    FAIL("accepted jac(s, k) = 0");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::HypothesisFailed);
    CHECK(std::string(e.what()).find("Jac") != std::string::npos);
  }
  CHECK(code_of([] { invert_via_sk(E("P = x + y^2; Q = y"), P("x^2"), P("x - y")); }) ==
        ErrorCode::HypothesisFailed);
}

TEST_CASE("symmetric conjugation") {
  const auto to = symmetric_conjugation(P("x"), Direction::ToAlpha, beta());
  CHECK(to.map == E("P = x + y; Q = x - y"));
  CHECK(apply(to.map, P("x")) == P("x + y"));
  CHECK(to.sign == 1);

  const auto from = symmetric_conjugation(P("x + y"), Direction::FromAlpha, Endo::identity());
  CHECK(from.map == alpha());
  CHECK(from.sign == 1);
  const auto skew = symmetric_conjugation(P("x^2 - y^2"), Direction::FromAlpha, Endo::identity());
  CHECK(skew.map == alpha());
  CHECK(skew.sign == -1);

  CHECK(code_of([] { symmetric_conjugation(P("x + y^2"), Direction::FromAlpha, Endo::identity()); }) ==
        ErrorCode::HypothesisFailed);
}
