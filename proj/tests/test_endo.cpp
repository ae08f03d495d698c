#include <doctest.h>

#include "invol/endo.hpp"
#include "invol/error.hpp"
#include "invol/harness.hpp"
#include "oracle.hpp"

using namespace invol;

namespace {

Poly P(const char* s) { return parse_poly(s); }
Endo E(const char* s) { return parse_endo(s); }

}  // namespace

TEST_CASE("endomorphism text form") {
  CHECK(E("P = x+y^2; Q = y") == Endo{P("x + y^2"), P("y")});
  CHECK(E("alpha") == alpha());
  CHECK(E(" beta ") == beta());
  CHECK(E("id") == Endo::identity());
  CHECK(render(E("P=y;Q=x")) == "P = y; Q = x");
  CHECK_THROWS_AS(E("P = x"), SyntaxError);
  CHECK_THROWS_AS(E("Q = x; P = y"), SyntaxError);
  CHECK_THROWS_AS(E("P x; Q = y"), SyntaxError);
  try {
    E("P = x; Q = y +");
    FAIL("accepted");
  } catch (const SyntaxError& e) {
    CHECK(e.position() == 14);
  }
}

TEST_CASE("composition is outer after inner") {
  const Endo f = E("P = x + y^2; Q = y"), g = E("P = x; Q = y + x");
  // compose(f, g)(x) = f(g(x)) = f(x); compose(f, g)(y) = f(y + x)
  CHECK(compose(f, g) == Endo{P("x + y^2"), P("x + y^2 + y")});
  CHECK(apply(f, P("x*y")) == P("x y + y^3"));
  CHECK(compose(f, Endo::identity()) == f);
  CHECK(compose(Endo::identity(), f) == f);

  Rng rng(21, 0);
  for (int round = 0; round < 20; ++round) {
    const Endo a{random_poly(rng, 3, 5), random_poly(rng, 3, 5)};
    const Endo b{random_poly(rng, 3, 5), random_poly(rng, 3, 5)};
    CHECK(compose(a, b) == oracle::compose(a, b));
  }
}

TEST_CASE("golden Jacobians") {
  CHECK(jacobian_of(E("P = x + y^2; Q = y")) == Poly(1));
  CHECK(jacobian_of(alpha()) == Poly(-1));
  CHECK(is_jacobian_unit(E("P = 2x + y^5; Q = -3y + 1")));
  CHECK_FALSE(is_jacobian_unit(E("P = x^2; Q = y")));
  CHECK_FALSE(is_jacobian_unit(E("P = x + y; Q = 2x + 2y")));
}

TEST_CASE("involutions") {
  CHECK(is_involution(alpha()));
  CHECK(is_involution(beta()));
  CHECK(is_involution(Endo::identity()));
  CHECK(is_involution(E("P = -x + y^2; Q = -y")));
  CHECK_FALSE(is_involution(E("P = x + y^2; Q = y")));
  CHECK_FALSE(is_involution(E("P = x^2; Q = y")));
  CHECK_FALSE(is_involution(E("P = y; Q = 2x")));
  try {
    require_involution(E("P = x + 1; Q = y"), "eps");
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotInvolution);
    CHECK(std::string(e.what()).find("eps") != std::string::npos);
  }
}

TEST_CASE("intertwining") {
  // f = (x + y, x - y): f beta = alpha f.
  const Endo f = E("P = x + y; Q = x - y");
  CHECK(intertwines(f, beta(), alpha()));
  CHECK_FALSE(intertwines(f, alpha(), alpha()));
  CHECK(compose(f, beta()) == compose(alpha(), f));
  CHECK_THROWS_AS(intertwines(f, E("P = x + 1; Q = y"), alpha()), Error);
}

TEST_CASE("symmetric and skew parts") {
  const SymSkewSplit sp = sym_skew_split(P("x^2 + 3y"), alpha());
  CHECK(sp.s == P("1/2x^2 + 1/2y^2 + 3/2x + 3/2y"));
  CHECK(sp.k == P("1/2x^2 - 1/2y^2 - 3/2x + 3/2y"));
  const SymSkewSplit again = sym_skew_split(sp.s, alpha());
  CHECK(again.s == sp.s);
  CHECK(again.k.is_zero());
  CHECK(sym_skew_split(sp.k, alpha()).s.is_zero());
  CHECK(sym_skew_split(P("x y^3"), beta()).k == P("x y^3"));
}

TEST_CASE("parity formula agrees with direct differentiation") {
  for (unsigned i = 0; i <= 3; ++i)
    for (unsigned j = 0; j <= 3; ++j)
      for (unsigned k = 0; k <= 3; ++k)
        for (unsigned l = 0; l <= 3; ++l) {
          const oracle::Dense s = oracle::add(oracle::from(Poly::monomial(1, i, j)),
                                              oracle::from(Poly::monomial(1, j, i)));
          const oracle::Dense t = oracle::add(oracle::from(Poly::monomial(1, k, l)),
                                              oracle::from(Poly::monomial(1, l, k)));
          CAPTURE(i);
          CAPTURE(j);
          CAPTURE(k);
          CAPTURE(l);
          CHECK(jac_parity_formula(i, j, k, l) == oracle::to_poly(oracle::jac(s, t)));
        }
}

TEST_CASE("Jacobian of a symmetric form and its alpha image") {
  Rng rng(22, 0);
  for (int round = 0; round < 20; ++round) {
    const Rat a(rng.nonzero(9)), b(rng.nonzero(9));
    const Poly l = a * Poly::x() + b * Poly::y();
    CHECK(jac(l, apply(alpha(), l)) == Poly(a * a - b * b));
  }
}
