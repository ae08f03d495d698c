#include <doctest.h>

#include "invol/error.hpp"
#include "invol/harness.hpp"
#include "invol/tame.hpp"
#include "oracle.hpp"

using namespace invol;

namespace {

Poly P(const char* s) { return parse_poly(s); }
Endo E(const char* s) { return parse_endo(s); }

ErrorCode stall_code(const Endo& f) {
  try {
    decompose(f);
  } catch (const DecompositionStall& e) {
    CHECK(e.input() == f);
    return e.code();
  }
  FAIL("decompose did not stall");
  return ErrorCode::AssertionFailure;
}

bool alternates(const std::vector<Elementary>& word) {
  for (std::size_t k = 0; k + 1 < word.size(); ++k)
    if (word[k].index() == word[k + 1].index()) return false;
  return true;
}

}  // namespace

TEST_CASE("elementary maps") {
  const Affine a{{{{2, 1}, {1, 1}}}, {3, -1}};
  CHECK(a.to_endo() == E("P = 2x + y + 3; Q = x + y - 1"));
  CHECK(a.det() == 1);
  const Endo ai = to_endo(inverse(a));
  CHECK(oracle::compose(a.to_endo(), ai) == Endo::identity());
  CHECK(oracle::compose(ai, a.to_endo()) == Endo::identity());

  const Triangular t{2, -1, 5, P("y^3 - y")};
  CHECK(t.to_endo() == E("P = 2x + y^3 - y; Q = -y + 5"));
  const Endo ti = to_endo(inverse(t));
  CHECK(oracle::compose(t.to_endo(), ti) == Endo::identity());
  CHECK(oracle::compose(ti, t.to_endo()) == Endo::identity());

  CHECK(as_affine(E("P = x + y; Q = x + y")) == std::nullopt);
  CHECK(as_triangular(E("P = x + x y; Q = y")) == std::nullopt);
  CHECK(as_triangular(E("P = 3x + y^2; Q = 2y")).has_value());
}

TEST_CASE("decompose and invert small maps") {
  const Endo f = E("P = x + y^2; Q = y");
  CHECK(render(invert(f)) == "P = x - y^2; Q = y");
  const Factorization fac = decompose(f);
  CHECK(fac.compose_all() == f);
  CHECK(invert(alpha()) == alpha());
  CHECK(decompose(Endo::identity()).factors.size() == 1);

  // A word of length 5 with degrees 3 and 2.
  const Endo t1 = Triangular{1, 1, 0, P("y^3")}.to_endo();
  const Endo t2 = Triangular{Rat(-1), 2, 1, P("y^2 - y")}.to_endo();
  const Endo g = oracle::compose(oracle::compose(oracle::compose(t1, alpha()), t2), alpha());
  const Factorization gf = decompose(g);
  CHECK(alternates(gf.factors));
  CHECK(oracle::compose(gf.compose_all(), Endo::identity()) == g);
  const Endo gi = invert(g);
  CHECK(oracle::compose(g, gi) == Endo::identity());
  CHECK(oracle::compose(gi, g) == Endo::identity());
}

TEST_CASE("reduced words merge and absorb") {
  const Affine shift{{{{1, 0}, {0, 1}}}, {1, 0}};
  const Triangular t{1, 1, 0, P("y^2")};
  const std::vector<Elementary> word{t, shift, t};
  const std::vector<Elementary> red = reduced_word(word);
  // The translation is triangular, so everything collapses to one factor.
  REQUIRE(red.size() == 1);
  CHECK(to_endo(red[0]) == E("P = x + 2y^2 + 1; Q = y"));
}

TEST_CASE("stalls carry the right code") {
  CHECK(stall_code(E("P = x^2; Q = y")) == ErrorCode::NotAnAutomorphism);
  CHECK(stall_code(E("P = x + y; Q = x + y")) == ErrorCode::NotAnAutomorphism);
  CHECK_FALSE(is_automorphism(E("P = x^3; Q = y")));
  CHECK(is_automorphism(E("P = y; Q = x + y^7")));
}

TEST_CASE("large corpus entries invert exactly") {
  // Entry 9 of the default corpus has degree 16.
  CorpusParams params;
  const CorpusEntry e = random_entry(params, 9);
  REQUIRE(e.endo.P.degree() >= 9);
  const Endo inv = invert(e.endo);
  CHECK(compose(e.endo, inv) == Endo::identity());
  CHECK(compose(inv, e.endo) == Endo::identity());
}

TEST_CASE("involution classification") {
  const InvolutionClass ca = classify_involution(alpha());
  CHECK(ca.tag == InvolutionTag::AlphaConjugate);

  const InvolutionClass cb = classify_involution(beta());
  REQUIRE(cb.tag == InvolutionTag::AlphaConjugate);
  REQUIRE(cb.conjugator.has_value());
  CHECK(conjugate_by(*cb.conjugator, alpha()) == beta());

  for (const char* s : {"P = -x; Q = -y", "P = -x + y^2; Q = -y"}) {
    const Endo m = E(s);
    const InvolutionClass c = classify_involution(m);
    CHECK(c.tag == InvolutionTag::MinusIdentity);
    REQUIRE(c.conjugator.has_value());
    CHECK(conjugate_by(*c.conjugator, normal_form(InvolutionTag::MinusIdentity)) == m);
    CHECK_THROWS_AS(conjugate_to_alpha(m), Error);
  }
  CHECK(classify_involution(Endo::identity()).tag == InvolutionTag::Identity);
  CHECK_THROWS_AS(classify_involution(E("P = x + 1; Q = y")), Error);

  // A conjugate of alpha by a degree-6 map.
  const Endo g = oracle::compose(Triangular{1, 1, 0, P("y^3 + 2y")}.to_endo(),
                                 oracle::compose(alpha(), Triangular{2, 1, 1, P("y^2")}.to_endo()));
  const Endo gamma = oracle::compose(oracle::compose(invert(g), alpha()), g);
  const Endo h = conjugate_to_alpha(gamma);
  CHECK(oracle::compose(oracle::compose(invert(h), alpha()), h) == gamma);
}

TEST_CASE("word products of large maps") {
  const Endo g = oracle::compose(E("P = x + y^3; Q = y"), E("P = x; Q = y + 2x^3 - x"));
  REQUIRE(g.Q.degree() == 9);
  const auto gw = decompose(g).factors;
  CHECK(compose_word(gw) == g);
  CHECK(compose(compose_word(inverse_word(gw)), g) == Endo::identity());
  CHECK(same_product(gw, decompose(g).factors));
  CHECK_FALSE(same_product(gw, inverse_word(gw)));

  // Degree 81: every check below goes through words.
  const Endo gamma = conjugate_by(g, alpha());
  CHECK(gamma == compose(compose(invert(g), alpha()), g));
  CHECK(is_involution(gamma));
  CHECK_FALSE(is_involution(compose(gamma, E("P = x + 1; Q = y"))));
  CHECK(intertwines(g, gamma, alpha()));
  CHECK_FALSE(intertwines(g, gamma, beta()));
  CHECK(is_jacobian_unit(gamma));

  const InvolutionClass c = classify_involution(gamma);
  REQUIRE(c.tag == InvolutionTag::AlphaConjugate);
  REQUIRE(c.conjugator.has_value());
  CHECK(conjugate_by(*c.conjugator, alpha()) == gamma);
}

TEST_CASE("word comparison agrees with multiplying out") {
  auto product = [](const std::vector<Elementary>& w) {
    Endo acc = Endo::identity();
    for (const auto& e : w) acc = oracle::compose(acc, to_endo(e));
    return acc;
  };
  Rng rng(34, 0);
  auto factor = [&]() -> Elementary {
    if (rng.uniform(0, 2) == 0) return random_affine(rng, 3);
    return random_triangular(rng, 2, 3);
  };
  int equal = 0;
  for (int round = 0; round < 150; ++round) {
    std::vector<Elementary> lhs;
    for (auto n = rng.uniform(1, 4); n > 0; --n) lhs.push_back(factor());
    std::vector<Elementary> rhs = lhs;
    switch (round % 3) {
      case 0: {  // insert s s^-1
        const Elementary s = factor();
        const auto at = rhs.begin() + rng.uniform(0, static_cast<std::int64_t>(rhs.size()));
        rhs.insert(rhs.insert(at, s) + 1, inverse(s));
        break;
      }
      case 1:  // change one factor
        rhs[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(rhs.size()) - 1))] = factor();
        break;
      default:  // an affine and a triangular that may meet in the intersection
        rhs.push_back(Affine{{{{1, 0}, {0, 1}}}, {Rat(rng.nonzero(3)), 0}});
        lhs.push_back(Triangular{1, 1, 0, Poly(Rat(rng.nonzero(3)))});
    }
    const bool want = product(lhs) == product(rhs);
    equal += want;
    CHECK(same_product(lhs, rhs) == want);
  }
  CHECK(equal >= 50);
}
