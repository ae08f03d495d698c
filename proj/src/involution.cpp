// Conjugacy classification of involutions of K[x,y].
//
// The automorphism group is the amalgamated product of the affine and the
// triangular groups over their intersection. An element of finite order is
// conjugate into one of the factors, so an involution's reduced word can be
// rotated down to a single factor, which is then put in normal form.

#include <algorithm>
#include <string>

#include "invol/tame.hpp"

namespace invol {
namespace {

// gamma == h^-1 current h, with h also kept as a word.
struct Conjugation {
  Endo current;
  Endo h = Endo::identity();
  std::vector<Elementary> h_word;

  // h <- s h without touching current.
  void track(const Elementary& s) {
    h = compose(to_endo(s), h);
    h_word.insert(h_word.begin(), s);
  }
  // current <- s current s^-1
  void apply(const Elementary& s) {
    current = compose(compose(to_endo(s), current), to_endo(inverse(s)));
    track(s);
  }
};

Vector2 mat_vec(const Matrix2& M, const Vector2& v) {
  return {M[0][0] * v[0] + M[0][1] * v[1], M[1][0] * v[0] + M[1][1] * v[1]};
}

bool parallel(const Vector2& a, const Vector2& b) { return is_zero(a[0] * b[1] - a[1] * b[0]); }

InvolutionClass normalize_affine(Conjugation& state, const Affine& L) {
  const bool plus_identity = L.M[0][0] == 1 && L.M[1][1] == 1 && is_zero(L.M[0][1]) &&
                             is_zero(L.M[1][0]);
  const bool minus_identity = L.M[0][0] == -1 && L.M[1][1] == -1 && is_zero(L.M[0][1]) &&
                              is_zero(L.M[1][0]);
  if (plus_identity) {
    ensure(is_zero(L.t[0]) && is_zero(L.t[1]), "translation is not an involution");
    return {InvolutionTag::Identity, std::nullopt};
  }
  // gamma = g^-1 N g has matrix G N G^-1 and translation (I - M) s; the
  // translation of an involution lies in the (-1)-eigenspace, so s = t/2.
  const Rat half(1, 2);
  Affine g;
  g.t = {half * L.t[0], half * L.t[1]};
  InvolutionTag tag;
  if (minus_identity) {
    g.M = {{{1, 0}, {0, 1}}};
    tag = InvolutionTag::MinusIdentity;
  } else {
    // Eigenvalues {1, -1}: columns w, Mw give M G = G A.
    Vector2 w{1, 0};
    if (parallel(w, mat_vec(L.M, w))) w = {0, 1};
    if (parallel(w, mat_vec(L.M, w))) w = {1, 1};
    Vector2 mw = mat_vec(L.M, w);
    ensure(!parallel(w, mw), "no cyclic vector for a linear involution");
    g.M = {{{w[0], mw[0]}, {w[1], mw[1]}}};
    tag = InvolutionTag::AlphaConjugate;
  }
  // current == g^-1 N g, so N == g current g^-1.
  state.apply(Elementary{g});
  return {tag, std::nullopt};
}

InvolutionClass normalize_triangular(Conjugation& state, const Triangular& t) {
  ensure((t.a == 1 || t.a == -1) && (t.c == 1 || t.c == -1),
         "triangular involution with a, c outside {1, -1}");
  if (t.c == -1 && !is_zero(t.d)) {
    Triangular shift{1, 1, t.d / 2, Poly()};
    state.apply(Elementary{shift});
  }
  auto cur = as_triangular(state.current);
  ensure(cur.has_value() && is_zero(cur->d), "y-shift left a translation");
  // With k: x -> x + q(y), k^-1 (a x, c y) k has p(y) = q(c y) - a q(y);
  // q = -a p / 2 solves it for every admissible (a, c).
  Triangular k{1, 1, 0, Rat(-cur->a / 2) * cur->p};
  state.apply(Elementary{k});
  auto lin = as_affine(state.current);
  ensure(lin.has_value(), "triangular involution did not linearise");
  return normalize_affine(state, *lin);
}

}  // namespace

Endo normal_form(InvolutionTag tag) {
  switch (tag) {
    case InvolutionTag::Identity: return Endo::identity();
    case InvolutionTag::MinusIdentity: return {-Poly::x(), -Poly::y()};
    case InvolutionTag::AlphaConjugate: return alpha();
  }
  return Endo::identity();
}

Endo conjugate_by(const Endo& g, const Endo& base) {
  const int dg = std::max(g.P.degree(), g.Q.degree());
  const int db = std::max(base.P.degree(), base.Q.degree());
  if (dg * dg * db <= kDirectCheckDegree) return compose(compose(invert(g), base), g);
  // Multiplying out the word lets g^-1 and g cancel against base first.
  const std::vector<Elementary> gw = decompose(g).factors;
  std::vector<Elementary> word = inverse_word(gw);
  const std::vector<Elementary> bw = decompose(base).factors;
  word.insert(word.end(), bw.begin(), bw.end());
  word.insert(word.end(), gw.begin(), gw.end());
  return compose_word(std::move(word));
}

InvolutionClass classify_involution(const Endo& gamma) {
  require_involution(gamma, "gamma");
  const std::vector<Elementary> gamma_word = decompose(gamma).factors;
  auto word = gamma_word;
  const std::size_t budget = 2 * word.size();
  std::size_t rotations = 0;
  std::vector<Elementary> conjugators;
  while (word.size() > 1) {
    if (word.front().index() != word.back().index() || ++rotations > budget)
      throw Error(ErrorCode::AssertionFailure,
                  "involution word does not shorten under cyclic conjugation: " +
                      render(gamma));
    // e1^-1 (e1 e2 ... en) e1 = e2 ... en e1
    conjugators.push_back(inverse(word.front()));
    std::rotate(word.begin(), word.begin() + 1, word.end());
    word = reduced_word(std::move(word));
  }
  Conjugation state{to_endo(word.front()), Endo::identity(), {}};
  for (const auto& s : conjugators) state.track(s);

  InvolutionClass out;
  if (const auto* tr = std::get_if<Triangular>(&word.front()))
    out = normalize_triangular(state, *tr);
  else
    out = normalize_affine(state, std::get<Affine>(word.front()));

  ensure(state.current == normal_form(out.tag), "involution not reduced to its normal form");
  if (out.tag != InvolutionTag::Identity) {
    out.conjugator = state.h;
    // gamma == h^-1 N h as words; the rotations make them cancel factor by
    // factor.
    std::vector<Elementary> rhs = inverse_word(state.h_word);
    rhs.push_back(*as_affine(normal_form(out.tag)));
    rhs.insert(rhs.end(), state.h_word.begin(), state.h_word.end());
    ensure(same_product(gamma_word, rhs), "conjugator does not reproduce the involution");
    ensure(compose_word(state.h_word) == state.h, "conjugator word and map disagree");
  }
  return out;
}

Endo conjugate_to_alpha(const Endo& gamma) {
  InvolutionClass cls = classify_involution(gamma);
  if (cls.tag != InvolutionTag::AlphaConjugate)
    throw Error(ErrorCode::NotConjugateToAlpha,
                render(gamma) + " is " +
                    (cls.tag == InvolutionTag::Identity ? "the identity" : "conjugate to (-x, -y)") +
                    ", not to alpha");
  return *cls.conjugator;
}

}  // namespace invol
