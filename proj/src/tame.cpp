#include "invol/tame.hpp"

#include <algorithm>

namespace invol {
namespace {


int degree(const Endo& f) { return std::max(f.P.degree(), f.Q.degree()); }

Poly linear(const Rat& cx, const Rat& cy, const Rat& c0) {
  return cx * Poly::x() + cy * Poly::y() + Poly(c0);
}

bool has_x(const Poly& p) { return p.degree_in(Var::X) > 0; }

// One degree-reduction step of decompose. On success, returns the factor e
// with f == (f o e) o e^-1, as the word for e^-1.
std::optional<std::pair<Endo, std::vector<Elementary>>> reduction_step(const Endo& g) {
  const int dp = g.P.degree(), dq = g.Q.degree();
  if (dp <= 0 || dq <= 0) return std::nullopt;
  const bool reduce_p = dp >= dq;
  const Poly& big = reduce_p ? g.P : g.Q;
  const Poly& small = reduce_p ? g.Q : g.P;
  const int db = reduce_p ? dp : dq, ds = reduce_p ? dq : dp;
  if (db % ds != 0) return std::nullopt;
  const auto m = static_cast<std::uint32_t>(db / ds);
  Poly lead_small_m = pow(leading_form(small), m);
  Poly lead_big = leading_form(big);
  if (lead_big.leading_term().m != lead_small_m.leading_term().m) return std::nullopt;
  Rat c = lead_big.leading_term().c / lead_small_m.leading_term().c;
  if (lead_big != c * lead_small_m) return std::nullopt;

  // x -> x + c y^m undoes P <- P - c Q^m. The mirrored step is conjugated
  // by the swap.
  Triangular undo{1, 1, 0, Poly::monomial(c, 0, m)};
  Triangular apply{1, 1, 0, Poly::monomial(-c, 0, m)};
  if (reduce_p) {
    return std::pair{compose(g, apply.to_endo()), std::vector<Elementary>{undo}};
  }
  Affine swap{{{{0, 1}, {1, 0}}}, {0, 0}};
  Endo e = compose(compose(alpha(), apply.to_endo()), alpha());
  return std::pair{compose(g, e), std::vector<Elementary>{swap, undo, swap}};
}

Elementary merge(const Elementary& a, const Elementary& b) {
  Endo ab = compose(to_endo(a), to_endo(b));
  if (is_affine(a)) {
    auto r = as_affine(ab);
    ensure(r.has_value(), "affine product is not affine");
    return *r;
  }
  auto r = as_triangular(ab);
  ensure(r.has_value(), "triangular product is not triangular");
  return *r;
}

bool is_identity(const Elementary& e) { return to_endo(e) == Endo::identity(); }

// Most-recent-first memo of the last few results; classification and the
// condition checks decompose and invert the same large maps repeatedly.
template <class Value>
class Recent {
 public:
  const Value* find(const Endo& f) {
    for (std::size_t k = 0; k < items_.size(); ++k) {
      if (items_[k].first == f) {
        std::rotate(items_.begin(), items_.begin() + static_cast<long>(k),
                    items_.begin() + static_cast<long>(k) + 1);
        return &items_.front().second;
      }
    }
    return nullptr;
  }
  const Value& insert(const Endo& f, Value v) {
    if (items_.size() == kCapacity) items_.pop_back();
    items_.emplace(items_.begin(), f, std::move(v));
    return items_.front().second;
  }

 private:
  static constexpr std::size_t kCapacity = 6;
  std::vector<std::pair<Endo, Value>> items_;
};

Factorization decompose_uncached(const Endo& f);

bool direct_jacobian_unit(const Endo& f) {
  const Poly j = jacobian_of(f);
  return !j.is_zero() && j.is_constant();
}

}  // namespace

Endo Affine::to_endo() const {
  return {linear(M[0][0], M[0][1], t[0]), linear(M[1][0], M[1][1], t[1])};
}

Endo Triangular::to_endo() const {
  return {a * Poly::x() + p, c * Poly::y() + Poly(d)};
}

Endo to_endo(const Elementary& e) {
  return std::visit([](const auto& v) { return v.to_endo(); }, e);
}

Elementary inverse(const Elementary& e) {
  if (const auto* af = std::get_if<Affine>(&e)) {
    Rat det = af->det();
    Affine inv;
    inv.M = {{{af->M[1][1] / det, -af->M[0][1] / det}, {-af->M[1][0] / det, af->M[0][0] / det}}};
    for (int r = 0; r < 2; ++r) inv.t[r] = -(inv.M[r][0] * af->t[0] + inv.M[r][1] * af->t[1]);
    return inv;
  }
  const auto& tr = std::get<Triangular>(e);
  Triangular inv;
  inv.a = 1 / tr.a;
  inv.c = 1 / tr.c;
  inv.d = -tr.d / tr.c;
  Poly y_pre = (1 / tr.c) * (Poly::y() - Poly(tr.d));
  inv.p = -(1 / tr.a) * substitute(tr.p, Poly::x(), y_pre);
  return inv;
}

std::optional<Affine> as_affine(const Endo& f) {
  if (f.P.degree() > 1 || f.Q.degree() > 1) return std::nullopt;
  Affine a;
  a.M = {{{f.P.coefficient({1, 0}), f.P.coefficient({0, 1})},
          {f.Q.coefficient({1, 0}), f.Q.coefficient({0, 1})}}};
  a.t = {f.P.constant_term(), f.Q.constant_term()};
  if (is_zero(a.det())) return std::nullopt;
  return a;
}

std::optional<Triangular> as_triangular(const Endo& f) {
  Triangular t;
  t.a = f.P.coefficient({1, 0});
  t.p = f.P - t.a * Poly::x();
  if (is_zero(t.a) || has_x(t.p)) return std::nullopt;
  if (f.Q.degree() > 1 || has_x(f.Q)) return std::nullopt;
  t.c = f.Q.coefficient({0, 1});
  t.d = f.Q.constant_term();
  if (is_zero(t.c)) return std::nullopt;
  return t;
}

Endo Factorization::compose_all() const {
  Endo result = Endo::identity();
  for (const auto& e : factors) result = compose(result, to_endo(e));
  return result;
}

DecompositionStall::DecompositionStall(ErrorCode code, Endo input, Endo stalled)
    : Error(code, std::string(code == ErrorCode::JCCandidate
                                  ? "Jacobian-unit map resists tame reduction (JCCandidate)"
                                  : "not an automorphism") +
                      ": input {" + render(input) + "} stalled at {" + render(stalled) + "}"),
      input_(std::move(input)),
      stalled_(std::move(stalled)) {}

std::vector<Elementary> reduced_word(std::vector<Elementary> word) {
  while (true) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (auto& e : word) {
        if (auto* tr = std::get_if<Triangular>(&e); tr && tr->p.degree() <= 1) {
          auto af = as_affine(tr->to_endo());
          ensure(af.has_value(), "linear triangular factor is singular");
          e = *af;
          changed = true;
        }
      }
      for (std::size_t i = 0; i + 1 < word.size(); ++i) {
        if (word[i].index() == word[i + 1].index()) {
          word[i] = merge(word[i], word[i + 1]);
          word.erase(word.begin() + static_cast<long>(i) + 1);
          changed = true;
          break;
        }
      }
      if (word.size() > 1) {
        for (std::size_t i = 0; i < word.size(); ++i) {
          if (is_identity(word[i])) {
            word.erase(word.begin() + static_cast<long>(i));
            changed = true;
            break;
          }
        }
      }
    }
    if (word.size() <= 1) return word;
    // Absorb an affine factor that is also triangular into a neighbour.
    bool absorbed = false;
    for (std::size_t i = 0; i < word.size() && !absorbed; ++i) {
      const auto* af = std::get_if<Affine>(&word[i]);
      if (!af || !af->is_triangular()) continue;
      auto as_tri = as_triangular(af->to_endo());
      ensure(as_tri.has_value(), "triangular affine factor not recognised");
      if (i + 1 < word.size()) {
        word[i + 1] = merge(*as_tri, word[i + 1]);
      } else {
        word[i - 1] = merge(word[i - 1], *as_tri);
      }
      word.erase(word.begin() + static_cast<long>(i));
      absorbed = true;
    }
    if (!absorbed) return word;
  }
}

Factorization decompose(const Endo& f) {
  thread_local Recent<Factorization> memo;
  if (const auto* hit = memo.find(f)) return *hit;
  return memo.insert(f, decompose_uncached(f));
}

namespace {

Factorization decompose_uncached(const Endo& f) {
  Factorization out;
  Endo g = f;
  std::vector<std::vector<Elementary>> undo;  // f == g o undo.back() o ... o undo.front()
  while (std::max(g.P.degree(), g.Q.degree()) > 1) {
    out.degree_trace.emplace_back(g.P.degree(), g.Q.degree());
    auto step = reduction_step(g);
    if (!step) {
      ErrorCode code = direct_jacobian_unit(f) ? ErrorCode::JCCandidate : ErrorCode::NotAnAutomorphism;
      throw DecompositionStall(code, f, g);
    }
    g = std::move(step->first);
    undo.push_back(std::move(step->second));
  }
  auto last = as_affine(g);
  if (!last) {
    ErrorCode code = direct_jacobian_unit(f) ? ErrorCode::JCCandidate : ErrorCode::NotAnAutomorphism;
    throw DecompositionStall(code, f, g);
  }
  std::vector<Elementary> word{*last};
  for (auto it = undo.rbegin(); it != undo.rend(); ++it)
    word.insert(word.end(), it->begin(), it->end());
  out.factors = reduced_word(std::move(word));
  // Every step above is an exact composition with an elementary map whose
  // inverse is known, so large inputs skip the full recomposition.
  if (degree(f) <= kDirectCheckDegree)
    ensure(out.compose_all() == f, "factorization does not recompose to its input");
  return out;
}

Endo invert_uncached(const Endo& f) {
  Factorization fac = decompose(f);
  // f == e1 ... en was checked by decompose, so en^-1 ... e1^-1 is f^-1 once
  // every factor inverse is checked.
  Endo inv = Endo::identity();
  for (auto it = fac.factors.rbegin(); it != fac.factors.rend(); ++it) {
    const Endo e = to_endo(*it), e_inv = to_endo(inverse(*it));
    ensure(compose(e, e_inv) == Endo::identity() && compose(e_inv, e) == Endo::identity(),
           "elementary factor inverse is wrong");
    inv = compose(inv, e_inv);
  }
  if (degree(f) * degree(inv) <= kDirectCheckDegree) {
    ensure(compose(f, inv) == Endo::identity(), "f o f^-1 is not the identity");
    ensure(compose(inv, f) == Endo::identity(), "f^-1 o f is not the identity");
  }
  return inv;
}

}  // namespace

std::vector<Elementary> inverse_word(const std::vector<Elementary>& word) {
  std::vector<Elementary> out;
  out.reserve(word.size());
  for (auto it = word.rbegin(); it != word.rend(); ++it) out.push_back(inverse(*it));
  return out;
}

Endo compose_word(std::vector<Elementary> word) {
  if (word.empty()) return Endo::identity();
  return Factorization{reduced_word(std::move(word)), {}}.compose_all();
}

bool same_product(const std::vector<Elementary>& lhs, const std::vector<Elementary>& rhs) {
  std::vector<Elementary> word = inverse_word(lhs);
  word.insert(word.end(), rhs.begin(), rhs.end());
  word = reduced_word(std::move(word));
  // Two or more factors left alternate between affine and triangular maps
  // outside their intersection. The tame group is the amalgamated product
  // of those two subgroups, so such a word is never the identity.
  if (word.size() >= 2) return false;
  return Factorization{std::move(word), {}}.compose_all() == Endo::identity();
}

Endo invert(const Endo& f) {
  thread_local Recent<Endo> memo;
  if (const auto* hit = memo.find(f)) return *hit;
  return memo.insert(f, invert_uncached(f));
}

bool is_jacobian_unit(const Endo& f) {
  // Automorphisms have a unit Jacobian by the chain rule; for large maps a
  // successful decomposition is cheaper than the determinant.
  if (degree(f) > kDirectCheckDegree) {
    try {
      decompose(f);
      return true;
    } catch (const DecompositionStall&) {
    }
  }
  return direct_jacobian_unit(f);
}

bool is_involution(const Endo& f) {
  if (degree(f) * degree(f) <= kDirectCheckDegree)
    return is_jacobian_unit(f) && compose(f, f) == Endo::identity();
  // An involution is an automorphism, and every automorphism of K[x, y]
  // decomposes, so a stall settles the question.
  try {
    const auto word = decompose(f).factors;
    return same_product(word, inverse_word(word));
  } catch (const DecompositionStall&) {
    return false;
  }
}

void require_involution(const Endo& f, std::string_view role) {
  if (!is_involution(f))
    throw Error(ErrorCode::NotInvolution,
                std::string(role) + " is not an involution: " + render(f));
}

bool intertwines(const Endo& f, const Endo& gamma, const Endo& delta) {
  require_involution(gamma, "gamma");
  require_involution(delta, "delta");
  if (degree(f) * std::max(degree(gamma), degree(delta)) > kDirectCheckDegree) {
    // gamma == f^-1 delta f, compared as words.
    try {
      const std::vector<Elementary> fw = decompose(f).factors;
      std::vector<Elementary> rhs = inverse_word(fw);
      const std::vector<Elementary> dw = decompose(delta).factors;
      rhs.insert(rhs.end(), dw.begin(), dw.end());
      rhs.insert(rhs.end(), fw.begin(), fw.end());
      return same_product(decompose(gamma).factors, rhs);
    } catch (const DecompositionStall&) {
    }
  }
  return compose(f, gamma) == compose(delta, f);
}

bool is_automorphism(const Endo& f) {
  try {
    decompose(f);
    return true;
  } catch (const DecompositionStall& e) {
    if (e.code() == ErrorCode::JCCandidate) throw;
    return false;
  }
}

}  // namespace invol
