#include "invol/endo.hpp"

#include <cctype>

#include "invol/error.hpp"

namespace invol {

Endo compose(const Endo& outer, const Endo& inner) {
  return {substitute(inner.P, outer.P, outer.Q), substitute(inner.Q, outer.P, outer.Q)};
}

Poly apply(const Endo& f, const Poly& p) { return substitute(p, f.P, f.Q); }

Poly jacobian_of(const Endo& f) { return jac(f.P, f.Q); }

SymSkewSplit sym_skew_split(const Poly& w, const Endo& eps) {
  require_involution(eps, "eps");
  Poly image = apply(eps, w);
  const Rat half(1, 2);
  SymSkewSplit out{half * (w + image), half * (w - image), eps};
  ensure(apply(eps, out.s) == out.s, "symmetric part is not eps-fixed");
  ensure(apply(eps, out.k) == -out.k, "skew part is not eps-negated");
  ensure(out.s + out.k == w, "symmetric and skew parts do not sum to input");
  return out;
}

Poly jac_parity_formula(unsigned i, unsigned j, unsigned k, unsigned l) {
  const long I = i, J = j, K = k, L = l;
  std::vector<Poly::Term> terms;
  auto add = [&](long coeff, long e1, long e2, long e3, long e4) {
    if (coeff == 0) return;
    terms.push_back({{std::uint32_t(e1), std::uint32_t(e2)}, Rat(coeff)});
    terms.push_back({{std::uint32_t(e3), std::uint32_t(e4)}, Rat(-coeff)});
  };
  add(L * I - K * J, K + I - 1, J + L - 1, J + L - 1, K + I - 1);
  add(I * K - J * L, I + L - 1, J + K - 1, J + K - 1, I + L - 1);
  return Poly::from_terms(std::move(terms));
}

Endo parse_endo(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  std::string_view t = trim(text);
  if (t == "alpha") return alpha();
  if (t == "beta") return beta();
  if (t == "id") return Endo::identity();

  std::size_t base = static_cast<std::size_t>(t.data() - text.data());
  auto semi = t.find(';');
  if (semi == std::string_view::npos) throw SyntaxError(base + t.size(), "expected ';'");

  auto component = [&](std::string_view part, std::size_t offset, char name) {
    std::size_t lead = 0;
    while (lead < part.size() && std::isspace(static_cast<unsigned char>(part[lead]))) ++lead;
    if (lead >= part.size() || part[lead] != name)
      throw SyntaxError(offset + lead, std::string("expected '") + name + "'");
    std::size_t eq = part.find('=', lead + 1);
    if (eq == std::string_view::npos) throw SyntaxError(offset + lead + 1, "expected '='");
    for (std::size_t p = lead + 1; p < eq; ++p)
      if (!std::isspace(static_cast<unsigned char>(part[p])))
        throw SyntaxError(offset + p, "expected '='");
    try {
      return parse_poly(part.substr(eq + 1));
    } catch (const SyntaxError& e) {
      throw SyntaxError(offset + eq + 1 + e.position(), "malformed polynomial");
    }
  };
  Endo f;
  f.P = component(t.substr(0, semi), base, 'P');
  f.Q = component(t.substr(semi + 1), base + semi + 1, 'Q');
  return f;
}

std::string render(const Endo& f) {
  return "P = " + render(f.P) + "; Q = " + render(f.Q);
}

}  // namespace invol
