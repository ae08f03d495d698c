#pragma once

#include <string>
#include <string_view>

#include "invol/poly.hpp"

namespace invol {

/// Endomorphism of K[x,y], given by the images P = f(x) and Q = f(y).
/// No Jacobian condition is implied.
struct Endo {
  Poly P;
  Poly Q;

  static Endo identity() { return {Poly::x(), Poly::y()}; }
  friend bool operator==(const Endo&, const Endo&) = default;
};

/// The exchange involution x <-> y.
inline Endo alpha() { return {Poly::y(), Poly::x()}; }
/// x -> x, y -> -y.
inline Endo beta() { return {Poly::x(), -Poly::y()}; }

/// Ring-map composition: compose(outer, inner)(p) = outer(inner(p)).
/// Juxtaposition fg of maps reads as compose(f, g).
Endo compose(const Endo& outer, const Endo& inner);

/// f(p), i.e. p with x -> P, y -> Q.
Poly apply(const Endo& f, const Poly& p);

Poly jacobian_of(const Endo& f);
/// Jacobian is a nonzero constant. Large maps that decompose are accepted
/// without expanding the determinant (see tame.cpp).
bool is_jacobian_unit(const Endo& f);

/// True iff f o f is the identity. The identity itself is accepted.
/// Large maps are compared against their tame inverse instead of being
/// squared (see tame.cpp).
bool is_involution(const Endo& f);

/// Throws NotInvolution naming `role` when f is not an involution.
void require_involution(const Endo& f, std::string_view role);

/// f gamma == delta f. Both gamma and delta must be involutions. For large
/// invertible f this is decided as gamma == f^-1 delta f.
bool intertwines(const Endo& f, const Endo& gamma, const Endo& delta);

struct SymSkewSplit {
  Poly s;  // eps(s) == s
  Poly k;  // eps(k) == -k
  Endo wrt;
};

SymSkewSplit sym_skew_split(const Poly& w, const Endo& eps);

/// Closed form of Jac(x^i y^j + x^j y^i, x^k y^l + x^l y^k):
///   (li-kj)(x^{k+i-1}y^{j+l-1} - x^{j+l-1}y^{k+i-1})
/// + (ik-jl)(x^{i+l-1}y^{j+k-1} - x^{j+k-1}y^{i+l-1}).
/// Terms with a zero coefficient are dropped before their monomials are
/// formed, so no negative exponent is ever built.
Poly jac_parity_formula(unsigned i, unsigned j, unsigned k, unsigned l);

/// "P = <poly>; Q = <poly>", or one of the names alpha, beta, id.
Endo parse_endo(std::string_view text);
std::string render(const Endo& f);

}  // namespace invol
