#pragma once

#include <optional>
#include <vector>

#include "invol/endo.hpp"
#include "invol/poly4.hpp"

namespace invol {

/// Total-degree guard on Groebner basis elements and S-polynomials.
inline constexpr unsigned kGroebnerDegreeCap = 64;

/// Reduced Groebner basis of <gens> under the block order, monic and sorted
/// by increasing leading monomial. Buchberger with the normal selection
/// strategy (pairs by lcm degree, then by term order) and the
/// Gebauer-Moeller criteria.
std::vector<Poly4> groebner(const std::vector<Poly4>& gens);

/// Fully reduced normal form of f modulo basis.
Poly4 normal_form(const Poly4& f, const std::vector<Poly4>& basis);

/// Expression R = phi(P, Q). phi is stored as a Poly whose x, y stand for
/// u, v; print it with kUV.
struct MembershipWitness {
  Poly phi;
  bool reduced = true;  // phi is the normal form, not just some preimage
};

/// H(t) = sum h[k] t^k with H(A) = R.
struct UniWitness {
  std::vector<Rat> h;
  Poly evaluate(const Poly& a) const { return evaluate_univariate(h, a); }
  friend bool operator==(const UniWitness&, const UniWitness&) = default;
};

/// Membership oracle for the subalgebra K[P, Q], built once from the
/// elimination basis of <u - P, v - Q> and reused across queries.
class Subalgebra {
 public:
  Subalgebra(Poly P, Poly Q);

  /// Witness phi with phi(P, Q) == R, or nullopt if R is not in K[P, Q].
  std::optional<MembershipWitness> find(const Poly& R) const;

  const Poly& P() const { return P_; }
  const Poly& Q() const { return Q_; }
  const std::vector<Poly4>& basis() const { return basis_; }
  /// (phi_x, phi_y) when the basis contains x - phi_x(u,v), y - phi_y(u,v)
  /// and otherwise only relations in u, v. Then NF(R) = R(phi_x, phi_y)
  /// reduced by those relations, computed by substitution.
  const std::optional<Endo>& elimination_inverse() const { return inverse_; }

 private:
  Poly P_, Q_;
  std::vector<Poly4> basis_;
  std::optional<Endo> inverse_;
  std::vector<Poly4> relations_;
};

std::optional<MembershipWitness> in_subalgebra(const Poly& R, const Poly& P, const Poly& Q);

/// Decides R in K[A] by leading-form peeling: while R' != 0, require
/// leading_form(R') == c * leading_form(A)^m and subtract c * A^m.
/// Throws InvalidArgument when A is constant.
std::optional<UniWitness> wang_membership(const Poly& A, const Poly& R);

/// The involution of T = K[P, Q] exchanging P and Q, applied to R:
/// phi(Q, P) where R = phi(P, Q). Throws JacobianNotUnit, then NotInImage.
Poly sigma0_apply(const Endo& f, const Poly& R);

}  // namespace invol
