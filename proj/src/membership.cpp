#include "invol/membership.hpp"

#include "invol/error.hpp"

namespace invol {

namespace {

// phi with g == x - phi(u, v) (var 0) or y - phi(u, v) (var 1).
std::optional<Poly> eliminant(const Poly4& g, int var) {
  if (g.leading_monomial() != Poly4::variable(var).leading_monomial()) return std::nullopt;
  Poly4 tail = Poly4::variable(var) - g;
  if (!tail.is_uv_only()) return std::nullopt;
  return tail.to_uv_poly();
}

}  // namespace

Subalgebra::Subalgebra(Poly P, Poly Q) : P_(std::move(P)), Q_(std::move(Q)) {
  basis_ = groebner({Poly4::variable(2) - Poly4::from_xy(P_),
                     Poly4::variable(3) - Poly4::from_xy(Q_)});
  std::optional<Poly> phi_x, phi_y;
  for (const auto& g : basis_) {
    if (auto p = eliminant(g, 0)) {
      phi_x = p;
    } else if (auto q = eliminant(g, 1)) {
      phi_y = q;
    } else if (g.is_uv_only()) {
      relations_.push_back(g);
    } else {
      return;
    }
  }
  if (!phi_x || !phi_y) return;
  // phi_x(P, Q) == x and phi_y(P, Q) == y make R(phi_x, phi_y) a witness
  // for every R.
  ensure(substitute(*phi_x, P_, Q_) == Poly::x() && substitute(*phi_y, P_, Q_) == Poly::y(),
         "elimination basis does not invert (P, Q)");
  inverse_ = Endo{*phi_x, *phi_y};
}

std::optional<MembershipWitness> Subalgebra::find(const Poly& R) const {
  if (inverse_) {
    Poly phi = apply(*inverse_, R);
    if (!relations_.empty()) phi = normal_form(Poly4::from_uv(phi), relations_).to_uv_poly();
    return MembershipWitness{std::move(phi), true};
  }
  Poly4 nf = normal_form(Poly4::from_xy(R), basis_);
  if (!nf.is_uv_only()) return std::nullopt;
  MembershipWitness w{nf.to_uv_poly(), true};
  ensure(substitute(w.phi, P_, Q_) == R, "membership witness does not reproduce R");
  return w;
}

std::optional<MembershipWitness> in_subalgebra(const Poly& R, const Poly& P, const Poly& Q) {
  return Subalgebra(P, Q).find(R);
}

std::optional<UniWitness> wang_membership(const Poly& A, const Poly& R) {
  if (A.is_constant())
    throw Error(ErrorCode::InvalidArgument, "wang_membership needs a nonconstant A");
  const auto deg_a = static_cast<unsigned>(A.degree());
  std::vector<Poly> powers{Poly(1), A};
  auto power = [&](unsigned m) -> const Poly& {
    while (powers.size() <= m) powers.push_back(powers.back() * A);
    return powers[m];
  };

  UniWitness w;
  Poly rest = R;
  while (!rest.is_zero()) {
    const auto d = static_cast<unsigned>(rest.degree());
    if (d % deg_a != 0) return std::nullopt;
    const unsigned m = d / deg_a;
    const Poly& am = power(m);
    Poly lead_rest = leading_form(rest);
    Poly lead_am = leading_form(am);
    if (lead_rest.leading_term().m != lead_am.leading_term().m) return std::nullopt;
    Rat c = lead_rest.leading_term().c / lead_am.leading_term().c;
    if (lead_rest != c * lead_am) return std::nullopt;
    rest -= c * am;
    if (w.h.size() <= m) w.h.resize(m + 1);
    w.h[m] += c;
  }
  ensure(w.evaluate(A) == R, "peeled H(A) does not reproduce R");
  return w;
}

Poly sigma0_apply(const Endo& f, const Poly& R) {
  if (!is_jacobian_unit(f))
    throw Error(ErrorCode::JacobianNotUnit,
                "sigma0 requires Jac(P,Q) to be a nonzero constant");
  auto w = in_subalgebra(R, f.P, f.Q);
  if (!w) throw Error(ErrorCode::NotInImage, render(R) + " is not in K[P,Q]");
  return substitute(w->phi, f.Q, f.P);
}

}  // namespace invol
