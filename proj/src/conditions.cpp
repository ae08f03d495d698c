#include "invol/conditions.hpp"

#include <algorithm>

namespace invol {
namespace {

void require_jacobian_unit(const Endo& f) {
  if (!is_jacobian_unit(f))
    throw Error(ErrorCode::JacobianNotUnit,
                "Jac(P,Q) = " + render(jacobian_of(f)) + " is not a nonzero constant");
}

// Nonzero constant value of p, or nullopt.
std::optional<Rat> unit_value(const Poly& p) {
  if (p.is_zero() || !p.is_constant()) return std::nullopt;
  return p.constant_term();
}

Poly u() { return Poly::x(); }
Poly v() { return Poly::y(); }

bool sound(const MembershipWitness& w, const Poly& target, const Endo& f) {
  return substitute(w.phi, f.P, f.Q) == target;
}

// f^-1 read off from x, y in K[P, Q], checked against the tame inverse.
Endo inverse_from_membership(const Endo& f) {
  Subalgebra T(f.P, f.Q);
  auto wx = T.find(Poly::x());
  auto wy = T.find(Poly::y());
  if (!wx || !wy)
    throw Error(ErrorCode::CertificateFailure,
                "x or y not in K[P,Q] although the invertibility hypotheses hold: " + render(f));
  Endo inv{wx->phi, wy->phi};
  ensure(compose(f, inv) == Endo::identity(), "membership inverse: f o g != id");
  ensure(compose(inv, f) == Endo::identity(), "membership inverse: g o f != id");
  ensure(inv == invert(f), "membership inverse differs from the tame inverse");
  return inv;
}

UniWitness peel(const Poly& A, const Poly& R, const char* what) {
  auto w = wang_membership(A, R);
  if (!w) throw Error(ErrorCode::CertificateFailure, std::string("peeling failed for ") + what);
  return *w;
}

std::optional<int> sign_against(const Poly& image, const Poly& p) {
  if (image == p) return 1;
  if (image == -p) return -1;
  return std::nullopt;
}

}  // namespace

std::optional<GammaDeltaPair> find_gamma_delta(const Endo& f) {
  require_jacobian_unit(f);
  Endo inv;
  try {
    inv = invert(f);
  } catch (const DecompositionStall& e) {
    if (e.code() == ErrorCode::JCCandidate) throw;
    return std::nullopt;
  }
  const int d = std::max(f.P.degree(), f.Q.degree());
  if (d * d <= kDirectCheckDegree) {
    GammaDeltaPair pair{compose(compose(inv, alpha()), f), alpha()};
    ensure(is_involution(pair.gamma), "f^-1 alpha f is not an involution");
    ensure(intertwines(f, pair.gamma, pair.delta), "f gamma != delta f");
    return pair;
  }
  // Large f: build gamma from the word f^-1 alpha f, which is also what
  // certifies it.
  const std::vector<Elementary> fw = decompose(f).factors;
  std::vector<Elementary> word = inverse_word(fw);
  word.push_back(*as_affine(alpha()));
  word.insert(word.end(), fw.begin(), fw.end());
  ensure(same_product(word, inverse_word(word)), "f^-1 alpha f is not an involution");
  return GammaDeltaPair{compose_word(std::move(word)), alpha()};
}

AlphaReduction reduce_to_alpha_endo(const Endo& f, const GammaDeltaPair& pair) {
  if (!intertwines(f, pair.gamma, pair.delta))
    throw Error(ErrorCode::NotIntertwining, "f gamma != delta f for " + render(f));
  AlphaReduction r;
  r.g = conjugate_to_alpha(pair.gamma);
  r.h = conjugate_to_alpha(pair.delta);
  try {
    // h f g^-1 as a word: the two conjugations mostly cancel.
    std::vector<Elementary> word = decompose(r.h).factors;
    const std::vector<Elementary> fw = decompose(f).factors;
    const std::vector<Elementary> gw = inverse_word(decompose(r.g).factors);
    word.insert(word.end(), fw.begin(), fw.end());
    word.insert(word.end(), gw.begin(), gw.end());
    r.core = compose_word(std::move(word));
  } catch (const DecompositionStall&) {
    r.core = compose(compose(r.h, f), invert(r.g));
  }
  ensure(intertwines(r.core, alpha(), alpha()), "h f g^-1 does not commute with alpha");
  if (is_jacobian_unit(f)) ensure(is_jacobian_unit(r.core), "chain rule violated for h f g^-1");
  return r;
}

std::optional<RestrictionCert> check_restriction(const Endo& f, const Endo& eps) {
  require_jacobian_unit(f);
  require_involution(eps, "eps");
  const int d = std::max(f.P.degree(), f.Q.degree());
  if (d * d > kDirectCheckDegree) {
    // For an automorphism the witnesses of eps(P), eps(Q) are the components
    // of f^-1 eps f, which the word route builds without expanding eps(P).
    try {
      const Endo g = conjugate_by(f, eps);
      return RestrictionCert{{g.P, true}, {g.Q, true}};
    } catch (const DecompositionStall&) {
      // Not tame: fall through to elimination.
    }
  }
  Subalgebra T(f.P, f.Q);
  auto wp = T.find(apply(eps, f.P));
  if (!wp) return std::nullopt;
  auto wq = T.find(apply(eps, f.Q));
  if (!wq) return std::nullopt;
  return RestrictionCert{*wp, *wq};
}

std::optional<Endo> check_extension(const Endo& f) {
  require_jacobian_unit(f);
  Endo inv;
  try {
    inv = invert(f);
  } catch (const DecompositionStall& e) {
    if (e.code() == ErrorCode::JCCandidate) throw;
    return std::nullopt;
  }
  const int d = std::max(f.P.degree(), f.Q.degree());
  if (d * d * d <= kDirectCheckDegree) {
    Endo sigma = compose(compose(f, alpha()), inv);
    ensure(is_involution(sigma), "extension is not an involution");
    ensure(apply(sigma, f.P) == f.Q && apply(sigma, f.Q) == f.P,
           "extension does not exchange P and Q");
    return sigma;
  }
  // sigma = f alpha f^-1 as a word; sigma f == f alpha is the exchange.
  const std::vector<Elementary> fw = decompose(f).factors;
  const Elementary a = *as_affine(alpha());
  std::vector<Elementary> word = fw;
  word.push_back(a);
  const std::vector<Elementary> fw_inv = inverse_word(fw);
  word.insert(word.end(), fw_inv.begin(), fw_inv.end());
  ensure(same_product(word, inverse_word(word)), "extension is not an involution");
  std::vector<Elementary> sigma_f = word, f_alpha = fw;
  sigma_f.insert(sigma_f.end(), fw.begin(), fw.end());
  f_alpha.push_back(a);
  ensure(same_product(sigma_f, f_alpha), "extension does not exchange P and Q");
  return compose_word(std::move(word));
}

std::optional<Branch> is_generalized(const Endo& f, const Endo& eps) {
  require_involution(eps, "eps");
  if (!is_jacobian_unit(f)) return std::nullopt;
  if (unit_value(jac(f.P, apply(eps, f.P)))) return Branch::P;
  if (unit_value(jac(f.Q, apply(eps, f.Q)))) return Branch::Q;
  return std::nullopt;
}

bool verify(const GeneralizedCert& cert, const Endo& f, const Endo& eps) {
  const Poly& P = f.P;
  const Poly& Q = f.Q;
  if (cert.epsP != apply(eps, P) || cert.epsQ != apply(eps, Q)) return false;
  if (is_zero(cert.a) || is_zero(cert.b)) return false;
  if (jacobian_of(f) != Poly(cert.a)) return false;
  const Rat c = cert.a * jacobian_of(eps).constant_term();
  if (jac(cert.epsP, cert.epsQ) != Poly(c)) return false;
  if (cert.branch == Branch::P) {
    if (jac(P, cert.epsP) != Poly(cert.b)) return false;
    if (cert.epsP != (cert.b / cert.a) * Q + cert.b * cert.h.evaluate(P)) return false;
    if (cert.epsQ != c * cert.g.evaluate(cert.epsP) - (c / cert.b) * P) return false;
  } else {
    if (jac(Q, cert.epsQ) != Poly(cert.b)) return false;
    if (cert.epsQ != cert.b * cert.h.evaluate(Q) - (cert.b / cert.a) * P) return false;
    if (cert.epsP != (c / cert.b) * Q - c * cert.g.evaluate(cert.epsQ)) return false;
  }
  return sound(cert.restriction.phiP, cert.epsP, f) && sound(cert.restriction.phiQ, cert.epsQ, f);
}

GeneralizedInversion invert_via_generalized(const Endo& f, const Endo& eps) {
  auto branch = is_generalized(f, eps);
  if (!branch)
    throw Error(ErrorCode::HypothesisFailed, render(f) + " is not a generalized eps-endomorphism");
  GeneralizedCert cert;
  cert.branch = *branch;
  cert.a = jacobian_of(f).constant_term();
  cert.epsP = apply(eps, f.P);
  cert.epsQ = apply(eps, f.Q);
  const Rat& a = cert.a;
  const Rat c = jac(cert.epsP, cert.epsQ).constant_term();
  if (cert.branch == Branch::P) {
    cert.b = jac(f.P, cert.epsP).constant_term();
    const Rat& b = cert.b;
    // Jac(P, eps P / b - Q / a) = 0
    cert.h = peel(f.P, (1 / b) * cert.epsP - (1 / a) * f.Q, "eps(P)/b - Q/a");
    // Jac(eps P, eps Q / c + P / b) = 0
    cert.g = peel(cert.epsP, (1 / c) * cert.epsQ + (1 / b) * f.P, "eps(Q)/c + P/b");
    Poly phi_p = (b / a) * v() + b * cert.h.evaluate(u());
    Poly phi_q = c * cert.g.evaluate(phi_p) - (c / b) * u();
    cert.restriction = {{phi_p, true}, {phi_q, true}};
  } else {
    cert.b = jac(f.Q, cert.epsQ).constant_term();
    const Rat& b = cert.b;
    // Jac(Q, eps Q / b + P / a) = 0
    cert.h = peel(f.Q, (1 / b) * cert.epsQ + (1 / a) * f.P, "eps(Q)/b + P/a");
    // Jac(eps Q, Q / b - eps P / c) = 0
    cert.g = peel(cert.epsQ, (1 / b) * f.Q - (1 / c) * cert.epsP, "Q/b - eps(P)/c");
    Poly phi_q = b * cert.h.evaluate(v()) - (b / a) * u();
    Poly phi_p = (c / b) * v() - c * cert.g.evaluate(phi_q);
    cert.restriction = {{phi_p, true}, {phi_q, true}};
  }
  if (!verify(cert, f, eps))
    throw Error(ErrorCode::CertificateFailure, "generalized certificate identities fail");
  return {inverse_from_membership(f), std::move(cert)};
}

bool verify(const SymmetryCert& cert, const Endo& f, const Endo& eps) {
  const bool p_fixed = cert.fixed == Branch::P;
  const Poly& F = p_fixed ? f.P : f.Q;
  const Poly& O = p_fixed ? f.Q : f.P;
  if (apply(eps, F) != Rat(cert.sign) * F) return false;
  if (jacobian_of(f) != Poly(cert.a) || is_zero(cert.a) || is_zero(cert.b)) return false;
  const Rat a_f = p_fixed ? cert.a : Rat(-cert.a);
  const Poly eps_o = apply(eps, O);
  if (jac(F, eps_o) != Poly(cert.b)) return false;
  if ((1 / a_f) * O - (1 / cert.b) * eps_o != cert.h.evaluate(F)) return false;
  return sound(cert.restriction.phiP, apply(eps, f.P), f) &&
         sound(cert.restriction.phiQ, apply(eps, f.Q), f);
}

SymmetryInversion invert_via_symmetry(const Endo& f, const Endo& eps) {
  require_jacobian_unit(f);
  require_involution(eps, "eps");
  SymmetryCert cert;
  if (auto s = sign_against(apply(eps, f.P), f.P)) {
    cert.fixed = Branch::P;
    cert.sign = *s;
  } else if (auto s2 = sign_against(apply(eps, f.Q), f.Q)) {
    cert.fixed = Branch::Q;
    cert.sign = *s2;
  } else {
    throw Error(ErrorCode::SymmetryHypothesisFailed,
                "neither P nor Q is symmetric or skew for eps: " + render(f));
  }
  const bool p_fixed = cert.fixed == Branch::P;
  const Poly& F = p_fixed ? f.P : f.Q;
  const Poly& O = p_fixed ? f.Q : f.P;
  cert.a = jacobian_of(f).constant_term();
  const Rat a_f = p_fixed ? cert.a : Rat(-cert.a);
  const Poly eps_o = apply(eps, O);
  auto b = unit_value(jac(F, eps_o));
  ensure(b.has_value(), "Jac(F, eps O) is not a nonzero constant");
  cert.b = *b;
  cert.h = peel(F, (1 / a_f) * O - (1 / cert.b) * eps_o, "O/a - eps(O)/b");

  // eps O = (b / a_F) O - b H(F); eps F = sign F.
  const Poly uf = p_fixed ? u() : v();
  const Poly uo = p_fixed ? v() : u();
  Poly phi_f = Rat(cert.sign) * uf;
  Poly phi_o = (cert.b / a_f) * uo - cert.b * cert.h.evaluate(uf);
  cert.restriction = p_fixed ? RestrictionCert{{phi_f, true}, {phi_o, true}}
                             : RestrictionCert{{phi_o, true}, {phi_f, true}};
  if (!verify(cert, f, eps))
    throw Error(ErrorCode::CertificateFailure, "symmetry certificate identities fail");
  return {inverse_from_membership(f), std::move(cert)};
}

SkInversion invert_via_sk(const Endo& f, const Poly& s, const Poly& k) {
  if (apply(alpha(), s) != s)
    throw Error(ErrorCode::HypothesisFailed, "s is not symmetric with respect to alpha");
  if (apply(alpha(), k) != -k)
    throw Error(ErrorCode::HypothesisFailed, "k is not skew-symmetric with respect to alpha");
  if (!unit_value(jac(s, k)))
    throw Error(ErrorCode::HypothesisFailed, "Jac(s,k) is not a nonzero constant");
  Subalgebra T(f.P, f.Q);
  auto ws = T.find(s);
  if (!ws) throw Error(ErrorCode::NotInImage, "s is not in the image of f");
  auto wk = T.find(k);
  if (!wk) throw Error(ErrorCode::NotInImage, "k is not in the image of f");

  SkInversion out;
  out.g = {s + k, s - k};
  ensure(intertwines(out.g, alpha(), alpha()), "(s+k, s-k) does not commute with alpha");
  ensure(jacobian_of(out.g) == Rat(2) * jac(k, s), "Jac(s+k, s-k) != 2 Jac(k, s)");
  ensure(is_jacobian_unit(out.g), "(s+k, s-k) is not a Jacobian unit");
  // f o phi == g, hence f^-1 == phi o g^-1.
  Endo phi{ws->phi + wk->phi, ws->phi - wk->phi};
  ensure(compose(f, phi) == out.g, "f o phi != g");
  out.inverse = compose(phi, invert(out.g));
  ensure(compose(f, out.inverse) == Endo::identity(), "f o f^-1 != id");
  ensure(compose(out.inverse, f) == Endo::identity(), "f^-1 o f != id");
  return out;
}

SymmetricConjugation symmetric_conjugation(const Poly& P, Direction dir, const Endo& witness) {
  if (dir == Direction::ToAlpha) {
    require_involution(witness, "eps");
    auto sign = sign_against(apply(witness, P), P);
    if (!sign)
      throw Error(ErrorCode::HypothesisFailed, "P is neither symmetric nor skew for eps");
    Endo g = conjugate_to_alpha(witness);
    Poly gp = apply(g, P);
    ensure(apply(alpha(), gp) == Rat(*sign) * gp, "g(P) lost its alpha-parity");
    return {g, *sign};
  }
  Poly gp = apply(witness, P);
  auto sign = sign_against(apply(alpha(), gp), gp);
  if (!sign)
    throw Error(ErrorCode::HypothesisFailed, "g(P) is neither alpha-symmetric nor alpha-skew");
  Endo eps;
  try {
    eps = conjugate_by(witness, alpha());
  } catch (const DecompositionStall&) {
    throw Error(ErrorCode::HypothesisFailed, "witness is not an automorphism");
  }
  ensure(is_involution(eps), "g^-1 alpha g is not an involution");
  ensure(apply(eps, P) == Rat(*sign) * P, "P lost its parity under g^-1 alpha g");
  return {eps, *sign};
}

}  // namespace invol
