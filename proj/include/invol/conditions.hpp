#pragma once

#include <optional>

#include "invol/endo.hpp"
#include "invol/membership.hpp"
#include "invol/tame.hpp"

namespace invol {

/// Involutions with f gamma == delta f.
struct GammaDeltaPair {
  Endo gamma;
  Endo delta;
};

/// gamma = f^-1 alpha f, delta = alpha when f inverts; nullopt when f is
/// not an automorphism. Throws JacobianNotUnit; JCCandidate propagates.
std::optional<GammaDeltaPair> find_gamma_delta(const Endo& f);

/// gamma = g^-1 alpha g, delta = h^-1 alpha h and core = h f g^-1, which
/// commutes with alpha.
struct AlphaReduction {
  Endo g;
  Endo h;
  Endo core;
};

AlphaReduction reduce_to_alpha_endo(const Endo& f, const GammaDeltaPair& pair);

/// eps(P) = phiP(P, Q) and eps(Q) = phiQ(P, Q).
struct RestrictionCert {
  MembershipWitness phiP;
  MembershipWitness phiQ;
};

/// Membership of eps(P) and eps(Q) in T = K[P, Q].
std::optional<RestrictionCert> check_restriction(const Endo& f, const Endo& eps);

/// The involution sigma = f alpha f^-1, which restricts to T as the
/// exchange of P and Q; nullopt when f is not invertible.
std::optional<Endo> check_extension(const Endo& f);

enum class Branch { P, Q };

/// Jacobian unit plus Jac(P, eps P) (P-branch, preferred) or Jac(Q, eps Q)
/// (Q-branch) a nonzero constant.
std::optional<Branch> is_generalized(const Endo& f, const Endo& eps);

/// Witnesses for a generalized eps-endomorphism. With c = Jac(eps P, eps Q):
///   P-branch: eps P = (b/a) Q + b H(P),  eps Q = c G(eps P) - (c/b) P
///   Q-branch: eps Q = b H(Q) - (b/a) P,  eps P = (c/b) Q - c G(eps Q)
/// For involutions with Jacobian -1 (alpha, beta) c = -a.
struct GeneralizedCert {
  Rat a;  // Jac(P, Q)
  Branch branch = Branch::P;
  Rat b;  // Jac(P, eps P) or Jac(Q, eps Q)
  UniWitness h;
  UniWitness g;
  Poly epsP;
  Poly epsQ;
  RestrictionCert restriction;
};

/// Re-checks every identity of the certificate against f and eps.
bool verify(const GeneralizedCert& cert, const Endo& f, const Endo& eps);

struct GeneralizedInversion {
  Endo inverse;
  GeneralizedCert cert;
};

/// Builds the certificate by two Wang peels, then exhibits f^-1 from the
/// membership of x and y in T and checks it against the tame inverse.
GeneralizedInversion invert_via_generalized(const Endo& f, const Endo& eps);

/// One of eps P = +-P or eps Q = +-Q. With F the fixed image, O the other,
/// a_F = Jac(F, O) and b = Jac(F, eps O):  O/a_F - eps(O)/b = H(F).
struct SymmetryCert {
  Branch fixed = Branch::P;
  int sign = 1;
  Rat a;  // Jac(P, Q)
  Rat b;
  UniWitness h;
  RestrictionCert restriction;
};

bool verify(const SymmetryCert& cert, const Endo& f, const Endo& eps);

struct SymmetryInversion {
  Endo inverse;
  SymmetryCert cert;
};

SymmetryInversion invert_via_symmetry(const Endo& f, const Endo& eps);

struct SkInversion {
  Endo inverse;
  Endo g;  // (s + k, s - k)
};

/// For s alpha-symmetric, k alpha-skew, Jac(s, k) in K*, s, k in T:
/// g = (s + k, s - k) commutes with alpha, and f^-1 = phi o g^-1 with
/// phi = (phi_s + phi_k, phi_s - phi_k).
SkInversion invert_via_sk(const Endo& f, const Poly& s, const Poly& k);

enum class Direction { ToAlpha, FromAlpha };

struct SymmetricConjugation {
  Endo map;  // ToAlpha: g with alpha(g P) = sign g P; FromAlpha: eps with eps P = sign P
  int sign = 1;
};

/// ToAlpha: witness is an involution eps fixing P up to sign; returns
/// g = conjugate_to_alpha(eps). FromAlpha: witness is an automorphism g
/// with g(P) alpha-symmetric or skew; returns eps = g^-1 alpha g.
SymmetricConjugation symmetric_conjugation(const Poly& P, Direction dir, const Endo& witness);

}  // namespace invol
