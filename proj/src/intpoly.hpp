// Integer bivariate polynomials for the heavy inner loops of Poly.
//
// Large products and substitutions clear denominators first, multiply over
// Z (schoolbook for small inputs, Kronecker substitution into one GMP
// integer product for large ones) and divide by the common denominator once
// per term at the end.
#pragma once

#include <cstdint>
#include <vector>

#include "invol/poly.hpp"

namespace invol::detail {

struct ITerm {
  std::uint32_t i, j;
  mpz_class c;
};

/// Distinct monomials in no particular order, no zero coefficients.
struct IntPoly {
  std::vector<ITerm> terms;
  std::uint32_t max_i = 0, max_j = 0;

  bool empty() const { return terms.empty(); }
  std::size_t size() const { return terms.size(); }
  static IntPoly constant(const mpz_class& c);
};

/// p == num / den.
struct IntForm {
  IntPoly num;
  mpz_class den = 1;
};

IntForm integer_form(const Poly& p);

IntPoly multiply(const IntPoly& a, const IntPoly& b);

/// sum_k factor_k * parts_k.
IntPoly linear_combination(const std::vector<std::pair<const IntPoly*, mpz_class>>& parts);

/// p / den as grlex-descending Poly terms.
std::vector<Poly::Term> to_terms(const IntPoly& p, const mpz_class& den);

/// Exact p(px, py).
std::vector<Poly::Term> substitute(const Poly& p, const Poly& px, const Poly& py);

/// Exact p * q.
std::vector<Poly::Term> product(const Poly& p, const Poly& q);

}  // namespace invol::detail
