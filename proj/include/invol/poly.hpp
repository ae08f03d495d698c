#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "invol/rational.hpp"

namespace invol {

/// Per-variable exponent cap. Exceeding it raises DegreeCapExceeded.
inline constexpr std::uint32_t kMaxVarDegree = 1u << 16;

/// x^i y^j, ordered graded-lexicographically with x > y.
struct Monomial {
  std::uint32_t i = 0;
  std::uint32_t j = 0;

  constexpr std::uint32_t degree() const { return i + j; }

  friend constexpr bool operator==(Monomial, Monomial) = default;
  friend constexpr std::strong_ordering operator<=>(Monomial a, Monomial b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    return a.i <=> b.i;
  }
};

enum class Var { X, Y };

/// Printing/parsing names for the two variables of a Poly.
struct VarNames {
  std::string_view x = "x";
  std::string_view y = "y";
};

inline constexpr VarNames kXY{"x", "y"};
inline constexpr VarNames kUV{"u", "v"};

/// Sparse polynomial in K[x,y] with rational coefficients.
///
/// Immutable value type: terms are kept strictly decreasing in grlex order
/// with no zero coefficients, so structural equality is mathematical
/// equality.
class Poly {
 public:
  struct Term {
    Monomial m;
    Rat c;
    friend bool operator==(const Term&, const Term&) = default;
  };

  Poly() = default;
  explicit Poly(const Rat& c);
  explicit Poly(long c) : Poly(Rat(c)) {}

  static Poly x() { return monomial(1, 1, 0); }
  static Poly y() { return monomial(1, 0, 1); }
  static Poly monomial(const Rat& c, std::uint32_t i, std::uint32_t j);
  /// Sorts, merges equal monomials and drops zeros.
  static Poly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  std::uint32_t degree_in(Var v) const;
  Rat coefficient(Monomial m) const;
  Rat constant_term() const { return coefficient({0, 0}); }
  /// Largest term in grlex order. Requires a nonzero polynomial.
  const Term& leading_term() const;

  Poly operator-() const;
  friend Poly operator+(const Poly& p, const Poly& q);
  friend Poly operator-(const Poly& p, const Poly& q);
  friend Poly operator*(const Poly& p, const Poly& q);
  friend Poly operator*(const Rat& c, const Poly& p);
  friend Poly operator*(const Poly& p, const Rat& c) { return c * p; }
  Poly& operator+=(const Poly& q) { return *this = *this + q; }
  Poly& operator-=(const Poly& q) { return *this = *this - q; }
  Poly& operator*=(const Poly& q) { return *this = *this * q; }

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  std::vector<Term> terms_;
};

Poly pow(const Poly& p, std::uint32_t n);
Poly partial(const Poly& p, Var v);

/// p_x q_y - p_y q_x
Poly jac(const Poly& p, const Poly& q);

/// Image of p under the ring map x -> px, y -> py.
Poly substitute(const Poly& p, const Poly& px, const Poly& py);

/// Sum of the terms of maximal total degree. Throws ZeroPolynomial on 0.
Poly leading_form(const Poly& p);

/// Univariate helpers: coefficients low-to-high of a polynomial in one
/// variable, realised as a Poly in x (or y).
Poly univariate(const std::vector<Rat>& coeffs, Var v);
/// Sum_k coeffs[k] * a^k, evaluated by Horner's rule.
Poly evaluate_univariate(const std::vector<Rat>& coeffs, const Poly& a);

/// Parses the polynomial grammar of the command line (see README).
Poly parse_poly(std::string_view text, VarNames names = kXY);

/// Renders in descending lexicographic order (x before y), e.g.
/// "x^2 + 2*x*y^2 - 1/2".
std::string render(const Poly& p, VarNames names = kXY);

}  // namespace invol
