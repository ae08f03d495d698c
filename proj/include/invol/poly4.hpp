#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "invol/poly.hpp"

namespace invol {

/// x^a y^b u^c v^d under the block order {x,y} >> {u,v}, each block grlex.
struct Monomial4 {
  std::array<std::uint32_t, 4> e{};  // exponents of x, y, u, v

  std::uint32_t xy_degree() const { return e[0] + e[1]; }
  std::uint32_t uv_degree() const { return e[2] + e[3]; }
  std::uint32_t degree() const { return xy_degree() + uv_degree(); }

  bool divides(const Monomial4& other) const;
  bool coprime(const Monomial4& other) const;
  Monomial4 lcm(const Monomial4& other) const;
  Monomial4 operator*(const Monomial4& other) const;
  /// Requires divisor.divides(*this).
  Monomial4 operator/(const Monomial4& divisor) const;

  friend bool operator==(const Monomial4&, const Monomial4&) = default;
  friend std::strong_ordering operator<=>(const Monomial4& a, const Monomial4& b) {
    if (auto c = a.xy_degree() <=> b.xy_degree(); c != 0) return c;
    if (auto c = a.e[0] <=> b.e[0]; c != 0) return c;
    if (auto c = a.uv_degree() <=> b.uv_degree(); c != 0) return c;
    return a.e[2] <=> b.e[2];
  }
};

/// Polynomial in K[x,y,u,v]; terms strictly decreasing in the block order.
class Poly4 {
 public:
  struct Term {
    Monomial4 m;
    Rat c;
    friend bool operator==(const Term&, const Term&) = default;
  };

  Poly4() = default;
  static Poly4 from_terms(std::vector<Term> terms);
  /// Embeds p(x,y).
  static Poly4 from_xy(const Poly& p);
  /// Embeds p with its x,y renamed to u,v.
  static Poly4 from_uv(const Poly& p);
  static Poly4 variable(int index);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  const Term& leading_term() const { return terms_.front(); }
  const Monomial4& leading_monomial() const { return terms_.front().m; }
  unsigned degree() const;
  /// True iff no term involves x or y.
  bool is_uv_only() const;
  /// Requires is_uv_only(); maps u -> x, v -> y.
  Poly to_uv_poly() const;
  Poly4 monic() const;

  friend Poly4 operator-(const Poly4& a, const Poly4& b);
  friend bool operator==(const Poly4&, const Poly4&) = default;

 private:
  std::vector<Term> terms_;
};

std::string render(const Poly4& p);

}  // namespace invol
