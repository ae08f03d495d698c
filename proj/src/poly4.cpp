#include "invol/poly4.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "invol/error.hpp"

namespace invol {

bool Monomial4::divides(const Monomial4& other) const {
  for (int k = 0; k < 4; ++k)
    if (e[k] > other.e[k]) return false;
  return true;
}

bool Monomial4::coprime(const Monomial4& other) const {
  for (int k = 0; k < 4; ++k)
    if (e[k] != 0 && other.e[k] != 0) return false;
  return true;
}

Monomial4 Monomial4::lcm(const Monomial4& other) const {
  Monomial4 r;
  for (int k = 0; k < 4; ++k) r.e[k] = std::max(e[k], other.e[k]);
  return r;
}

Monomial4 Monomial4::operator*(const Monomial4& other) const {
  Monomial4 r;
  for (int k = 0; k < 4; ++k) r.e[k] = e[k] + other.e[k];
  return r;
}

Monomial4 Monomial4::operator/(const Monomial4& divisor) const {
  Monomial4 r;
  for (int k = 0; k < 4; ++k) r.e[k] = e[k] - divisor.e[k];
  return r;
}

Poly4 Poly4::from_terms(std::vector<Term> terms) {
  std::map<Monomial4, Rat, std::greater<>> acc;
  for (auto& t : terms) acc[t.m] += t.c;
  Poly4 p;
  for (auto& [m, c] : acc)
    if (!invol::is_zero(c)) p.terms_.push_back({m, c});
  return p;
}

Poly4 Poly4::from_xy(const Poly& p) {
  std::vector<Term> ts;
  for (const auto& t : p.terms()) ts.push_back({{{t.m.i, t.m.j, 0, 0}}, t.c});
  return from_terms(std::move(ts));
}

Poly4 Poly4::from_uv(const Poly& p) {
  std::vector<Term> ts;
  for (const auto& t : p.terms()) ts.push_back({{{0, 0, t.m.i, t.m.j}}, t.c});
  return from_terms(std::move(ts));
}

Poly4 Poly4::variable(int index) {
  Poly4 p;
  Monomial4 m;
  m.e[index] = 1;
  p.terms_.push_back({m, 1});
  return p;
}

unsigned Poly4::degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.m.degree());
  return d;
}

bool Poly4::is_uv_only() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return t.m.xy_degree() == 0; });
}

Poly Poly4::to_uv_poly() const {
  ensure(is_uv_only(), "to_uv_poly on a polynomial involving x or y");
  std::vector<Poly::Term> ts;
  for (const auto& t : terms_) ts.push_back({{t.m.e[2], t.m.e[3]}, t.c});
  return Poly::from_terms(std::move(ts));
}

Poly4 Poly4::monic() const {
  if (terms_.empty()) return *this;
  Poly4 r = *this;
  Rat inv = 1 / terms_.front().c;
  for (auto& t : r.terms_) t.c *= inv;
  return r;
}

Poly4 operator-(const Poly4& a, const Poly4& b) {
  std::vector<Poly4::Term> ts = a.terms_;
  for (const auto& t : b.terms_) ts.push_back({t.m, -t.c});
  return Poly4::from_terms(std::move(ts));
}

std::string render(const Poly4& p) {
  if (p.is_zero()) return "0";
  static const char* names[4] = {"x", "y", "u", "v"};
  std::ostringstream os;
  bool first = true;
  for (const auto& t : p.terms()) {
    bool negative = sgn(t.c) < 0;
    os << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
    first = false;
    Rat mag = abs(t.c);
    if (t.m.degree() == 0) {
      os << to_string(mag);
      continue;
    }
    if (mag != 1) os << to_string(mag) << '*';
    bool first_var = true;
    for (int k = 0; k < 4; ++k) {
      if (t.m.e[k] == 0) continue;
      if (!first_var) os << '*';
      os << names[k];
      if (t.m.e[k] > 1) os << '^' << t.m.e[k];
      first_var = false;
    }
  }
  return os.str();
}

}  // namespace invol
