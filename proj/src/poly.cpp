#include "invol/poly.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "intpoly.hpp"
#include "invol/error.hpp"

namespace invol {
namespace {

// Packing whose integer order is the grlex order.
std::uint64_t pack(Monomial m) {
  return (static_cast<std::uint64_t>(m.degree()) << 32) | m.i;
}

Monomial unpack(std::uint64_t key) {
  auto deg = static_cast<std::uint32_t>(key >> 32);
  auto i = static_cast<std::uint32_t>(key & 0xffffffffu);
  return {i, deg - i};
}

void check_cap(std::uint64_t i, std::uint64_t j) {
  if (i > kMaxVarDegree || j > kMaxVarDegree)
    throw Error(ErrorCode::DegreeCapExceeded,
                "exponent exceeds 2^16 in polynomial arithmetic");
}

using Accumulator = std::unordered_map<std::uint64_t, Rat>;

std::vector<Poly::Term> drain(Accumulator& acc) {
  std::vector<Poly::Term> out;
  out.reserve(acc.size());
  for (auto& [key, c] : acc)
    if (!is_zero(c)) out.push_back({unpack(key), std::move(c)});
  std::sort(out.begin(), out.end(),
            [](const Poly::Term& a, const Poly::Term& b) { return a.m > b.m; });
  return out;
}

// Merge of two sorted term lists, q scaled by sign.
std::vector<Poly::Term> merge(const std::vector<Poly::Term>& a,
                              const std::vector<Poly::Term>& b, bool negate_b) {
  std::vector<Poly::Term> out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin(), ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->m > ib->m)) {
      out.push_back(*ia++);
    } else if (ia == a.end() || ib->m > ia->m) {
      out.push_back({ib->m, negate_b ? Rat(-ib->c) : ib->c});
      ++ib;
    } else {
      Rat c = negate_b ? Rat(ia->c - ib->c) : Rat(ia->c + ib->c);
      if (!is_zero(c)) out.push_back({ia->m, std::move(c)});
      ++ia;
      ++ib;
    }
  }
  return out;
}


constexpr std::size_t kIntegerMinWork = 2048;  // below this the rational loop is cheaper

}  // namespace

Poly::Poly(const Rat& c) {
  if (!invol::is_zero(c)) terms_.push_back({{0, 0}, c});
}

Poly Poly::monomial(const Rat& c, std::uint32_t i, std::uint32_t j) {
  check_cap(i, j);
  Poly p;
  if (!invol::is_zero(c)) p.terms_.push_back({{i, j}, c});
  return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
  Accumulator acc;
  for (auto& t : terms) {
    check_cap(t.m.i, t.m.j);
    acc[pack(t.m)] += t.c;
  }
  Poly p;
  p.terms_ = drain(acc);
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].m.degree() == 0);
}

int Poly::degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.front().m.degree());
}

std::uint32_t Poly::degree_in(Var v) const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, v == Var::X ? t.m.i : t.m.j);
  return d;
}

Rat Poly::coefficient(Monomial m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, Monomial key) { return t.m > key; });
  if (it != terms_.end() && it->m == m) return it->c;
  return 0;
}

const Poly::Term& Poly::leading_term() const {
  if (terms_.empty())
    throw Error(ErrorCode::ZeroPolynomial, "zero polynomial has no leading term");
  return terms_.front();
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.c = -t.c;
  return r;
}

Poly operator+(const Poly& p, const Poly& q) {
  Poly r;
  r.terms_ = merge(p.terms_, q.terms_, false);
  return r;
}

Poly operator-(const Poly& p, const Poly& q) {
  Poly r;
  r.terms_ = merge(p.terms_, q.terms_, true);
  return r;
}

Poly operator*(const Rat& c, const Poly& p) {
  if (is_zero(c)) return {};
  Poly r = p;
  for (auto& t : r.terms_) t.c *= c;
  return r;
}

Poly operator*(const Poly& p, const Poly& q) {
  if (p.is_zero() || q.is_zero()) return {};
  check_cap(std::uint64_t(p.degree_in(Var::X)) + q.degree_in(Var::X),
            std::uint64_t(p.degree_in(Var::Y)) + q.degree_in(Var::Y));
  if (p.size() * q.size() >= kIntegerMinWork) {
    Poly r;
    r.terms_ = detail::product(p, q);
    return r;
  }
  Accumulator acc;
  acc.reserve(p.size() * q.size());
  Rat prod;
  for (const auto& a : p.terms_) {
    for (const auto& b : q.terms_) {
      mpq_mul(prod.get_mpq_t(), a.c.get_mpq_t(), b.c.get_mpq_t());
      acc[pack({a.m.i + b.m.i, a.m.j + b.m.j})] += prod;
    }
  }
  Poly r;
  r.terms_ = drain(acc);
  return r;
}

Poly pow(const Poly& p, std::uint32_t n) {
  Poly result(1);
  Poly base = p;
  while (n > 0) {
    if (n & 1u) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

Poly partial(const Poly& p, Var v) {
  std::vector<Poly::Term> out;
  for (const auto& t : p.terms()) {
    std::uint32_t e = v == Var::X ? t.m.i : t.m.j;
    if (e == 0) continue;
    Monomial m = v == Var::X ? Monomial{t.m.i - 1, t.m.j} : Monomial{t.m.i, t.m.j - 1};
    out.push_back({m, t.c * e});
  }
  return Poly::from_terms(std::move(out));
}

Poly jac(const Poly& p, const Poly& q) {
  return partial(p, Var::X) * partial(q, Var::Y) - partial(p, Var::Y) * partial(q, Var::X);
}

Poly substitute(const Poly& p, const Poly& px, const Poly& py) {
  if (p.is_zero()) return {};
  // p = sum_i x^i C_i(y); evaluate C_i at py, then Horner in px.
  std::map<std::uint32_t, std::vector<const Poly::Term*>, std::greater<>> by_x;
  std::uint32_t max_j = 0;
  for (const auto& t : p.terms()) {
    by_x[t.m.i].push_back(&t);
    max_j = std::max(max_j, t.m.j);
  }
  const std::uint32_t max_i = by_x.begin()->first;
  check_cap(std::uint64_t(max_i) * px.degree_in(Var::X) + std::uint64_t(max_j) * py.degree_in(Var::X),
            std::uint64_t(max_i) * px.degree_in(Var::Y) + std::uint64_t(max_j) * py.degree_in(Var::Y));
  if (p.size() * (px.size() + py.size()) >= kIntegerMinWork)
    return Poly::from_terms(detail::substitute(p, px, py));
  std::vector<Poly> py_pow{Poly(1)};
  for (std::uint32_t j = 1; j <= max_j; ++j) py_pow.push_back(py_pow.back() * py);

  auto column = [&](const std::vector<const Poly::Term*>& ts) {
    Accumulator acc;
    Rat prod;
    for (const auto* t : ts) {
      for (const auto& s : py_pow[t->m.j].terms()) {
        mpq_mul(prod.get_mpq_t(), t->c.get_mpq_t(), s.c.get_mpq_t());
        acc[pack(s.m)] += prod;
      }
    }
    return Poly::from_terms(drain(acc));
  };

  Poly result;
  std::uint32_t current = by_x.begin()->first;
  for (const auto& [i, ts] : by_x) {
    while (current > i) {
      result *= px;
      --current;
    }
    result += column(ts);
  }
  while (current > 0) {
    result *= px;
    --current;
  }
  return result;
}

Poly leading_form(const Poly& p) {
  if (p.is_zero())
    throw Error(ErrorCode::ZeroPolynomial, "leading_form of the zero polynomial");
  std::vector<Poly::Term> top;
  std::uint32_t d = p.terms().front().m.degree();
  for (const auto& t : p.terms()) {
    if (t.m.degree() != d) break;
    top.push_back(t);
  }
  return Poly::from_terms(std::move(top));
}

Poly univariate(const std::vector<Rat>& coeffs, Var v) {
  std::vector<Poly::Term> ts;
  for (std::uint32_t k = 0; k < coeffs.size(); ++k) {
    if (is_zero(coeffs[k])) continue;
    ts.push_back({v == Var::X ? Monomial{k, 0} : Monomial{0, k}, coeffs[k]});
  }
  return Poly::from_terms(std::move(ts));
}

Poly evaluate_univariate(const std::vector<Rat>& coeffs, const Poly& a) {
  Poly result;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
    result = result * a + Poly(*it);
  return result;
}

}  // namespace invol
