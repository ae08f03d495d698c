// Independent reference arithmetic for the tests: coefficients in an ordered
// map keyed by exponent pair, every operation done term by term with
// mpq_class. Slow and obviously correct; shares nothing with the library
// except the Poly conversion at the boundary.
#pragma once

#include <gmpxx.h>

#include <map>
#include <utility>
#include <vector>

#include "invol/endo.hpp"

namespace oracle {

using Exp = std::pair<unsigned, unsigned>;
using Dense = std::map<Exp, mpq_class>;

inline void add_to(Dense& d, Exp e, const mpq_class& c) {
  mpq_class& slot = d[e];
  slot += c;
  if (slot == 0) d.erase(e);
}

inline Dense from(const invol::Poly& p) {
  Dense d;
  for (const auto& t : p.terms()) add_to(d, {t.m.i, t.m.j}, t.c);
  return d;
}

inline invol::Poly to_poly(const Dense& d) {
  std::vector<invol::Poly::Term> terms;
  for (const auto& [e, c] : d) terms.push_back({{e.first, e.second}, c});
  return invol::Poly::from_terms(std::move(terms));
}

inline Dense add(const Dense& a, const Dense& b) {
  Dense r = a;
  for (const auto& [e, c] : b) add_to(r, e, c);
  return r;
}

inline Dense scale(const Dense& a, const mpq_class& s) {
  Dense r;
  for (const auto& [e, c] : a) add_to(r, e, c * s);
  return r;
}

inline Dense mul(const Dense& a, const Dense& b) {
  Dense r;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) add_to(r, {ea.first + eb.first, ea.second + eb.second}, ca * cb);
  return r;
}

inline Dense one() { return Dense{{{0, 0}, mpq_class(1)}}; }

inline Dense power(const Dense& a, unsigned n) {
  Dense r = one();
  for (unsigned k = 0; k < n; ++k) r = mul(r, a);
  return r;
}

// Term-by-term: sum c x-image^i y-image^j, powers recomputed per term.
inline Dense substitute(const Dense& p, const Dense& px, const Dense& py) {
  Dense r;
  for (const auto& [e, c] : p) r = add(r, scale(mul(power(px, e.first), power(py, e.second)), c));
  return r;
}

inline Dense dx(const Dense& p) {
  Dense r;
  for (const auto& [e, c] : p)
    if (e.first > 0) add_to(r, {e.first - 1, e.second}, c * e.first);
  return r;
}

inline Dense dy(const Dense& p) {
  Dense r;
  for (const auto& [e, c] : p)
    if (e.second > 0) add_to(r, {e.first, e.second - 1}, c * e.second);
  return r;
}

inline Dense jac(const Dense& p, const Dense& q) {
  return add(mul(dx(p), dy(q)), scale(mul(dy(p), dx(q)), -1));
}

inline invol::Poly apply(const invol::Endo& f, const invol::Poly& p) {
  return to_poly(substitute(from(p), from(f.P), from(f.Q)));
}

// compose(outer, inner): x -> outer(inner(x)).
inline invol::Endo compose(const invol::Endo& outer, const invol::Endo& inner) {
  return {oracle::apply(outer, inner.P), oracle::apply(outer, inner.Q)};
}

}  // namespace oracle
