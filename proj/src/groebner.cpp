#include <algorithm>
#include <map>
#include <tuple>

#include "invol/error.hpp"
#include "invol/membership.hpp"

namespace invol {
namespace {

using WorkPoly = std::map<Monomial4, Rat, std::greater<>>;

const Poly4* find_reducer(const Monomial4& m, const std::vector<const Poly4*>& basis) {
  for (const Poly4* g : basis)
    if (g->leading_monomial().divides(m)) return g;
  return nullptr;
}

Poly4 reduce(WorkPoly work, const std::vector<const Poly4*>& basis) {
  std::vector<Poly4::Term> rem;
  Rat coef, prod;
  while (!work.empty()) {
    auto it = work.begin();
    const Poly4* g = find_reducer(it->first, basis);
    if (!g) {
      rem.push_back({it->first, std::move(it->second)});
      work.erase(it);
      continue;
    }
    Monomial4 q = it->first / g->leading_monomial();
    coef = it->second / g->leading_term().c;
    work.erase(it);
    const auto& ts = g->terms();
    for (std::size_t k = 1; k < ts.size(); ++k) {
      mpq_mul(prod.get_mpq_t(), coef.get_mpq_t(), ts[k].c.get_mpq_t());
      auto [slot, inserted] = work.try_emplace(ts[k].m * q);
      slot->second -= prod;
      if (is_zero(slot->second)) work.erase(slot);
    }
  }
  return Poly4::from_terms(std::move(rem));
}

WorkPoly to_work(const Poly4& f) {
  WorkPoly w;
  for (const auto& t : f.terms()) w.emplace(t.m, t.c);
  return w;
}

Poly4 s_polynomial(const Poly4& f, const Poly4& g) {
  Monomial4 l = f.leading_monomial().lcm(g.leading_monomial());
  Monomial4 qf = l / f.leading_monomial(), qg = l / g.leading_monomial();
  Rat cf = 1 / f.leading_term().c, cg = 1 / g.leading_term().c;
  WorkPoly w;
  for (std::size_t k = 1; k < f.terms().size(); ++k) w[f.terms()[k].m * qf] += cf * f.terms()[k].c;
  for (std::size_t k = 1; k < g.terms().size(); ++k) w[g.terms()[k].m * qg] -= cg * g.terms()[k].c;
  std::vector<Poly4::Term> ts;
  for (auto& [m, c] : w)
    if (!is_zero(c)) ts.push_back({m, c});
  return Poly4::from_terms(std::move(ts));
}

void check_degree(unsigned degree) {
  if (degree > kGroebnerDegreeCap)
    throw Error(ErrorCode::DegreeCapExceeded,
                "Groebner intermediate of degree " + std::to_string(degree) +
                    " exceeds cap " + std::to_string(kGroebnerDegreeCap));
}

struct Pair {
  std::size_t i, j;
  Monomial4 lcm;
};

class Buchberger {
 public:
  std::vector<Poly4> run(const std::vector<Poly4>& gens) {
    for (const auto& f : gens) {
      if (f.is_zero()) continue;
      add(reduce(to_work(f), active()).monic());
    }
    while (!pairs_.empty()) {
      auto best = std::min_element(pairs_.begin(), pairs_.end(), [](const Pair& a, const Pair& b) {
        return std::make_tuple(a.lcm.degree(), a.lcm, a.i, a.j) <
               std::make_tuple(b.lcm.degree(), b.lcm, b.i, b.j);
      });
      Pair p = *best;
      pairs_.erase(best);
      Poly4 s = s_polynomial(polys_[p.i], polys_[p.j]);
      if (s.is_zero()) continue;
      check_degree(s.degree());
      add(reduce(to_work(s), active()).monic());
    }
    return finish();
  }

 private:
  std::vector<const Poly4*> active() const {
    std::vector<const Poly4*> out;
    for (std::size_t k = 0; k < polys_.size(); ++k)
      if (active_[k]) out.push_back(&polys_[k]);
    return out;
  }

  // Gebauer-Moeller update with the new element h.
  void add(Poly4 h) {
    if (h.is_zero()) return;
    check_degree(h.degree());
    const std::size_t hi = polys_.size();
    polys_.push_back(std::move(h));
    active_.push_back(true);
    const Monomial4& lh = polys_[hi].leading_monomial();

    std::vector<Pair> candidates;
    for (std::size_t g = 0; g < hi; ++g)
      if (active_[g]) candidates.push_back({g, hi, lh.lcm(polys_[g].leading_monomial())});

    std::vector<Pair> kept;
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      const Pair& c = candidates[a];
      bool coprime = lh.coprime(polys_[c.i].leading_monomial());
      bool dominated = false;
      for (std::size_t b = a + 1; b < candidates.size() && !dominated; ++b)
        dominated = candidates[b].lcm.divides(c.lcm);
      for (const Pair& d : kept) {
        if (dominated) break;
        dominated = d.lcm.divides(c.lcm);
      }
      if (coprime || !dominated) kept.push_back(c);
    }

    std::vector<Pair> next;
    for (const Pair& p : pairs_) {
      bool drop = lh.divides(p.lcm) &&
                  lh.lcm(polys_[p.i].leading_monomial()) != p.lcm &&
                  lh.lcm(polys_[p.j].leading_monomial()) != p.lcm;
      if (!drop) next.push_back(p);
    }
    for (const Pair& c : kept)
      if (!lh.coprime(polys_[c.i].leading_monomial())) next.push_back(c);
    pairs_ = std::move(next);

    for (std::size_t g = 0; g < hi; ++g)
      if (active_[g] && lh.divides(polys_[g].leading_monomial())) active_[g] = false;
  }

  std::vector<Poly4> finish() {
    std::vector<const Poly4*> minimal;
    auto act = active();
    for (const Poly4* g : act) {
      bool redundant = false;
      for (const Poly4* o : act)
        if (o != g && o->leading_monomial().divides(g->leading_monomial()) &&
            (o->leading_monomial() != g->leading_monomial() || o < g))
          redundant = true;
      if (!redundant) minimal.push_back(g);
    }
    std::vector<Poly4> reduced;
    for (const Poly4* g : minimal) {
      std::vector<const Poly4*> others;
      for (const Poly4* o : minimal)
        if (o != g) others.push_back(o);
      WorkPoly tail = to_work(*g);
      tail.erase(tail.begin());
      Poly4 r = reduce(std::move(tail), others);
      std::vector<Poly4::Term> ts = r.terms();
      ts.push_back(g->leading_term());
      reduced.push_back(Poly4::from_terms(std::move(ts)).monic());
    }
    std::sort(reduced.begin(), reduced.end(), [](const Poly4& a, const Poly4& b) {
      return a.leading_monomial() < b.leading_monomial();
    });
    return reduced;
  }

  std::vector<Poly4> polys_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
};

}  // namespace

std::vector<Poly4> groebner(const std::vector<Poly4>& gens) {
  if (std::all_of(gens.begin(), gens.end(), [](const Poly4& g) { return g.is_zero(); }))
    throw Error(ErrorCode::InvalidArgument, "groebner needs a nonzero generator");
  return Buchberger().run(gens);
}

Poly4 normal_form(const Poly4& f, const std::vector<Poly4>& basis) {
  std::vector<const Poly4*> ptrs;
  for (const auto& g : basis) ptrs.push_back(&g);
  return reduce(to_work(f), ptrs);
}

}  // namespace invol
