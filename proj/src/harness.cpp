#include "invol/harness.hpp"

#include <chrono>
#include <limits>

#include "invol/conditions.hpp"
#include "invol/membership.hpp"
#include "invol/serialize.hpp"

namespace invol {
namespace {

constexpr std::size_t kMaxCounterexamples = 5;
constexpr std::size_t kParityPairs = 500;
constexpr unsigned kMembershipQueries = 3;
constexpr unsigned kMembershipDegree = 6;

// Stream tags keep property generators apart from corpus entries, which use
// the bare entry index as their stream.
enum Stream : std::uint64_t {
  kRing = 1,
  kParse,
  kJacobian,
  kParity,
  kClassify,
  kMembership,
  kWang,
  kAgreement,
  kSk,
};

std::uint64_t stream_id(Stream tag, std::uint64_t i) { return (std::uint64_t{tag} << 32) | i; }

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

template <class Check, class Context>
void run_case(PropertyResult& r, Check&& check, Context&& context) {
  const auto start = Clock::now();
  std::string reason;
  bool ok = false;
  try {
    ok = check();
    if (!ok) reason = "property violated";
  } catch (const std::exception& e) {
    reason = e.what();
  }
  r.case_seconds.push_back(seconds_since(start));
  if (ok) {
    ++r.passed;
    return;
  }
  ++r.failed;
  if (r.counterexamples.size() < kMaxCounterexamples) {
    Json j = context();
    j["reason"] = reason;
    r.counterexamples.push_back(j.dump());
  }
}

Json entry_context(const CorpusEntry& e) { return {{"entry", to_json(e)}}; }

// Automorphisms commuting with alpha: w T w^-1 with w = (x+y, x-y) and T
// commuting with beta, between affine maps with matrix [[p, q], [q, p]].
Endo random_alpha_commuting(Rng& rng, unsigned height) {
  const auto h = static_cast<std::int64_t>(height);
  auto affine = [&] {
    Affine a;
    do {
      const Rat p = rng.uniform(-h, h), q = rng.uniform(-h, h);
      a.M = {{{p, q}, {q, p}}};
    } while (is_zero(a.det()));
    const Rat t = rng.uniform(-h, h);
    a.t = {t, t};
    return a.to_endo();
  };
  Triangular t;
  t.a = rng.nonzero(h);
  t.c = rng.nonzero(h);
  t.p = evaluate_univariate(random_univariate(rng, static_cast<unsigned>(rng.uniform(1, 2)), height),
                            Poly::y() * Poly::y());
  const Endo w{Poly::x() + Poly::y(), Poly::x() - Poly::y()};
  Endo core = compose(compose(w, t.to_endo()), invert(w));
  return compose(compose(affine(), core), affine());
}

// (l, l' + H(l)) with l = a x + b y + e, a^2 != b^2: a generalized
// alpha-endomorphism on the P-branch; `swap` puts l second.
Endo random_generalized(Rng& rng, unsigned height, bool swap) {
  const auto ht = static_cast<std::int64_t>(height);
  Rat a, b, c, d;
  do {
    a = rng.uniform(-ht, ht);
    b = rng.uniform(-ht, ht);
    c = rng.uniform(-ht, ht);
    d = rng.uniform(-ht, ht);
  } while (a * a == b * b || is_zero(a * d - b * c));
  const Poly l = a * Poly::x() + b * Poly::y() + Poly(Rat(rng.uniform(-ht, ht)));
  const Poly l2 = c * Poly::x() + d * Poly::y() + Poly(Rat(rng.uniform(-ht, ht)));
  auto h = random_univariate(rng, static_cast<unsigned>(rng.uniform(2, 4)), height);
  const Poly other = l2 + evaluate_univariate(h, l);
  return swap ? Endo{other, l} : Endo{l, other};
}

bool alternates(const std::vector<Elementary>& word) {
  for (std::size_t i = 0; i + 1 < word.size(); ++i)
    if (word[i].index() == word[i + 1].index()) return false;
  return true;
}

}  // namespace

void validate(const CorpusParams& params) {
  if (params.count == 0 || params.max_tri_degree == 0 || params.coeff_height == 0)
    throw Error(ErrorCode::InvalidArgument,
                "corpus parameters count, max_tri_degree and coeff_height must be positive");
}

Rng::Rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  engine_.seed(seq);
}

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
  if (span == std::numeric_limits<std::uint64_t>::max()) return static_cast<std::int64_t>(next());
  const std::uint64_t n = span + 1;
  // Accept draws below the largest multiple of n.
  const std::uint64_t rem = (std::numeric_limits<std::uint64_t>::max() % n + 1) % n;
  std::uint64_t draw;
  do draw = next();
  while (draw > std::numeric_limits<std::uint64_t>::max() - rem);
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + draw % n);
}

std::int64_t Rng::nonzero(std::int64_t h) {
  std::int64_t v = uniform(-h, h - 1);
  return v >= 0 ? v + 1 : v;
}

Affine random_affine(Rng& rng, unsigned height) {
  const auto h = static_cast<std::int64_t>(height);
  Affine a;
  do {
    for (auto& row : a.M)
      for (auto& e : row) e = rng.uniform(-h, h);
  } while (is_zero(a.det()));
  for (auto& e : a.t) e = rng.uniform(-h, h);
  return a;
}

std::vector<Rat> random_univariate(Rng& rng, unsigned degree, unsigned height) {
  const auto h = static_cast<std::int64_t>(height);
  std::vector<Rat> c(degree + 1);
  for (unsigned k = 0; k < degree; ++k) c[k] = rng.uniform(-h, h);
  c[degree] = rng.nonzero(h);
  return c;
}

Triangular random_triangular(Rng& rng, unsigned max_degree, unsigned height) {
  const auto h = static_cast<std::int64_t>(height);
  Triangular t;
  t.a = rng.nonzero(h);
  t.c = rng.nonzero(h);
  t.d = rng.uniform(-h, h);
  const auto deg = static_cast<unsigned>(rng.uniform(1, max_degree));
  t.p = univariate(random_univariate(rng, deg, height), Var::Y);
  return t;
}

Poly random_poly(Rng& rng, unsigned max_degree, unsigned height) {
  const auto h = static_cast<std::int64_t>(height);
  std::vector<Poly::Term> terms;
  for (unsigned d = 0; d <= max_degree; ++d)
    for (unsigned i = 0; i <= d; ++i) terms.push_back({{i, d - i}, Rat(rng.uniform(-h, h))});
  return Poly::from_terms(std::move(terms));
}

CorpusEntry random_entry(const CorpusParams& params, std::size_t index) {
  Rng rng(params.seed, index);
  CorpusEntry e;
  e.seed_path = {params.seed, index, {}};
  const std::size_t n =
      params.max_factors == 0 ? 0
                              : static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(params.max_factors)));
  bool affine = rng.uniform(0, 1) == 0;
  for (std::size_t k = 0; k < n; ++k, affine = !affine) {
    if (affine) {
      e.ground_truth.factors.push_back(random_affine(rng, params.coeff_height));
      e.seed_path.kinds.push_back("affine");
    } else {
      e.ground_truth.factors.push_back(
          random_triangular(rng, params.max_tri_degree, params.coeff_height));
      e.seed_path.kinds.push_back("triangular");
    }
  }
  e.endo = e.ground_truth.compose_all();
  ensure(is_jacobian_unit(e.endo), "sampled word has a non-constant Jacobian");
  return e;
}

std::vector<CorpusEntry> random_tame(const CorpusParams& params) {
  validate(params);
  std::vector<CorpusEntry> out;
  out.reserve(params.count);
  for (std::size_t i = 0; i < params.count; ++i) out.push_back(random_entry(params, i));
  return out;
}

bool Report::ok() const {
  for (const auto& p : properties)
    if (!p.ok()) return false;
  return !properties.empty();
}

std::size_t Report::failures() const {
  std::size_t n = 0;
  for (const auto& p : properties) n += p.failed;
  return n;
}

// ---- poly --------------------------------------------------------------

PropertyResult prop_ring_axioms(const CorpusParams& params) {
  PropertyResult r{"ring axioms and substitution homomorphism"};
  for (std::size_t i = 0; i < params.count; ++i) {
    Rng rng(params.seed, stream_id(kRing, i));
    const Poly p = random_poly(rng, 4, params.coeff_height);
    const Poly q = random_poly(rng, 4, params.coeff_height);
    const Poly s = random_poly(rng, 3, params.coeff_height);
    const Poly a = random_poly(rng, 2, params.coeff_height);
    const Poly b = random_poly(rng, 2, params.coeff_height);
    run_case(
        r,
        [&] {
          return p + q == q + p && p * q == q * p && (p * q) * s == p * (q * s) &&
                 p * (q + s) == p * q + p * s && (p - p).is_zero() &&
                 substitute(p * q, a, b) == substitute(p, a, b) * substitute(q, a, b) &&
                 substitute(p + q, a, b) == substitute(p, a, b) + substitute(q, a, b);
        },
        [&] { return Json{{"p", render(p)}, {"q", render(q)}, {"s", render(s)}}; });
  }
  return r;
}

PropertyResult prop_parse_round_trip(const CorpusParams& params) {
  PropertyResult r{"parse(render(p)) == p"};
  for (std::size_t i = 0; i < params.count; ++i) {
    Rng rng(params.seed, stream_id(kParse, i));
    const Rat scale = Rat(rng.nonzero(params.coeff_height)) / rng.nonzero(params.coeff_height);
    const Poly p = scale * random_poly(rng, 5, params.coeff_height);
    const Endo f{random_poly(rng, 3, params.coeff_height), random_poly(rng, 3, params.coeff_height)};
    run_case(
        r,
        [&] {
          const std::string text = render(p);
          return parse_poly(text) == p && render(parse_poly(text)) == text &&
                 parse_endo(render(f)) == f && render(parse_poly(render(p, kUV), kUV), kUV) == render(p, kUV);
        },
        [&] { return Json{{"p", render(p)}, {"f", render(f)}}; });
  }
  return r;
}

PropertyResult prop_jacobian_rules(const CorpusParams& params) {
  PropertyResult r{"Jacobian antisymmetry, Leibniz and chain rules"};
  for (std::size_t i = 0; i < params.count; ++i) {
    Rng rng(params.seed, stream_id(kJacobian, i));
    const Poly p = random_poly(rng, 3, params.coeff_height);
    const Poly q = random_poly(rng, 3, params.coeff_height);
    const Poly s = random_poly(rng, 3, params.coeff_height);
    const Endo f{random_poly(rng, 2, params.coeff_height), random_poly(rng, 2, params.coeff_height)};
    const Endo g{p, q};
    run_case(
        r,
        [&] {
          return jac(p, q) == -jac(q, p) && jac(p, q * s) == q * jac(p, s) + s * jac(p, q) &&
                 jacobian_of(compose(f, g)) == apply(f, jacobian_of(g)) * jacobian_of(f);
        },
        [&] { return Json{{"f", render(f)}, {"g", render(g)}, {"s", render(s)}}; });
  }
  return r;
}

// ---- parity ------------------------------------------------------------

PropertyResult prop_parity_formula() {
  PropertyResult r{"jac_parity_formula equals direct differentiation (i,j,k,l <= 6)"};
  for (unsigned i = 0; i <= 6; ++i)
    for (unsigned j = 0; j <= 6; ++j)
      for (unsigned k = 0; k <= 6; ++k)
        for (unsigned l = 0; l <= 6; ++l) {
          run_case(
              r,
              [&] {
                const Poly a = Poly::monomial(1, i, j) + Poly::monomial(1, j, i);
                const Poly b = Poly::monomial(1, k, l) + Poly::monomial(1, l, k);
                return jac_parity_formula(i, j, k, l) == jac(a, b);
              },
              [&] { return Json{{"i", i}, {"j", j}, {"k", k}, {"l", l}}; });
        }
  return r;
}

PropertyResult prop_parity_statements(const CorpusParams& params) {
  PropertyResult r{"Jacobian parity: sym*sym, skew*skew -> skew; sym*skew -> sym"};
  for (std::size_t n = 0; n < kParityPairs; ++n) {
    Rng rng(params.seed, stream_id(kParity, n));
    const auto d1 = static_cast<unsigned>(rng.uniform(1, 8));
    const auto d2 = static_cast<unsigned>(rng.uniform(1, 8));
    const Poly w1 = random_poly(rng, d1, params.coeff_height);
    const Poly w2 = random_poly(rng, d2, params.coeff_height);
    run_case(
        r,
        [&] {
          const auto a = sym_skew_split(w1, alpha());
          const auto b = sym_skew_split(w2, alpha());
          auto skew = [](const Poly& p) { return apply(alpha(), p) == -p; };
          auto sym = [](const Poly& p) { return apply(alpha(), p) == p; };
          return skew(jac(a.s, b.s)) && skew(jac(a.k, b.k)) && sym(jac(a.s, b.k));
        },
        [&] { return Json{{"w1", render(w1)}, {"w2", render(w2)}}; });
  }
  return r;
}

// ---- tame --------------------------------------------------------------

PropertyResult prop_tame_round_trip(const std::vector<CorpusEntry>& corpus) {
  PropertyResult r{"decompose/recompose, inverse identities, chain rule, degree trace"};
  for (const auto& e : corpus) {
    run_case(
        r,
        [&] {
          const Endo& f = e.endo;
          if (e.ground_truth.compose_all() != f || !is_jacobian_unit(f)) return false;
          const Factorization fac = decompose(f);
          if (fac.compose_all() != f || !alternates(fac.factors)) return false;
          // deg P + deg Q strictly decreases; at most max-degree steps.
          const int top = std::max(f.P.degree(), f.Q.degree());
          if (static_cast<int>(fac.degree_trace.size()) > top) return false;
          for (std::size_t k = 0; k + 1 < fac.degree_trace.size(); ++k) {
            auto [p0, q0] = fac.degree_trace[k];
            auto [p1, q1] = fac.degree_trace[k + 1];
            if (p1 + q1 >= p0 + q0) return false;
          }
          const Endo inv = invert(f);
          if (compose(f, inv) != Endo::identity() || compose(inv, f) != Endo::identity())
            return false;
          Poly jf = jacobian_of(f);
          Poly product(1);
          for (const auto& el : fac.factors) product = product * jacobian_of(to_endo(el));
          return jacobian_of(inv) * apply(inv, jf) == Poly(1) && product == jf;
        },
        [&] { return entry_context(e); });
  }
  return r;
}

PropertyResult prop_classification(const std::vector<CorpusEntry>& corpus, std::size_t count) {
  PropertyResult r{"involution classification with sound conjugators"};
  auto sound = [](const Endo& gamma, InvolutionTag want) {
    const InvolutionClass cls = classify_involution(gamma);
    if (cls.tag != want) return false;
    if (want == InvolutionTag::Identity) return !cls.conjugator.has_value();
    // c gamma == N c with c an automorphism is gamma == c^-1 N c.
    return cls.conjugator && intertwines(*cls.conjugator, gamma, normal_form(want));
  };
  for (std::size_t n = 0; n < count && !corpus.empty(); ++n) {
    const CorpusEntry& e = corpus[n % corpus.size()];
    run_case(
        r, [&] { return sound(conjugate_by(e.endo, alpha()), InvolutionTag::AlphaConjugate); },
        [&] { return entry_context(e); });
  }
  const Endo minus{-Poly::x(), -Poly::y()};
  const Endo minus_tri{-Poly::x() + Poly::y() * Poly::y(), -Poly::y()};
  for (const Endo& m : {minus, minus_tri})
    run_case(
        r, [&] { return sound(m, InvolutionTag::MinusIdentity); },
        [&] { return Json{{"gamma", render(m)}}; });
  run_case(
      r,
      [&] {
        const Endo g = conjugate_to_alpha(beta());
        return conjugate_by(g, alpha()) == beta() &&
               g == Endo{Poly::x() + Poly::y(), Poly::x() - Poly::y()};
      },
      [&] { return Json{{"gamma", "beta"}}; });
  run_case(
      r, [&] { return sound(Endo::identity(), InvolutionTag::Identity); },
      [&] { return Json{{"gamma", "id"}}; });
  // Linear involutions S diag(1, -1) S^-1: affine conjugators.
  for (std::size_t n = 0; n < 20; ++n) {
    Rng rng(0, stream_id(kClassify, n));
    Affine s = random_affine(rng, 5);
    s.t = {0, 0};
    const Endo L = conjugate_by(s.to_endo(), beta());
    run_case(
        r,
        [&] {
          const Endo g = conjugate_to_alpha(L);
          return as_affine(g).has_value() && conjugate_by(g, alpha()) == L;
        },
        [&] { return Json{{"gamma", render(L)}}; });
  }
  return r;
}

// ---- membership --------------------------------------------------------

PropertyResult prop_membership(const std::vector<CorpusEntry>& corpus, std::uint64_t seed) {
  PropertyResult r{"in_subalgebra finds R = phi(P, Q) with phi = R o f^-1"};
  for (const auto& e : corpus) {
    Rng rng(seed, stream_id(kMembership, e.seed_path.index));
    std::vector<Poly> queries;
    for (unsigned k = 0; k < kMembershipQueries; ++k)
      queries.push_back(random_poly(rng, static_cast<unsigned>(rng.uniform(1, kMembershipDegree)), 8));
    run_case(
        r,
        [&] {
          const Subalgebra T(e.endo.P, e.endo.Q);
          const Endo inv = invert(e.endo);
          for (const auto& R : queries) {
            auto w = T.find(R);
            if (!w || w->phi != apply(inv, R)) return false;
          }
          return true;
        },
        [&] {
          Json j = entry_context(e);
          for (const auto& R : queries) j["queries"].push_back(render(R));
          return j;
        });
  }
  return r;
}

PropertyResult prop_membership_negative() {
  PropertyResult r{"membership negative and positive controls"};
  const Poly x = Poly::x(), y = Poly::y();
  struct Case {
    Poly R, P, Q;
    bool member;
  };
  const std::vector<Case> cases{
      {x, x * x, y, false},
      {x * y, x * x, y * y, false},
      {x * x * y * y + Poly(3), x * x, y * y, true},
      {x, x + y * y, y, true},
      {y, x + y, x - y, true},
  };
  for (const auto& c : cases)
    run_case(
        r, [&] { return in_subalgebra(c.R, c.P, c.Q).has_value() == c.member; },
        [&] { return Json{{"R", render(c.R)}, {"P", render(c.P)}, {"Q", render(c.Q)}}; });
  return r;
}

PropertyResult prop_wang(const CorpusParams& params) {
  PropertyResult r{"wang_membership(A, H(A)) recovers H"};
  for (std::size_t n = 0; n < params.count; ++n) {
    Rng rng(params.seed, stream_id(kWang, n));
    Poly A;
    do A = random_poly(rng, static_cast<unsigned>(rng.uniform(1, 4)), params.coeff_height);
    while (A.is_constant());
    const UniWitness H{random_univariate(rng, static_cast<unsigned>(rng.uniform(0, 5)),
                                         params.coeff_height)};
    run_case(
        r,
        [&] {
          auto w = wang_membership(A, H.evaluate(A));
          return w && *w == H;
        },
        [&] { return Json{{"A", render(A)}, {"H", to_json(H)}}; });
  }
  run_case(
      r, [&] { return !wang_membership(Poly::x(), Poly::y()).has_value(); },
      [&] { return Json{{"A", "x"}, {"R", "y"}}; });
  return r;
}

// ---- tfae --------------------------------------------------------------

PropertyResult prop_tfae(const std::vector<CorpusEntry>& corpus) {
  PropertyResult r{"gamma = f^-1 alpha f, f gamma = alpha f, core = h f g^-1 recovers f"};
  for (const auto& e : corpus) {
    run_case(
        r,
        [&] {
          const Endo& f = e.endo;
          auto pair = find_gamma_delta(f);
          if (!pair || !is_involution(pair->gamma) || !intertwines(f, pair->gamma, alpha()))
            return false;
          const AlphaReduction red = reduce_to_alpha_endo(f, *pair);
          if (!intertwines(red.core, alpha(), alpha()) || !is_jacobian_unit(red.core)) return false;
          invert(red.core);
          return compose(compose(invert(red.h), red.core), red.g) == f;
        },
        [&] { return entry_context(e); });
  }
  return r;
}

// ---- conditions --------------------------------------------------------

PropertyResult prop_restriction_extension(const std::vector<CorpusEntry>& corpus) {
  PropertyResult r{"restriction (alpha, beta) and extension agree with is_automorphism"};
  for (const auto& e : corpus) {
    run_case(
        r,
        [&] {
          const bool res_a = check_restriction(e.endo, alpha()).has_value();
          const bool res_b = check_restriction(e.endo, beta()).has_value();
          const bool ext = check_extension(e.endo).has_value();
          const bool aut = is_automorphism(e.endo);
          return res_a && res_b && ext && aut;
        },
        [&] { return entry_context(e); });
  }
  return r;
}

PropertyResult prop_path_agreement(const std::vector<CorpusEntry>& corpus, std::uint64_t seed) {
  PropertyResult r{"invert_via_generalized / invert_via_symmetry / invert agree"};
  std::vector<Endo> inputs;
  for (const auto& e : corpus) {
    const Endo& f = e.endo;
    const auto fixed = [&](const Poly& p) {
      const Poly ap = apply(alpha(), p);
      return ap == p || ap == -p;
    };
    if (is_generalized(f, alpha()) || fixed(f.P) || fixed(f.Q)) inputs.push_back(f);
  }
  for (std::size_t n = 0; n < 40; ++n) {
    Rng rng(seed, stream_id(kAgreement, n));
    Endo f = random_generalized(rng, 5, n % 2 == 1);
    if (n % 4 >= 2) f = compose(random_alpha_commuting(rng, 3), f);
    inputs.push_back(f);
  }
  for (std::size_t n = 0; n < 20; ++n) {
    Rng rng(seed, stream_id(kAgreement, 1000 + n));
    const Endo c = random_alpha_commuting(rng, 3);
    const Endo f{apply(c, Poly::x() + Poly::y()), apply(c, Poly::x() - Poly::y())};
    inputs.push_back(n % 2 ? f : Endo{f.Q, f.P});
  }
  for (const auto& f : inputs) {
    run_case(
        r,
        [&] {
          const Endo tame = invert(f);
          bool any = false;
          if (is_generalized(f, alpha())) {
            const auto g = invert_via_generalized(f, alpha());
            if (g.inverse != tame || !verify(g.cert, f, alpha())) return false;
            any = true;
          }
          try {
            const auto s = invert_via_symmetry(f, alpha());
            if (s.inverse != tame || !verify(s.cert, f, alpha())) return false;
            any = true;
          } catch (const Error& err) {
            if (err.code() != ErrorCode::SymmetryHypothesisFailed) throw;
          }
          return any;
        },
        [&] { return Json{{"f", render(f)}}; });
  }
  return r;
}

PropertyResult prop_sk_remark(const CorpusParams& params) {
  PropertyResult r{"f = (s, k): invert_via_sk builds g = f o (x+y, x-y)"};
  const Endo w{Poly::x() + Poly::y(), Poly::x() - Poly::y()};
  for (std::size_t n = 0; n < 50; ++n) {
    Rng rng(params.seed, stream_id(kSk, n));
    const Endo c = random_alpha_commuting(rng, 3);
    const Poly s = apply(c, Poly::x() + Poly::y());
    const Poly k = apply(c, Poly::x() - Poly::y());
    const Endo f{s, k};
    run_case(
        r,
        [&] {
          if (apply(alpha(), s) != s || apply(alpha(), k) != -k) return false;
          const SkInversion out = invert_via_sk(f, s, k);
          return out.g == compose(f, w) && out.inverse == invert(f);
        },
        [&] { return Json{{"f", render(f)}}; });
  }
  return r;
}

Report run_suite(std::string_view name, const CorpusParams& params) {
  bool known = false;
  for (auto s : kSuites) known = known || s == name;
  if (!known) throw Error(ErrorCode::UnknownSuite, "unknown suite '" + std::string(name) + "'");
  validate(params);

  const auto start = Clock::now();
  Report report{std::string(name), {}, 0};
  const bool all = name == "all";
  auto wants = [&](std::string_view s) { return all || name == s; };
  std::vector<CorpusEntry> corpus;
  if (!(name == "poly" || name == "parity")) corpus = random_tame(params);

  auto& props = report.properties;
  if (wants("poly")) {
    props.push_back(prop_ring_axioms(params));
    props.push_back(prop_parse_round_trip(params));
    props.push_back(prop_jacobian_rules(params));
  }
  if (wants("parity")) {
    props.push_back(prop_parity_formula());
    props.push_back(prop_parity_statements(params));
  }
  if (wants("tame")) {
    props.push_back(prop_tame_round_trip(corpus));
    props.push_back(prop_classification(corpus, 100));
  }
  if (wants("membership")) {
    props.push_back(prop_membership(corpus, params.seed));
    props.push_back(prop_membership_negative());
    props.push_back(prop_wang(params));
  }
  if (wants("tfae")) props.push_back(prop_tfae(corpus));
  if (wants("conditions")) {
    props.push_back(prop_restriction_extension(corpus));
    props.push_back(prop_path_agreement(corpus, params.seed));
    props.push_back(prop_sk_remark(params));
  }
  report.seconds = seconds_since(start);
  return report;
}

}  // namespace invol
