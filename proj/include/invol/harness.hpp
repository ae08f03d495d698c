#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "invol/endo.hpp"
#include "invol/tame.hpp"

namespace invol {

struct CorpusParams {
  std::size_t count = 200;
  std::size_t max_factors = 4;  // 0 yields identity entries
  unsigned max_tri_degree = 4;
  unsigned coeff_height = 8;
  std::uint64_t seed = 0;
};

/// Throws InvalidArgument unless count, max_tri_degree and coeff_height are
/// positive.
void validate(const CorpusParams& params);

/// Where an entry came from: its generator stream is seeded with
/// seed_seq{lo32(seed), hi32(seed), index}.
struct SeedPath {
  std::uint64_t seed = 0;
  std::size_t index = 0;
  std::vector<std::string> kinds;  // "affine" / "triangular", in word order
};

struct CorpusEntry {
  Endo endo;
  Factorization ground_truth;  // the sampled word, unreduced
  SeedPath seed_path;
};

/// mt19937_64 with unbiased integer sampling by rejection, so the stream
/// does not depend on the standard library's distributions.
class Rng {
 public:
  explicit Rng(std::seed_seq& seq) : engine_(seq) {}
  Rng(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next() { return engine_(); }
  /// Uniform in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  /// Uniform in [-h, h] \ {0}.
  std::int64_t nonzero(std::int64_t h);

 private:
  std::mt19937_64 engine_;
};

Affine random_affine(Rng& rng, unsigned height);
Triangular random_triangular(Rng& rng, unsigned max_degree, unsigned height);
/// Dense random polynomial of total degree <= max_degree, integer
/// coefficients in [-height, height].
Poly random_poly(Rng& rng, unsigned max_degree, unsigned height);
/// A univariate coefficient list of degree exactly `degree`.
std::vector<Rat> random_univariate(Rng& rng, unsigned degree, unsigned height);

CorpusEntry random_entry(const CorpusParams& params, std::size_t index);
std::vector<CorpusEntry> random_tame(const CorpusParams& params);

struct PropertyResult {
  explicit PropertyResult(std::string n = {}) : name(std::move(n)) {}

  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::vector<std::string> counterexamples;  // JSON, first few failures only
  std::vector<double> case_seconds;

  bool ok() const { return failed == 0 && passed > 0; }
};

struct Report {
  std::string suite;
  std::vector<PropertyResult> properties;
  double seconds = 0;

  bool ok() const;
  std::size_t failures() const;
};

/// Per-property drivers. Each case runs in isolation; an exception counts
/// as a failure and its message is recorded with the case.
PropertyResult prop_ring_axioms(const CorpusParams& params);
PropertyResult prop_parse_round_trip(const CorpusParams& params);
PropertyResult prop_jacobian_rules(const CorpusParams& params);
PropertyResult prop_parity_formula();
PropertyResult prop_parity_statements(const CorpusParams& params);
PropertyResult prop_tame_round_trip(const std::vector<CorpusEntry>& corpus);
PropertyResult prop_classification(const std::vector<CorpusEntry>& corpus, std::size_t count);
PropertyResult prop_membership(const std::vector<CorpusEntry>& corpus, std::uint64_t seed);
PropertyResult prop_membership_negative();
PropertyResult prop_wang(const CorpusParams& params);
PropertyResult prop_tfae(const std::vector<CorpusEntry>& corpus);
PropertyResult prop_restriction_extension(const std::vector<CorpusEntry>& corpus);
PropertyResult prop_path_agreement(const std::vector<CorpusEntry>& corpus, std::uint64_t seed);
PropertyResult prop_sk_remark(const CorpusParams& params);

inline constexpr std::string_view kSuites[] = {"poly", "parity",     "tame", "membership",
                                               "tfae", "conditions", "all"};

/// Throws UnknownSuite for names outside kSuites.
Report run_suite(std::string_view name, const CorpusParams& params);

}  // namespace invol
