// Acceptance run: one PASS/FAIL line per criterion with its wall-clock time
// against the limit. Exits nonzero when any criterion fails.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>

#include "invol/conditions.hpp"
#include "invol/harness.hpp"

using namespace invol;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* what, double limit_seconds, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
  const bool in_time = elapsed < limit_seconds;
  const bool pass = out.ok && in_time;
  if (!pass) ++failures;
  std::printf("%s criterion %d: %s  [%.2f s, limit %.0f s]%s%s\n", pass ? "PASS" : "FAIL", id, what,
              elapsed, limit_seconds, in_time ? "" : " time limit exceeded",
              out.detail.empty() ? "" : ("  " + out.detail).c_str());
  std::fflush(stdout);
}

Outcome from(const std::vector<PropertyResult>& props) {
  Outcome out;
  for (const auto& p : props) {
    if (!out.detail.empty()) out.detail += "; ";
    out.detail += p.name + " " + std::to_string(p.passed) + "/" + std::to_string(p.passed + p.failed);
    if (!p.ok()) {
      out.ok = false;
      if (!p.counterexamples.empty()) out.detail += " first failure " + p.counterexamples.front();
    }
  }
  return out;
}

struct Run {
  int status = -1;
  std::string output;
};

Run run_cli(const std::string& args) {
  Run r;
  const std::string cmd = std::string("'") + INVOL_CLI_PATH + "' " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.output.append(buf.data(), n);
  const int st = pclose(pipe);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

Poly P(const char* s) { return parse_poly(s); }

Outcome golden() {
  Outcome out;
  auto need = [&](bool c, const char* what) {
    if (!c) {
      out.ok = false;
      out.detail += std::string(out.detail.empty() ? "" : "; ") + what;
    }
  };
  need(jac(P("x + y^2"), P("y")) == Poly(1), "Jac(x+y^2, y) != 1");
  need(jac(P("y"), P("x")) == Poly(-1), "Jac(y, x) != -1");
  const Endo w{P("x + y"), P("x - y")};
  need(!is_generalized(w, alpha()).has_value(), "(x+y, x-y) passes the generalized alpha test");
  need(is_generalized(w, beta()).has_value(), "(x+y, x-y) fails the generalized beta test");
  Rng rng(0, 0xacceull);
  for (int n = 0; n < 20; ++n) {
    const Rat a(rng.nonzero(50)), b(rng.nonzero(50));
    const Poly l = a * Poly::x() + b * Poly::y();
    need(jac(l, apply(alpha(), l)) == Poly(a * a - b * b), "Jac(ax+by, alpha(ax+by)) != a^2-b^2");
    const Endo eps{(b / a) * Poly::y(), (a / b) * Poly::x()};
    need(is_involution(eps), "eps is not an involution");
    need(apply(eps, l) == l, "eps does not fix ax+by");
  }
  return out;
}

Outcome cli_contract() {
  struct Case {
    const char* args;
    const char* output;
    int status;
  };
  const Case cases[] = {
      {R"(jac "x+y^2" "y")", "1\n", 0},
      {R"(invert "P = x+y^2; Q = y")", "P = x - y^2; Q = y\n", 0},
      {R"(member "x" --in "x^2" "y")", "not a member\n", 1},
  };
  Outcome out;
  for (const auto& c : cases) {
    const Run r = run_cli(c.args);
    if (r.output != c.output || r.status != c.status) {
      out.ok = false;
      out.detail += std::string("invol ") + c.args + " gave exit " + std::to_string(r.status) +
                    " output '" + r.output + "'; ";
    }
  }
  return out;
}

}  // namespace

int main() {
  const CorpusParams params;
  const auto corpus = random_tame(params);

  criterion(1, "golden examples", 1, golden);
  criterion(2, "Jacobian parity rules", 30, [&] {
    return from({prop_parity_formula(), prop_parity_statements(params)});
  });
  criterion(3, "tame round trip on 200 automorphisms", 60,
            [&] { return from({prop_tame_round_trip(corpus)}); });
  criterion(4, "gamma/delta loop for every corpus entry", 60,
            [&] { return from({prop_tfae(corpus)}); });
  criterion(5, "subalgebra membership consistency", 120, [&] {
    return from({prop_membership(corpus, params.seed), prop_membership_negative()});
  });
  criterion(6, "univariate membership on 200 pairs", 10, [&] { return from({prop_wang(params)}); });
  criterion(7, "agreement of the inversion paths", 60,
            [&] { return from({prop_path_agreement(corpus, params.seed)}); });
  criterion(8, "involution classification", 30,
            [&] { return from({prop_classification(corpus, 100)}); });
  criterion(9, "command-line contract", 5, cli_contract);

  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
