// invol: command-line front end to the library.
//
// Exit status: 0 success, 1 mathematical negative, 2 usage error,
// 3 internal error, 4 JCCandidate.

#include <CLI11.hpp>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "invol/conditions.hpp"
#include "invol/harness.hpp"
#include "invol/membership.hpp"
#include "invol/serialize.hpp"
#include "invol/tame.hpp"

using namespace invol;

namespace {

enum Exit { kOk = 0, kNegative = 1, kUsage = 2, kInternal = 3, kJcCandidate = 4 };

bool g_json = false;

int exit_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::Syntax:
    case ErrorCode::ZeroPolynomial:
    case ErrorCode::InvalidArgument:
    case ErrorCode::UnknownSuite: return kUsage;
    case ErrorCode::NotInvolution:
    case ErrorCode::NotIntertwining:
    case ErrorCode::NotAnAutomorphism:
    case ErrorCode::NotConjugateToAlpha:
    case ErrorCode::NotInImage:
    case ErrorCode::JacobianNotUnit:
    case ErrorCode::HypothesisFailed:
    case ErrorCode::SymmetryHypothesisFailed: return kNegative;
    case ErrorCode::JCCandidate: return kJcCandidate;
    case ErrorCode::DegreeCapExceeded:
    case ErrorCode::CertificateFailure:
    case ErrorCode::AssertionFailure: return kInternal;
  }
  return kInternal;
}

// Prints `text` or `json` depending on --json.
void emit(const std::string& text, const Json& json) {
  if (g_json)
    std::cout << json.dump() << '\n';
  else
    std::cout << text << '\n';
}

int negative(const std::string& text, const Json& json) {
  emit(text, json);
  return kNegative;
}

std::string render_univariate(const UniWitness& w) {
  return render(univariate(w.h, Var::X), VarNames{"t", "s"});
}

std::string factor_line(const Elementary& e) {
  return std::string(is_affine(e) ? "affine      " : "triangular  ") + render(to_endo(e));
}

Endo parse_eps(const std::string& text) { return parse_endo(text); }

struct Args {
  std::string a, b, c, d;
  std::vector<std::string> in;
  std::string eps = "alpha";
  std::string suite;
  CorpusParams params;
};

int cmd_jac(const Args& o) {
  Poly j = jac(parse_poly(o.a), parse_poly(o.b));
  emit(render(j), {{"jacobian", render(j)}});
  return kOk;
}

int cmd_parse(const Args& o) {
  if (o.a.find('=') != std::string::npos || o.a == "alpha" || o.a == "beta" || o.a == "id") {
    Endo f = parse_endo(o.a);
    emit(render(f), to_json(f));
  } else {
    Poly p = parse_poly(o.a);
    emit(render(p), {{"poly", render(p)}});
  }
  return kOk;
}

int cmd_compose(const Args& o) {
  Endo f = compose(parse_endo(o.a), parse_endo(o.b));
  emit(render(f), to_json(f));
  return kOk;
}

int cmd_apply(const Args& o) {
  Poly p = apply(parse_endo(o.a), parse_poly(o.b));
  emit(render(p), {{"result", render(p)}});
  return kOk;
}

int cmd_invert(const Args& o) {
  Endo inv = invert(parse_endo(o.a));
  emit(render(inv), to_json(inv));
  return kOk;
}

int cmd_decompose(const Args& o) {
  Factorization fac = decompose(parse_endo(o.a));
  std::string text;
  for (const auto& e : fac.factors) text += (text.empty() ? "" : "\n") + factor_line(e);
  emit(text, to_json(fac));
  return kOk;
}

int cmd_classify(const Args& o) {
  InvolutionClass cls = classify_involution(parse_endo(o.a));
  std::string text = to_json(cls.tag).get<std::string>();
  if (cls.conjugator) text += "\nconjugator: " + render(*cls.conjugator);
  emit(text, to_json(cls));
  return kOk;
}

int cmd_conjugate(const Args& o) {
  Endo g = conjugate_to_alpha(parse_endo(o.a));
  emit(render(g), to_json(g));
  return kOk;
}

int cmd_member(const Args& o) {
  if (o.in.size() != 2) throw Error(ErrorCode::InvalidArgument, "--in takes exactly two polynomials P Q");
  auto w = in_subalgebra(parse_poly(o.a), parse_poly(o.in[0]), parse_poly(o.in[1]));
  if (!w) return negative("not a member", {{"member", false}});
  const std::string phi = render(w->phi, kUV);
  emit("phi = " + phi, {{"member", true}, {"phi", phi}});
  return kOk;
}

int cmd_wang(const Args& o) {
  auto w = wang_membership(parse_poly(o.a), parse_poly(o.b));
  if (!w) return negative("not a member", {{"member", false}});
  emit("H(t) = " + render_univariate(*w), {{"member", true}, {"H", to_json(*w)}});
  return kOk;
}

int cmd_sigma0(const Args& o) {
  Poly p = sigma0_apply(parse_endo(o.a), parse_poly(o.b));
  emit(render(p), {{"result", render(p)}});
  return kOk;
}

int check_alpha_endo(const Args& o) {
  const bool yes = intertwines(parse_endo(o.a), alpha(), alpha());
  emit(yes ? "alpha-endomorphism" : "not an alpha-endomorphism", {{"alpha_endo", yes}});
  return yes ? kOk : kNegative;
}

int check_gamma_delta(const Args& o) {
  Endo f = parse_endo(o.a);
  auto pair = find_gamma_delta(f);
  if (!pair) return negative("no gamma, delta found", {{"found", false}});
  AlphaReduction red = reduce_to_alpha_endo(f, *pair);
  emit("gamma: " + render(pair->gamma) + "\ndelta: " + render(pair->delta) +
           "\ncore: " + render(red.core),
       {{"found", true},
        {"gamma", to_json(pair->gamma)},
        {"delta", to_json(pair->delta)},
        {"g", to_json(red.g)},
        {"h", to_json(red.h)},
        {"core", to_json(red.core)}});
  return kOk;
}

int check_generalized(const Args& o) {
  auto branch = is_generalized(parse_endo(o.a), parse_eps(o.eps));
  if (!branch) return negative("not generalized", {{"generalized", false}});
  const std::string b = *branch == Branch::P ? "P" : "Q";
  emit("generalized (" + b + "-branch)", {{"generalized", true}, {"branch", b}});
  return kOk;
}

int check_restriction_cmd(const Args& o) {
  auto cert = check_restriction(parse_endo(o.a), parse_eps(o.eps));
  if (!cert) return negative("restriction fails", {{"restricts", false}});
  Json j = to_json(*cert);
  emit("phiP = " + j["phiP"].get<std::string>() + "\nphiQ = " + j["phiQ"].get<std::string>(),
       {{"restricts", true}, {"phiP", j["phiP"]}, {"phiQ", j["phiQ"]}});
  return kOk;
}

int check_extension_cmd(const Args& o) {
  auto sigma = check_extension(parse_endo(o.a));
  if (!sigma) return negative("no extension", {{"extends", false}});
  emit(render(*sigma), {{"extends", true}, {"sigma", to_json(*sigma)}});
  return kOk;
}

int check_symmetry(const Args& o) {
  Endo f = parse_endo(o.a);
  Endo eps = parse_eps(o.eps);
  require_involution(eps, "eps");
  const Poly ep = apply(eps, f.P), eq = apply(eps, f.Q);
  std::string found;
  if (ep == f.P) found = "P symmetric";
  else if (ep == -f.P) found = "P skew";
  else if (eq == f.Q) found = "Q symmetric";
  else if (eq == -f.Q) found = "Q skew";
  if (found.empty()) return negative("no symmetry", {{"symmetry", nullptr}});
  emit(found, {{"symmetry", found}});
  return kOk;
}

int via_generalized(const Args& o) {
  Endo f = parse_endo(o.a);
  auto out = invert_via_generalized(f, parse_eps(o.eps));
  Json cert = to_json(out.cert);
  emit(render(out.inverse) + "\ncertificate: " + cert.dump(),
       {{"inverse", to_json(out.inverse)}, {"certificate", cert}});
  return kOk;
}

int via_symmetry(const Args& o) {
  Endo f = parse_endo(o.a);
  auto out = invert_via_symmetry(f, parse_eps(o.eps));
  Json cert = to_json(out.cert);
  emit(render(out.inverse) + "\ncertificate: " + cert.dump(),
       {{"inverse", to_json(out.inverse)}, {"certificate", cert}});
  return kOk;
}

int via_sk(const Args& o) {
  auto out = invert_via_sk(parse_endo(o.a), parse_poly(o.b), parse_poly(o.c));
  emit(render(out.inverse) + "\ng: " + render(out.g),
       {{"inverse", to_json(out.inverse)}, {"g", to_json(out.g)}});
  return kOk;
}

int cmd_corpus(const Args& o) {
  auto corpus = random_tame(o.params);
  if (g_json) {
    Json j = Json::array();
    for (const auto& e : corpus) j.push_back(to_json(e));
    std::cout << j.dump() << '\n';
  } else {
    for (const auto& e : corpus) std::cout << render(e.endo) << '\n';
  }
  return kOk;
}

int cmd_suite(const Args& o) {
  Report r = run_suite(o.suite, o.params);
  if (g_json) {
    std::cout << to_json(r).dump() << '\n';
  } else {
    for (const auto& p : r.properties) {
      std::cout << (p.ok() ? "PASS " : "FAIL ") << p.name << "  (" << p.passed << " passed, "
                << p.failed << " failed)\n";
      for (const auto& c : p.counterexamples) std::cout << "  counterexample: " << c << '\n';
    }
    std::cout << (r.ok() ? "suite " + r.suite + " passed" : "suite " + r.suite + " FAILED") << " in "
              << r.seconds << " s\n";
  }
  return r.ok() ? kOk : kInternal;
}

void add_params(CLI::App* cmd, CorpusParams& p) {
  cmd->add_option("--count", p.count, "number of entries")->capture_default_str();
  cmd->add_option("--max-factors", p.max_factors, "factors per word")->capture_default_str();
  cmd->add_option("--max-tri-degree", p.max_tri_degree, "triangular degree bound")->capture_default_str();
  cmd->add_option("--height", p.coeff_height, "coefficient height")->capture_default_str();
  cmd->add_option("--seed", p.seed, "64-bit seed")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polynomial automorphisms and involutions of Q[x,y]"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", g_json, "print JSON instead of text");

  Args o;
  std::function<int(const Args&)> action;
  auto command = [&](const char* name, const char* help, int (*fn)(const Args&)) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->callback([&action, fn] { action = fn; });
    return sub;
  };

  auto* c = command("jac", "Jacobian determinant of two polynomials", cmd_jac);
  c->add_option("P", o.a)->required();
  c->add_option("Q", o.b)->required();

  c = command("parse", "parse and re-render a polynomial or endomorphism", cmd_parse);
  c->add_option("text", o.a)->required();

  c = command("compose", "compose(F, G): x -> F(G(x))", cmd_compose);
  c->add_option("F", o.a)->required();
  c->add_option("G", o.b)->required();

  c = command("apply", "F(p)", cmd_apply);
  c->add_option("F", o.a)->required();
  c->add_option("p", o.b)->required();

  c = command("invert", "inverse of an automorphism", cmd_invert);
  c->add_option("F", o.a)->required();

  c = command("decompose", "tame factorization", cmd_decompose);
  c->add_option("F", o.a)->required();

  c = command("classify-involution", "conjugacy class of an involution", cmd_classify);
  c->add_option("gamma", o.a)->required();

  c = command("conjugate-to-alpha", "g with gamma = g^-1 alpha g", cmd_conjugate);
  c->add_option("gamma", o.a)->required();

  c = command("member", "decide R in K[P, Q]", cmd_member);
  c->add_option("R", o.a)->required();
  c->add_option("--in", o.in, "generators P Q")->required()->expected(2);

  c = command("wang", "decide R in K[A] by leading-form peeling", cmd_wang);
  c->add_option("A", o.a)->required();
  c->add_option("R", o.b)->required();

  c = command("sigma0", "exchange involution of K[P, Q] applied to R", cmd_sigma0);
  c->add_option("F", o.a)->required();
  c->add_option("R", o.b)->required();

  CLI::App* check = app.add_subcommand("check", "hypothesis checks");
  check->require_subcommand(1);
  auto subcheck = [&](CLI::App* parent, const char* name, const char* help, int (*fn)(const Args&),
                      bool with_eps) {
    CLI::App* sub = parent->add_subcommand(name, help);
    sub->callback([&action, fn] { action = fn; });
    sub->add_option("F", o.a)->required();
    if (with_eps) sub->add_option("--eps", o.eps, "involution eps")->capture_default_str();
    return sub;
  };
  subcheck(check, "alpha-endo", "F alpha == alpha F", check_alpha_endo, false);
  subcheck(check, "gamma-delta", "find gamma, delta and the alpha-endomorphism core", check_gamma_delta,
           false);
  subcheck(check, "generalized", "generalized eps-endomorphism test", check_generalized, true);
  subcheck(check, "restriction", "eps(P), eps(Q) in K[P, Q]", check_restriction_cmd, true);
  subcheck(check, "extension", "involution exchanging P and Q", check_extension_cmd, false);
  subcheck(check, "symmetry", "P or Q fixed by eps up to sign", check_symmetry, true);

  CLI::App* via = app.add_subcommand("invert-via", "certificate-producing inversion");
  via->require_subcommand(1);
  subcheck(via, "generalized", "generalized eps-endomorphism route", via_generalized, true);
  subcheck(via, "symmetry", "symmetric or skew image route", via_symmetry, true);
  auto* sk = subcheck(via, "sk", "symmetric s and skew k in the image", via_sk, false);
  sk->add_option("s", o.b)->required();
  sk->add_option("k", o.c)->required();

  c = command("corpus", "random tame automorphisms", cmd_corpus);
  add_params(c, o.params);

  c = command("suite", "run a property suite", cmd_suite);
  c->add_option("name", o.suite, "poly, parity, tame, membership, tfae, conditions or all")->required();
  add_params(c, o.params);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    return action(o);
  } catch (const SyntaxError& e) {
    std::cerr << "syntax error: " << e.what() << '\n';
    return kUsage;
  } catch (const DecompositionStall& e) {
    const int rc = exit_for(e.code());
    if (g_json)
      std::cout << Json{{"error", to_string(e.code())}, {"input", to_json(e.input())},
                        {"stalled", to_json(e.stalled())}}.dump()
                << '\n';
    else
      std::cout << e.what() << '\n';
    return rc;
  } catch (const Error& e) {
    const int rc = exit_for(e.code());
    if (rc == kNegative) {
      emit(e.what(), {{"error", to_string(e.code())}, {"message", e.what()}});
    } else {
      std::cerr << to_string(e.code()) << ": " << e.what() << '\n';
    }
    return rc;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}
