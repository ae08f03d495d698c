#include "invol/serialize.hpp"

namespace invol {
namespace {

Json matrix_json(const Matrix2& M) {
  return Json::array({Json::array({to_json(M[0][0]), to_json(M[0][1])}),
                      Json::array({to_json(M[1][0]), to_json(M[1][1])})});
}

// Coefficients of p(y), constant term first.
Json coefficient_list(const Poly& p) {
  Json out = Json::array();
  const int n = p.degree();
  for (int k = 0; k <= n; ++k) out.push_back(to_json(p.coefficient({0, static_cast<std::uint32_t>(k)})));
  return out;
}

std::string_view branch_name(Branch b) { return b == Branch::P ? "P" : "Q"; }

}  // namespace

Json to_json(const Rat& r) { return to_string(r); }

Json to_json(const Poly& p, VarNames names) { return render(p, names); }

Json to_json(const Endo& f) { return {{"P", render(f.P)}, {"Q", render(f.Q)}}; }

Json to_json(const Elementary& e) {
  if (const auto* af = std::get_if<Affine>(&e)) {
    return {{"kind", "affine"},
            {"matrix", matrix_json(af->M)},
            {"translation", Json::array({to_json(af->t[0]), to_json(af->t[1])})}};
  }
  const auto& tr = std::get<Triangular>(e);
  return {{"kind", "triangular"},
          {"a", to_json(tr.a)},
          {"c", to_json(tr.c)},
          {"d", to_json(tr.d)},
          {"p", coefficient_list(tr.p)}};
}

Json to_json(const Factorization& f) {
  Json factors = Json::array();
  for (const auto& e : f.factors) factors.push_back(to_json(e));
  Json trace = Json::array();
  for (auto [dp, dq] : f.degree_trace) trace.push_back(Json::array({dp, dq}));
  return {{"factors", factors}, {"degree_trace", trace}};
}

Json to_json(InvolutionTag tag) {
  switch (tag) {
    case InvolutionTag::Identity: return "Identity";
    case InvolutionTag::MinusIdentity: return "MinusIdentity";
    case InvolutionTag::AlphaConjugate: return "AlphaConjugate";
  }
  return nullptr;
}

Json to_json(const InvolutionClass& c) {
  Json out{{"class", to_json(c.tag)}};
  out["conjugator"] = c.conjugator ? to_json(*c.conjugator) : Json(nullptr);
  return out;
}

Json to_json(const UniWitness& w) {
  Json out = Json::array();
  for (const auto& c : w.h) out.push_back(to_json(c));
  return out;
}

Json to_json(const RestrictionCert& c) {
  return {{"phiP", render(c.phiP.phi, kUV)}, {"phiQ", render(c.phiQ.phi, kUV)}};
}

Json to_json(const GeneralizedCert& c) {
  return {{"a", to_json(c.a)},
          {"b", to_json(c.b)},
          {"branch", branch_name(c.branch)},
          {"H", to_json(c.h)},
          {"G", to_json(c.g)},
          {"phiP", render(c.restriction.phiP.phi, kUV)},
          {"phiQ", render(c.restriction.phiQ.phi, kUV)}};
}

Json to_json(const SymmetryCert& c) {
  std::string branch{branch_name(c.fixed)};
  branch += c.sign > 0 ? " symmetric" : " skew";
  return {{"a", to_json(c.a)},
          {"b", to_json(c.b)},
          {"branch", branch},
          {"H", to_json(c.h)},
          {"G", Json::array()},
          {"phiP", render(c.restriction.phiP.phi, kUV)},
          {"phiQ", render(c.restriction.phiQ.phi, kUV)}};
}

Json to_json(const CorpusEntry& e) {
  return {{"endo", to_json(e.endo)},
          {"ground_truth", to_json(e.ground_truth)},
          {"seed_path",
           {{"seed", e.seed_path.seed}, {"index", e.seed_path.index}, {"kinds", e.seed_path.kinds}}}};
}

Json to_json(const PropertyResult& r) {
  double total = 0, worst = 0;
  for (double s : r.case_seconds) {
    total += s;
    worst = std::max(worst, s);
  }
  Json cex = Json::array();
  for (const auto& c : r.counterexamples) cex.push_back(Json::parse(c));
  return {{"property", r.name},
          {"passed", r.passed},
          {"failed", r.failed},
          {"seconds", total},
          {"max_case_seconds", worst},
          {"counterexamples", cex}};
}

Json to_json(const Report& r) {
  Json props = Json::array();
  for (const auto& p : r.properties) props.push_back(to_json(p));
  return {{"suite", r.suite}, {"ok", r.ok()}, {"seconds", r.seconds}, {"properties", props}};
}

}  // namespace invol
