#pragma once

#include <json.hpp>

#include "invol/conditions.hpp"
#include "invol/harness.hpp"
#include "invol/membership.hpp"
#include "invol/tame.hpp"

namespace invol {

using Json = nlohmann::ordered_json;

// Rationals are written as "p" or "p/q", polynomials in the text grammar.
Json to_json(const Rat& r);
Json to_json(const Poly& p, VarNames names = kXY);
Json to_json(const Endo& f);
Json to_json(const Elementary& e);
Json to_json(const Factorization& f);
Json to_json(InvolutionTag tag);
Json to_json(const InvolutionClass& c);
Json to_json(const UniWitness& w);
Json to_json(const RestrictionCert& c);
Json to_json(const GeneralizedCert& c);
Json to_json(const SymmetryCert& c);
Json to_json(const CorpusEntry& e);
Json to_json(const PropertyResult& r);
Json to_json(const Report& r);

}  // namespace invol
