// JSON encoding of every value that crosses the command line. Rationals are
// written as exact "p/q" strings; scalar fields also carry a decimal
// rendering that is never read back.
#pragma once

#include <string>

#include <json.hpp>

#include "rootline/graphs.hpp"
#include "rootline/interlacing.hpp"
#include "rootline/lowerbounds.hpp"
#include "rootline/maxroot.hpp"

namespace rootline {

using Json = nlohmann::ordered_json;

/// {"exact": "p/q", "decimal": "..."}
Json rational_json(const Rational& x);
/// Accepts "p/q", an integer, or an object with an "exact" member.
Rational rational_from_json(const Json& j);

Json rationals_json(const std::vector<Rational>& xs);
std::vector<Rational> rationals_from_json(const Json& j);

/// {"coeffs": [...]} in ascending powers.
Json polynomial_json(const ExactPolynomial& p);
ExactPolynomial polynomial_from_json(const Json& j);

Json interval_json(const RootInterval& r);

/// {"n", "e": [...]}, or {"roots": [...], "k"}; "k" truncates either form.
SymmetricProfile profile_from_json(const Json& j);
Json profile_json(const SymmetricProfile& prof);

Json approx_json(const ApproxResult& r);

/// {"n", "edges": [[u, v], ...]} or {"catalog": name}.
Graph graph_from_json(const Json& j);
Json graph_json(const Graph& g);

Json pair_json(const LowerBoundPair& pair);
/// Reads p, q, k, ratio_lower and provenance; anything else is ignored.
LowerBoundPair pair_from_json(const Json& j);
Json noise_certificate_json(const NoiseCertificate& c);
Json pair_report_json(const PairReport& r);

Json ks_json(const KSInstance& inst);
KSInstance ks_from_json(const Json& j);
Json sr_json(const SRInstance& inst);
SRInstance sr_from_json(const Json& j);

Json rounding_json(const RoundingResult& r);
Json invariance_json(const InvarianceReport& r);
Json signing_search_json(const SigningSearchResult& r);

Json read_json_file(const std::string& path);
/// Pretty-printed with a trailing newline.
std::string dump(const Json& j);

}  // namespace rootline
