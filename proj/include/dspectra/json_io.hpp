#pragma once

#include <json.hpp>

#include "dspectra/closed_form.hpp"
#include "dspectra/enumerate.hpp"
#include "dspectra/polynomial.hpp"
#include "dspectra/spectral.hpp"
#include "dspectra/sturm.hpp"
#include "dspectra/verify.hpp"

namespace dspectra {

using json = nlohmann::ordered_json;

// Floating-point values cross the JSON boundary rounded to six decimals,
// with negative zero normalized away.
double json_round(double v);

// Deterministic float token: fixed six-decimal notation with trailing zeros
// trimmed (at least one fractional digit kept), switching to trimmed
// scientific notation below 1e-5 so tolerances stay legible. The library
// dump is avoided because its shortest-round-trip printer is not actually
// shortest for every double, which would break byte-stable output.
std::string float_token(double v);

// Two-space pretty form of a document, every float rendered via
// float_token. This is the only JSON writer the command-line tool uses.
std::string json_text(const json& doc);

// Enum spellings used in reports.
std::string verdict_name(DsVerdict v);
std::string context_name(ForbiddenContext c);

// Exact coefficients travel as decimal strings (they routinely exceed 2^53),
// constant term first; interval endpoints as "p", "p/q", "-inf" or "+inf".
json json_of(const IntPolynomial& p);
json json_of(const Spectrum& s);
json json_of(const Interval& iv);
json json_of(const RootBracketReport& r);
json json_of(const SignReport& r);
json json_of(const Graph& g);
json json_of(const DsReport& r);
json json_of(const CensusReport& r);
json json_of(const ListCensusReport& r);
json json_of(const IngestResult& r);
json json_of(const ForbiddenReport& r);
json json_of(const TableReport& r);
json json_of(const EdgeDichotomyReport& r);
json json_of(const MultipartiteReport& r);

}  // namespace dspectra
