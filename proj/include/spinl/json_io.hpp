#pragma once

#include <string>

#include "json.hpp"
#include "spinl/lseries.hpp"
#include "spinl/restriction.hpp"

namespace spinl {

using Json = nlohmann::json;

// Every parser takes the JSON pointer of its input for schema errors.
Json rational_json(const Rational& q);
Rational rational_from_json(const Json& j, const std::string& ptr);

// Rational values serialize as "p/q"; others as {"n": conductor, "coeffs": [...]}.
Json cyclo_json(const CycloValue& v);
CycloValue cyclo_from_json(const Json& j, const std::string& ptr);

// {"c": [c1, c2, c3], "a": [a1, a2, a3]} with each a_i in order-basis coordinates.
Json herm_json(const QuatAlgebra& alg, const HermQ& h);
HermQ herm_from_json(const QuatAlgebra& alg, const Json& j, const std::string& ptr);

Json matrix_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, const std::string& ptr);
// Parses siegel_key() back into a matrix.
Matrix matrix_from_key(const std::string& key, const std::string& ptr);

// Object keyed by siegel_key(t).
Json siegel_expansion_json(const SiegelExpansion& e);
SiegelExpansion siegel_expansion_from_json(const Json& j);

// List of {"h": herm, "a": value}.
HermExpansion herm_expansion_from_json(const QuatAlgebra& alg, const Json& j);

// List of {"t": matrix, "a": "p/q"}, or {"default": "p/q", "entries": [...]}.
CoeffOracle oracle_from_json(const Json& j);

// Object keyed by prime: {"2": ["b0", "b1", "b2", "b3"], ...}.
std::map<unsigned long, SatakeParams> satake_from_json(const Json& j);

// Canonical text: sorted keys, two-space indent, trailing newline.
std::string dump_canonical(const Json& j);

}  // namespace spinl
