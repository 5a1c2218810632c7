#pragma once
// Stable textual and JSON forms. The pretty form of an element re-parses to
// the same element through the expression grammar; the JSON form is a list
// of {word, coeff} objects with coefficients in the canonical Laurent string
// and words in descending lexicographic order.

#include "qmat/algebra.hpp"

#include <json.hpp>

#include <string>

namespace qmat {

// Grammar-compatible rendering, e.g. "q*X[2,1]*X[1,2]" or
// "X[1,1]*X[2,2] - q*X[1,2]*X[2,1]". Zero prints as "0".
std::string to_pretty(const NCPoly& p);

// Compact rendering of a coefficient, e.g. "q - q^-1", "-3/2*q^2".
std::string pretty_laurent(const Laurent& c);

nlohmann::json poly_to_json(const NCPoly& p);
nlohmann::json word_to_json(const Algebra& alg, const Word& w);

}  // namespace qmat
