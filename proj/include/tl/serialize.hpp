#pragma once

/**
 * JSON and text forms of the core types.
 *
 * JSON schemas:
 *   LaurentPoly  [[exp, coeff], ...] ascending; coeff is a JSON integer when it
 *                fits in 64 bits, otherwise a decimal string.
 *   Scalar       {"num": LaurentPoly, "den": LaurentPoly}
 *   Matching     {"bottom": n, "top": m, "pairs": [[a, b], ...]} sorted
 *   Morphism     {"bottom": n, "top": m, "terms": [{"matching": ..., "coeff": ...}]}
 *                terms in Matching order
 *   SignSeq      [1, -1, ...]
 */

#include <nlohmann/json.hpp>

#include <string>

#include "tl/morphism.hpp"
#include "tl/sequences.hpp"

namespace tl {

nlohmann::json to_json(const LaurentPoly& p);
nlohmann::json to_json(const Scalar& s);
nlohmann::json to_json(const Matching& m);
nlohmann::json to_json(const Morphism& m);
nlohmann::json to_json(const SignSeq& e);

/// The readers throw ParseError on malformed input and re-validate every
/// invariant (planarity, canonical scalars) rather than trusting the file.
LaurentPoly laurent_from_json(const nlohmann::json& j);
Scalar scalar_from_json(const nlohmann::json& j);
Matching matching_from_json(const nlohmann::json& j);
Morphism morphism_from_json(const nlohmann::json& j);
SignSeq seq_from_json(const nlohmann::json& j);

/// `[b0-t0 b1-b2 t1-t2]`: each arc by side and left-to-right position.
std::string to_text(const Matching& m);
/// Two rows, top above bottom; through strands share a letter, arcs on one
/// side are drawn as matched parentheses.
std::string to_ascii(const Matching& m);

/// One term per line: `<scalar>  <diagram>`. With series_order > 0 each
/// coefficient is followed by its expansion up to q^series_order.
std::string to_text(const Morphism& m, int series_order = 0);
std::string to_ascii(const Morphism& m);

/// `q - q^3 + O(q^5)` style rendering of a truncated series.
std::string series_to_string(const Scalar& s, int order);

}  // namespace tl
