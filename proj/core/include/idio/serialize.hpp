#pragma once

#include <nlohmann/json.hpp>

#include "idio/coates.hpp"
#include "idio/hemimorphy.hpp"
#include "idio/poly.hpp"
#include "idio/spectral.hpp"

namespace idio {

// MPoly: [{"dX": 3, "dy": 0, "dz": 0, "coeff": "1"}, ...] in canonical term
// order, coefficients as decimal strings.
void to_json(nlohmann::json& j, const MPoly& p);
void from_json(const nlohmann::json& j, MPoly& p);

// Deck: {"k": k, "polys": [canonical strings, sorted]}.
void to_json(nlohmann::json& j, const Deck& d);
void from_json(const nlohmann::json& j, Deck& d);

void to_json(nlohmann::json& j, const TheoremVerdict& v);
void from_json(const nlohmann::json& j, TheoremVerdict& v);

// {"n", "det_diff" (decimal string), "deck_all_equal", "global_idio_equal",
//  "flags_found": [[u, v, w], ...]}
void to_json(nlohmann::json& j, const CounterexampleReport& r);
void from_json(const nlohmann::json& j, CounterexampleReport& r);

}  // namespace idio
