#pragma once

#include "pfpos/algebraic.hpp"

#include <json.hpp>

namespace pfpos {

/// Exact rationals as "p/q" strings; irrational numbers as their defining
/// polynomial (ascending coefficients) and isolating interval.
nlohmann::json to_json(const RealAlgebraic& a);
nlohmann::json to_json(const UniPoly& p);

}  // namespace pfpos
