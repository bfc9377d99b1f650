#pragma once

#include "pfpos/algebraic.hpp"

namespace pfpos {

/// num(a) / den(a) as an exact real algebraic number. Throws
/// std::domain_error when den(a) = 0.
RealAlgebraic algebraic_image(const RealAlgebraic& a, const UniPoly& num, const UniPoly& den);

/// Sign of a real algebraic number.
int sign(const RealAlgebraic& a);
RealAlgebraic abs(const RealAlgebraic& a);

}  // namespace pfpos
