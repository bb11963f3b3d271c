#pragma once

#include "starforge/polynomial.hpp"

namespace starforge {

// Exact multivariate division over Q; throws Error when b does not divide a.
ParamPoly pp_divexact(const ParamPoly& a, const ParamPoly& b);

// Monic (deglex leading coefficient 1) gcd via the primitive PRS algorithm.
// pp_gcd(0, 0) = 0.
ParamPoly pp_gcd(const ParamPoly& a, const ParamPoly& b);

// Divides by the deglex leading coefficient.
ParamPoly pp_monic(const ParamPoly& a);

Rational pp_leading_coeff(const ParamPoly& a);

}  // namespace starforge
