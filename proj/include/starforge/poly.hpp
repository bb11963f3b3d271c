#pragma once

#include "starforge/polynomial.hpp"
#include "starforge/scalar.hpp"

namespace starforge {

// The working polynomial type: sparse multivariate polynomial with Scalar
// (rational or rational-function) coefficients.
using Poly = SparsePoly<Scalar>;

// Lifts a parameter polynomial into the Scalar-coefficient world.
inline Poly poly_from_param(const ParamPoly& p) {
    Poly r(p.vars());
    for (const auto& [e, c] : p.terms()) r.add_term(e, Scalar(c));
    return r;
}

// All monomials x^e with total degree <= max_total, in deglex order.
inline std::vector<Poly> monomials_up_to(const VarSetPtr& vars, unsigned max_total) {
    std::vector<Poly> out;
    for (auto& e : exps_up_to(vars->size(), max_total))
        out.push_back(Poly::monomial(vars, std::move(e), Scalar(1)));
    return out;
}

}  // namespace starforge
