#pragma once

#include <map>
#include <vector>

#include "starforge/multidiffop.hpp"
#include "starforge/poly.hpp"

namespace starforge {

// Skewsymmetric polyvector field of degree p (a (p+1)-vector), stored as a
// full coefficient table indexed by (p+1)-tuples of directions, with
// skewsymmetry enforced whenever a component is assigned.
class PolyVector {
public:
    using Index = std::vector<unsigned>;

    PolyVector(VarSetPtr vars, int degree);

    int degree() const { return degree_; }
    const VarSetPtr& vars() const { return vars_; }
    bool is_zero() const { return comp_.empty(); }

    // Adds `value` to the (i_0, ..., i_p) component and its full
    // skewsymmetric orbit. Tuples with a repeated index must carry zero.
    void add_component(const Index& idx, const Poly& value);

    Poly component(const Index& idx) const;
    const std::map<Index, Poly>& table() const { return comp_; }

    friend PolyVector operator+(const PolyVector& a, const PolyVector& b);
    PolyVector scaled(const Scalar& s) const;
    friend bool operator==(const PolyVector& a, const PolyVector& b);
    friend bool operator!=(const PolyVector& a, const PolyVector& b) { return !(a == b); }

    // Verifies full skewsymmetry of the stored table (a structural
    // invariant; useful in tests).
    bool skewsymmetric() const;

    // For a bivector: {u, v} = sum_{i,j} P^{ij} d_i u d_j v.
    Poly poisson_bracket(const Poly& u, const Poly& v) const;

    // For a bivector: the arity-2 operator (u,v) -> sum P^{ij} d_i u d_j v.
    MultiDiffOp bracket_op() const;

    // Schouten self-bracket of a bivector; the trivector whose vanishing is
    // the Jacobi identity.
    PolyVector schouten_self() const;

private:
    VarSetPtr vars_;
    int degree_;
    std::map<Index, Poly> comp_;
};

}  // namespace starforge
