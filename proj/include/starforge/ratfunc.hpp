#pragma once

#include <string>

#include "starforge/parampoly_ops.hpp"
#include "starforge/polynomial.hpp"

namespace starforge {

// Rational function in named formal parameters, kept canonical: numerator
// and denominator coprime, denominator monic under the deglex order. With
// that normalization, equality is representation equality.
class RatFunc {
public:
    RatFunc() : num_(ParamPoly::zero(VarSet::empty())), den_(one(VarSet::empty())) {}
    RatFunc(long n) : RatFunc(Rational(n)) {}  // NOLINT: implicit by design
    explicit RatFunc(const Rational& r)
        : num_(ParamPoly::constant(VarSet::empty(), r)), den_(one(VarSet::empty())) {}
    explicit RatFunc(ParamPoly p) : num_(std::move(p)), den_(one(num_.vars())) {}
    RatFunc(ParamPoly num, ParamPoly den);

    const ParamPoly& num() const { return num_; }
    const ParamPoly& den() const { return den_; }
    const VarSetPtr& params() const { return num_.vars(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rational constant_value() const;

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);

    friend bool operator==(const RatFunc& a, const RatFunc& b);
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    RatFunc inverse() const;

    // Exact substitution of rational values for all parameters.
    Rational eval(const std::vector<Rational>& point) const;

    std::string str() const;

private:
    static ParamPoly one(const VarSetPtr& vars) {
        return ParamPoly::constant(vars, Rational(1));
    }
    void reduce();

    ParamPoly num_, den_;
};

}  // namespace starforge
