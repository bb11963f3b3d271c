#pragma once

#include <string>
#include <variant>

#include "starforge/ratfunc.hpp"

namespace starforge {

// Coefficient of the working scalar field: an exact rational, or a rational
// function in named formal parameters when the field has been extended.
// Constant rational functions are always demoted back to plain rationals, so
// the representation is canonical and equality is structural.
class Scalar {
public:
    Scalar() : v_(Rational(0)) {}
    Scalar(long n) : v_(Rational(n)) {}       // NOLINT: implicit by design
    Scalar(Rational r) : v_(std::move(r)) {}  // NOLINT: implicit by design
    Scalar(RatFunc f) {                       // NOLINT: implicit by design
        if (f.is_constant())
            v_ = f.constant_value();
        else
            v_ = std::move(f);
    }

    bool is_rational() const { return std::holds_alternative<Rational>(v_); }
    bool is_zero() const {
        return is_rational() ? std::get<Rational>(v_).is_zero() : false;
    }

    const Rational& rational() const {
        if (!is_rational()) throw Error("Scalar: not a plain rational");
        return std::get<Rational>(v_);
    }

    // View as a rational function (promoting plain rationals).
    RatFunc ratfunc() const {
        return is_rational() ? RatFunc(std::get<Rational>(v_)) : std::get<RatFunc>(v_);
    }

    // Parameter context, or the empty context for plain rationals.
    VarSetPtr params() const {
        return is_rational() ? VarSet::empty() : std::get<RatFunc>(v_).params();
    }

    Scalar operator-() const;
    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);

    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    Scalar inverse() const;

    std::string str() const;

private:
    std::variant<Rational, RatFunc> v_;
};

// Rejects scalars whose formal parameters collide with polynomial generators.
void scalar_check_compatible(const Scalar& s, const VarSet& vars);

}  // namespace starforge
