#include "starforge/scalar.hpp"

namespace starforge {

Scalar Scalar::operator-() const {
    if (is_rational()) return Scalar(-std::get<Rational>(v_));
    return Scalar(-std::get<RatFunc>(v_));
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.is_rational() && b.is_rational())
        return Scalar(std::get<Rational>(a.v_) + std::get<Rational>(b.v_));
    return Scalar(a.ratfunc() + b.ratfunc());
}

Scalar operator-(const Scalar& a, const Scalar& b) {
    if (a.is_rational() && b.is_rational())
        return Scalar(std::get<Rational>(a.v_) - std::get<Rational>(b.v_));
    return Scalar(a.ratfunc() - b.ratfunc());
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.is_rational() && b.is_rational())
        return Scalar(std::get<Rational>(a.v_) * std::get<Rational>(b.v_));
    return Scalar(a.ratfunc() * b.ratfunc());
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    if (b.is_zero()) throw Error("Scalar: division by zero");
    if (a.is_rational() && b.is_rational())
        return Scalar(std::get<Rational>(a.v_) / std::get<Rational>(b.v_));
    return Scalar(a.ratfunc() / b.ratfunc());
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.is_rational() != b.is_rational()) return false;
    if (a.is_rational()) return std::get<Rational>(a.v_) == std::get<Rational>(b.v_);
    return std::get<RatFunc>(a.v_) == std::get<RatFunc>(b.v_);
}

Scalar Scalar::inverse() const {
    if (is_rational()) return Scalar(std::get<Rational>(v_).inverse());
    return Scalar(std::get<RatFunc>(v_).inverse());
}

std::string Scalar::str() const {
    return is_rational() ? std::get<Rational>(v_).str() : std::get<RatFunc>(v_).str();
}

void scalar_check_compatible(const Scalar& s, const VarSet& vars) {
    if (s.is_rational()) return;
    const auto& params = *s.params();
    if (!params.disjoint(vars)) {
        for (const auto& n : params.names())
            if (vars.contains(n))
                throw FieldMismatchError("scalar parameter '" + n +
                                         "' collides with a polynomial generator");
    }
}

}  // namespace starforge
