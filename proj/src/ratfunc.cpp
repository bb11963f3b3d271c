#include "starforge/ratfunc.hpp"

namespace starforge {

RatFunc::RatFunc(ParamPoly num, ParamPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw Error("RatFunc: zero denominator");
    auto [n, d] = ParamPoly::aligned(num_, den_);
    num_ = std::move(n);
    den_ = std::move(d);
    reduce();
}

void RatFunc::reduce() {
    if (num_.is_zero()) {
        den_ = ParamPoly::constant(num_.vars(), Rational(1));
        return;
    }
    if (!den_.is_constant()) {
        ParamPoly g = pp_gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = pp_divexact(num_, g);
            den_ = pp_divexact(den_, g);
        }
    }
    const Rational lead = pp_leading_coeff(den_);
    if (!lead.is_one()) {
        const Rational inv = lead.inverse();
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

Rational RatFunc::constant_value() const {
    if (!is_constant()) throw Error("RatFunc: not a constant");
    return num_.constant_term() / den_.constant_term();
}

RatFunc RatFunc::operator-() const {
    RatFunc r(*this);
    r.num_ = -r.num_;
    return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw Error("RatFunc: division by zero");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

bool operator==(const RatFunc& a, const RatFunc& b) {
    // Canonical representations: cross-compare after context alignment.
    return a.num_ == b.num_ && a.den_ == b.den_;
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw Error("RatFunc: inverse of zero");
    return RatFunc(den_, num_);
}

Rational RatFunc::eval(const std::vector<Rational>& point) const {
    const Rational d = den_.eval(point);
    if (d.is_zero()) throw Error("RatFunc: pole at evaluation point");
    return num_.eval(point) / d;
}

std::string RatFunc::str() const {
    if (den_ == ParamPoly::constant(den_.vars(), Rational(1))) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

}  // namespace starforge
