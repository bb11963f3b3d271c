#pragma once

#include <string>
#include <vector>

#include "starforge/poly.hpp"

namespace starforge {

// Truncated formal power series in the deformation parameter nu with
// polynomial coefficients. The truncation order N is carried per value:
// the series is known modulo nu^{N+1}, and arithmetic on two series
// truncates to the smaller order.
class NuSeries {
public:
    NuSeries() : NuSeries(VarSet::empty(), 0) {}
    NuSeries(VarSetPtr vars, int order);
    static NuSeries from_poly(const Poly& p, int order);
    static NuSeries one(const VarSetPtr& vars, int order);

    int order() const { return order_; }
    const VarSetPtr& vars() const { return vars_; }
    const Poly& coeff(int r) const { return c_.at(static_cast<std::size_t>(r)); }
    void set_coeff(int r, const Poly& p);

    bool is_zero() const;
    // Lowest order with a nonzero coefficient, or -1 if none.
    int first_nonzero_order() const;

    friend NuSeries operator+(const NuSeries& a, const NuSeries& b);
    friend NuSeries operator-(const NuSeries& a, const NuSeries& b);
    friend NuSeries operator*(const NuSeries& a, const NuSeries& b);
    NuSeries operator-() const;
    friend bool operator==(const NuSeries& a, const NuSeries& b);
    friend bool operator!=(const NuSeries& a, const NuSeries& b) { return !(a == b); }

    NuSeries scaled(const Scalar& s) const;
    NuSeries mul_poly(const Poly& p) const;

    // Multiplication by nu^k; the result is known one order deeper per power.
    NuSeries shifted_up(int k) const;

    // Exact division by nu^k; requires the k lowest coefficients to vanish.
    // The result has truncation order N - k.
    NuSeries div_nu(int k) const;

    NuSeries truncated(int new_order) const;

    // nu -> -nu (negates odd coefficients).
    NuSeries nu_negated() const;

    // Applies a polynomial map to every coefficient.
    template <class F>
    NuSeries map_coeffs(F&& f) const {
        NuSeries r(*this);
        for (auto& p : r.c_) p = f(p);
        r.renormalize();
        return r;
    }

    std::string str() const;

private:
    void renormalize();  // re-align coefficient contexts after edits

    VarSetPtr vars_;
    int order_;
    std::vector<Poly> c_;
};

}  // namespace starforge
