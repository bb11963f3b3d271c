#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "starforge/starproduct.hpp"

namespace starforge {
namespace fedosov {

// One term of a Weyl-algebra-valued form on a symplectic coordinate patch:
//   coeff * x^{xe} y^{ye} nu^{k} dx^{j_1} ^ ... ^ dx^{j_q}
// with the wedge factors stored as a bitmask over strictly increasing
// indices. Fedosov degree of the term is |ye| + 2k.
struct WTermKey {
    Exp x;
    Exp y;
    unsigned nu = 0;
    std::uint32_t dx = 0;

    friend bool operator<(const WTermKey& a, const WTermKey& b) {
        if (a.x != b.x) return a.x < b.x;
        if (a.y != b.y) return a.y < b.y;
        if (a.nu != b.nu) return a.nu < b.nu;
        return a.dx < b.dx;
    }
    friend bool operator==(const WTermKey& a, const WTermKey& b) {
        return a.x == b.x && a.y == b.y && a.nu == b.nu && a.dx == b.dx;
    }
};

class WeylFormElement {
public:
    explicit WeylFormElement(std::size_t dim = 0) : dim_(dim) {}

    static WeylFormElement one(std::size_t dim);

    std::size_t dim() const { return dim_; }
    const std::map<WTermKey, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(WTermKey key, const Rational& c);
    // Adds a term given an arbitrarily ordered wedge index list; the sign of
    // sorting the factors is absorbed into the coefficient.
    void add_form_term(Exp x, Exp y, unsigned nu, const std::vector<unsigned>& wedge,
                       const Rational& c);

    friend WeylFormElement operator+(const WeylFormElement& a, const WeylFormElement& b);
    friend WeylFormElement operator-(const WeylFormElement& a, const WeylFormElement& b);
    WeylFormElement operator-() const { return scaled(Rational(-1)); }
    WeylFormElement scaled(const Rational& s) const;
    friend bool operator==(const WeylFormElement& a, const WeylFormElement& b);
    friend bool operator!=(const WeylFormElement& a, const WeylFormElement& b) { return !(a == b); }

    WeylFormElement mul_nu(int k) const;
    // Exact division by nu^k; throws NotDivisibleError when a term has a
    // smaller nu-power (a broken grading invariant upstream).
    WeylFormElement div_nu(int k) const;

    // Terms of Fedosov degree exactly d (|y| + 2 nu).
    WeylFormElement fdeg_component(unsigned d) const;
    // Terms of Fedosov degree <= d.
    WeylFormElement fdeg_truncated(unsigned d) const;
    unsigned max_fdeg() const;

    // Terms of form degree exactly q.
    WeylFormElement form_component(unsigned q) const;
    unsigned max_form_degree() const;

    std::string str(const VarSetPtr& base) const;

private:
    std::size_t dim_;
    std::map<WTermKey, Rational> terms_;
};

// Fedosov input data on the standard symplectic patch R^{2n}: the constant
// omega in block form (omega_{i, n+i} = 1), a polynomial symplectic
// connection given by its Christoffel symbols, and a formal series of
// closed 2-forms sum_{k>=1} nu^k omega_k.
class FedosovInput {
public:
    // gamma entries: ((k, i, j), poly) for Gamma^k_{ij}, symmetric in (i, j);
    // omega entries: ((k, i, j), poly) for the dx^i ^ dx^j component of
    // omega_k, i < j. All polynomials live on the base context.
    FedosovInput(std::size_t n, VarSetPtr base,
                 const std::map<std::array<unsigned, 3>, ParamPoly>& gamma,
                 const std::map<std::array<unsigned, 3>, ParamPoly>& omega);

    static VarSetPtr standard_base(std::size_t n);
    static FedosovInput flat(std::size_t n);

    std::size_t n() const { return n_; }
    std::size_t dim() const { return 2 * n_; }
    const VarSetPtr& base() const { return base_; }
    std::size_t coord(std::size_t i) const { return coord_[i]; }  // var index of x^{i+1}
    // Exponent translation from the sorted base context to coordinate order.
    Exp remap_exp(const Exp& xe) const;

    Rational omega_lower(std::size_t i, std::size_t j) const;   // omega_{ij}
    Rational poisson_upper(std::size_t i, std::size_t j) const; // Lambda^{ij}

    const ParamPoly& gamma(std::size_t k, std::size_t i, std::size_t j) const;
    bool flat_connection() const { return gamma_.empty(); }

    // Connection form (1/2) omega_{ki} Gamma^k_{rj} y^i y^j dx^r.
    const WeylFormElement& connection_form() const { return conn_; }
    // Curvature (1/4) omega_{ki} R^k_{jlm} y^i y^j dx^l ^ dx^m.
    const WeylFormElement& curvature() const { return curv_; }
    // The series Omega-tilde as a single element (nu-powers carried per term).
    const WeylFormElement& omega_series() const { return omega_; }

    PolyVector base_poisson() const;

private:
    std::size_t n_;
    VarSetPtr base_;
    std::vector<std::size_t> coord_;
    std::map<std::array<unsigned, 3>, ParamPoly> gamma_;
    WeylFormElement conn_, curv_, omega_;
};

// Fiber product: Moyal in the y's with the constant Poisson structure of
// omega, wedge on the dx factors.
WeylFormElement fiber_star(const WeylFormElement& a, const WeylFormElement& b,
                           const FedosovInput& F);

// Graded commutator [a, b] = a * b - (-1)^{q_a q_b} b * a, split per form
// degree of the operands.
WeylFormElement graded_commutator(const WeylFormElement& a, const WeylFormElement& b,
                                  const FedosovInput& F);

// delta a = dx^k ^ d a / d y^k.
WeylFormElement delta_op(const WeylFormElement& a);

// delta-inverse: (1/(p+q)) y^k i(d/dx^k) a on homogeneous (p,q)-components,
// zero on p + q = 0.
WeylFormElement delta_inv(const WeylFormElement& a);

// Covariant derivative of the connection: da - (1/nu)[conn, a].
WeylFormElement covariant_partial(const WeylFormElement& a, const FedosovInput& F);

// Solves delta r = -R + del r - (1/nu) r^2 + Omega degree by degree up to
// Fedosov degree `degree_bound`.
WeylFormElement build_r(const FedosovInput& F, unsigned degree_bound);

// The defect delta r + R - del r + (1/nu) r^2 - Omega, truncated to the
// degrees the given r determines (degree_bound - 1).
WeylFormElement r_residual(const FedosovInput& F, const WeylFormElement& r,
                           unsigned degree_bound);

// Flat lift: the unique D-flat section with (Q u)_{00} = u, built to Fedosov
// degree `degree_bound`.
WeylFormElement flat_lift(const FedosovInput& F, const WeylFormElement& r, const Poly& u,
                          unsigned degree_bound);

// D a = del a - delta a - (1/nu)[r, a]; zero through degree_bound - 2 on a
// lift built to degree_bound.
WeylFormElement flatness_defect(const FedosovInput& F, const WeylFormElement& r,
                                const WeylFormElement& a, unsigned check_bound);

// Holds the solved recursion for a fixed nu-order budget, so sweeps reuse
// one r. The degree budget for the star product mod nu^{order+1} is
// 2 order + 3 for r and 2 order + 1 for the lifts.
class Quantizer {
public:
    Quantizer(FedosovInput F, int order);

    const FedosovInput& input() const { return F_; }
    int order() const { return order_; }
    const WeylFormElement& r() const { return r_; }

    WeylFormElement lift(const Poly& u) const;
    NuSeries star(const Poly& u, const Poly& v, int order) const;
    StarOracle oracle() const;

private:
    FedosovInput F_;
    int order_;
    unsigned lift_bound_;
    WeylFormElement r_;
};

// u *_{nabla,Omega} v = (Q(u) *_M Q(v))_{00}, truncated at nu^order.
NuSeries star(const FedosovInput& F, const Poly& u, const Poly& v, int order);

// Conversions between base polynomials / series and 0-form, y-free elements.
WeylFormElement from_base_poly(const Poly& u, const FedosovInput& F);
NuSeries center_part(const WeylFormElement& a, const FedosovInput& F, int order);

}  // namespace fedosov
}  // namespace starforge
