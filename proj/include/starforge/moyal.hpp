#pragma once

#include <map>
#include <vector>

#include "starforge/starproduct.hpp"

namespace starforge {
namespace moyal {

// Constant-coefficient Poisson tensor on R^m.
struct ConstantPoisson {
    VarSetPtr vars;
    std::vector<std::vector<Rational>> matrix;  // skew m x m

    ConstantPoisson(VarSetPtr v, std::vector<std::vector<Rational>> m);

    std::size_t dim() const { return vars->size(); }
    PolyVector bivector() const;
};

// Phase-space context q^1..q^n, p_1..p_n with the standard bracket
// {q^i, p_i} = 1 (variable names "q1".."qn", "p1".."pn").
struct CanonicalContext {
    explicit CanonicalContext(std::size_t n);

    std::size_t n;
    VarSetPtr phase;   // all 2n variables
    VarSetPtr config;  // the q's only

    std::size_t q_phase(std::size_t i) const;  // index of q^{i+1} in phase
    std::size_t p_phase(std::size_t i) const;  // index of p_{i+1} in phase
    std::size_t q_config(std::size_t i) const;

    ConstantPoisson standard_poisson() const;
};

// (u *_M v) = exp((nu/2) P^{rs} d_{x^r} (x) d_{y^s}) (u(x) v(y)) |_{x=y};
// exact, terminating for polynomials, truncated at `order`.
NuSeries product(const Poly& u, const Poly& v, const ConstantPoisson& P, int order);

StarOracle oracle(const ConstantPoisson& P);

// Explicit cochains C_r = (1/(2^r r!)) P^{i1 j1}...P^{ir jr} d_I (x) d_J.
StarProduct star_product(const ConstantPoisson& P, int order);

// Differential operator on configuration space in normal order: every
// multiplication coefficient stands left of all derivatives. Coefficients
// are nu-series of polynomials in the q's; the correspondence nu = i hbar
// keeps all arithmetic rational.
class WeylOperator {
public:
    WeylOperator(const CanonicalContext& ctx, int nu_order);

    static WeylOperator identity(const CanonicalContext& ctx, int nu_order);
    static WeylOperator mult_q(const CanonicalContext& ctx, std::size_t i, int nu_order);
    // P_i = -i hbar d/dq^i = -nu d/dq^i.
    static WeylOperator momentum(const CanonicalContext& ctx, std::size_t i, int nu_order);

    const std::map<Exp, NuSeries>& terms() const { return terms_; }
    int nu_order() const { return nu_order_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(Exp deriv, const NuSeries& coeff);

    WeylOperator compose(const WeylOperator& other) const;
    friend WeylOperator operator+(const WeylOperator& a, const WeylOperator& b);
    friend WeylOperator operator-(const WeylOperator& a, const WeylOperator& b);
    WeylOperator scaled(const Scalar& s) const;
    friend bool operator==(const WeylOperator& a, const WeylOperator& b);
    friend bool operator!=(const WeylOperator& a, const WeylOperator& b) { return !(a == b); }

private:
    const CanonicalContext* ctx_;
    int nu_order_;
    std::map<Exp, NuSeries> terms_;  // derivative multi-index (over config) -> coefficient
};

// Totally symmetrized quantization of a phase-space polynomial: q^i goes to
// multiplication, p_i to -nu d_{q^i}, monomials to the average over all
// orderings of the corresponding operator word.
WeylOperator quantize(const Poly& f, const CanonicalContext& ctx, int nu_order);

// nu-linear extension to series.
WeylOperator quantize(const NuSeries& f, const CanonicalContext& ctx);

// Inverse of `quantize` on normal-ordered operators; throws when the
// operator is not in the image (negative nu-order would be required).
NuSeries dequantize(const WeylOperator& W, const CanonicalContext& ctx);

// Eq-of-definition check of the Weyl bridge: de-quantized operator
// composition equals the Moyal product with its nu = i hbar bookkeeping.
bool compose_check(const Poly& f, const Poly& g, const CanonicalContext& ctx, int order);

}  // namespace moyal
}  // namespace starforge
