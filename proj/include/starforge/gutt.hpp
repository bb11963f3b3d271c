#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "starforge/starproduct.hpp"

namespace starforge {
namespace gutt {

// Structure constants of a finite-dimensional Lie algebra over Q, validated
// (skewsymmetry and Jacobi) at construction.
class LieAlgebraData {
public:
    // brackets: entries (a, b, c, coeff) meaning [e_a, e_b] = sum_c coeff e_c,
    // zero-based indices; the (b, a) entries are filled in by skewsymmetry.
    LieAlgebraData(std::size_t dim,
                   const std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Rational>>& brackets);

    static LieAlgebraData abelian(std::size_t dim);
    static LieAlgebraData heisenberg3();  // [e1,e2] = e3
    static LieAlgebraData so3();          // [e_a,e_b] = eps_abc e_c
    static LieAlgebraData affine2();      // [e1,e2] = e2 (non-unimodular)

    std::size_t dim() const { return dim_; }
    const Rational& c(std::size_t a, std::size_t b, std::size_t cc) const {
        return C_[a][b][cc];
    }
    // Modular form Delta_a = sum_b C^b_{ab}; zero iff unimodular.
    const Rational& modular(std::size_t a) const { return modular_[a]; }

private:
    std::size_t dim_;
    std::vector<std::vector<std::vector<Rational>>> C_;
    std::vector<Rational> modular_;
};

// nu-truncated scalar series: the coefficient ring of enveloping-algebra
// elements.
struct CoeffSeries {
    int order = 0;
    std::vector<Scalar> c;  // size order + 1

    explicit CoeffSeries(int ord) : order(ord), c(static_cast<std::size_t>(ord) + 1, Scalar(0)) {}
    static CoeffSeries unit(int ord) {
        CoeffSeries s(ord);
        s.c[0] = Scalar(1);
        return s;
    }

    bool is_zero() const;
    CoeffSeries operator-() const;
    friend CoeffSeries operator+(const CoeffSeries& a, const CoeffSeries& b);
    friend CoeffSeries operator-(const CoeffSeries& a, const CoeffSeries& b);
    friend CoeffSeries operator*(const CoeffSeries& a, const CoeffSeries& b);
    CoeffSeries scaled(const Scalar& s) const;
    CoeffSeries shifted_up(int k) const;  // multiply by nu^k, same order
    CoeffSeries truncated(int new_order) const;
    friend bool operator==(const CoeffSeries& a, const CoeffSeries& b);
};

// Normal-ordered word in the basis symbols (nondecreasing index sequence).
using Word = std::vector<std::uint8_t>;

struct WordLess {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

// Element of the universal enveloping algebra with nu-series coefficients;
// every stored word is normal-ordered.
class UEAElement {
public:
    UEAElement(const LieAlgebraData* L, int order, bool nu_weighted)
        : lie_(L), order_(order), nu_weighted_(nu_weighted) {}

    static UEAElement unit(const LieAlgebraData& L, int order, bool nu_weighted);

    const std::map<Word, CoeffSeries, WordLess>& terms() const { return terms_; }
    int order() const { return order_; }
    bool is_zero() const { return terms_.empty(); }
    bool nu_weighted() const { return nu_weighted_; }

    // Adds coeff * w, normal-ordering w first.
    void add_word(const Word& w, const CoeffSeries& coeff);

    friend UEAElement operator+(const UEAElement& a, const UEAElement& b);
    friend UEAElement operator-(const UEAElement& a, const UEAElement& b);
    friend UEAElement operator*(const UEAElement& a, const UEAElement& b);
    UEAElement scaled(const CoeffSeries& s) const;
    friend bool operator==(const UEAElement& a, const UEAElement& b);
    friend bool operator!=(const UEAElement& a, const UEAElement& b) { return !(a == b); }

private:
    void add_normal(const Word& w, const CoeffSeries& coeff);  // w already normal

    const LieAlgebraData* lie_;
    int order_;
    // Rewrite weight of [e_a, e_b] = w C^c_{ab} e_c: nu when true (the Gutt
    // deformation), 1 when false (the plain enveloping algebra of twists).
    bool nu_weighted_;
    std::map<Word, CoeffSeries, WordLess> terms_;
};

// Dual coordinates xi_1..xi_d and the index maps between Lie basis and the
// (name-sorted) variable context.
struct DualContext {
    explicit DualContext(LieAlgebraData L, const std::string& prefix = "xi");

    LieAlgebraData lie;
    VarSetPtr vars;
    std::vector<std::size_t> var_of_basis;
    std::vector<std::size_t> basis_of_var;

    // Linear Poisson bivector P_xi(X,Y) = <xi, [X,Y]>.
    PolyVector linear_poisson() const;
};

// PBW symmetrization: xi_{i_1}...xi_{i_n} -> (1/n!) sum_sigma e_{i_sigma(1)}
// ... e_{i_sigma(n)}, normal-ordered with the nu-weighted brackets.
UEAElement pbw_symmetrize(const Poly& f, const DualContext& ctx, int order);

// Inverse of the symmetrization, by triangularity in the word length.
NuSeries pbw_desymmetrize(const UEAElement& u, const DualContext& ctx);

// The Gutt star product sigma^{-1}(sigma(u) sigma(v)) truncated at `order`.
NuSeries product(const Poly& u, const Poly& v, const DualContext& ctx, int order);

StarOracle oracle(const DualContext& ctx);

}  // namespace gutt
}  // namespace starforge
