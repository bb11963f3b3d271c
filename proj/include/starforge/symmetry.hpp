#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "starforge/gutt.hpp"
#include "starforge/starproduct.hpp"

namespace starforge {
namespace symmetry {

// T = sum_{r>=1} nu^r T_r, a formal series of arity-1 operators. The slot
// r = 0 is identically zero; exp(T) supplies the identity head.
class OpSeries {
public:
    OpSeries(VarSetPtr vars, int order);

    int order() const { return order_; }
    const VarSetPtr& vars() const { return vars_; }
    const MultiDiffOp& at(int r) const { return t_.at(static_cast<std::size_t>(r)); }
    void set(int r, const MultiDiffOp& op);  // r >= 1

    OpSeries operator-() const;

    // Largest per-slot derivative order over all T_r (at least 1).
    unsigned max_op_order() const;

private:
    VarSetPtr vars_;
    int order_;
    std::vector<MultiDiffOp> t_;
};

// e^T = id + sum_k T^k / k!, truncated: a series of arity-1 operators with
// invertible head.
class Transform {
public:
    static Transform exp(const OpSeries& T);

    int order() const { return order_; }
    NuSeries apply(const NuSeries& f) const;
    NuSeries apply(const Poly& f) const { return apply(NuSeries::from_poly(f, order_)); }

private:
    Transform(VarSetPtr vars, int order);
    VarSetPtr vars_;
    int order_;
    std::vector<MultiDiffOp> e_;  // E_0 = identity
};

// u *' v = e^T(e^{-T} u * e^{-T} v), returned in cochain form. The
// reconstruction bound per argument defaults to r * max_op_order(T) and is
// validated against the transformed oracle.
StarProduct transform_star(const StarProduct& S, const OpSeries& T,
                           std::optional<unsigned> validate_degree = std::nullopt);

// Leibniz defect of X against the product: order r component
// X C_r(u,v) - C_r(Xu, v) - C_r(u, Xv) = [X, C_r]_G.
CochainSeries derivation_defect(const StarProduct& S, const MultiDiffOp& X);

// Classical moment map data: a Hamiltonian J_a per basis element.
struct MomentMapData {
    gutt::LieAlgebraData lie;
    std::vector<Poly> j;  // size lie.dim()
};

// Scan outcome for the per-basis defect checks; `defect` holds the first
// nonzero series encountered (zero series when ok).
struct DefectReport {
    bool ok = true;
    int basis_a = -1;
    int basis_b = -1;
    int order = -1;
    std::string witness;
    NuSeries defect;
};

// f_{X_a} * u - u * f_{X_a} - nu {f_{X_a}, u} on monomials of total degree
// <= max_degree.
DefectReport strong_invariance_defect(const StarOracle& star, const PolyVector& poisson,
                                      const MomentMapData& M, unsigned max_degree, int order);

// f_{X_a} * f_{X_b} - f_{X_b} * f_{X_a} - nu f_{[X_a, X_b]} per basis pair.
DefectReport covariance_defect(const StarOracle& star, const MomentMapData& M, int order);

// Quantum moment map condition X_a = (1/nu) ad_* u_a: the defect
// (u_a * m - m * u_a) - nu X_a(m) on test monomials.
DefectReport quantum_moment_defect(const StarProduct& S, const std::vector<NuSeries>& u_assign,
                                   const std::vector<MultiDiffOp>& fields, unsigned max_degree);

// Formal Drinfeld twist, truncated: F = 1 (x) 1 + sum_{r>=1} nu^r F_r with
// F_r a sum of pairs of normal-ordered enveloping-algebra words (plain,
// nu-free brackets on the legs).
class TwistElement {
public:
    TwistElement(gutt::LieAlgebraData lie, int order);

    const gutt::LieAlgebraData& lie() const { return lie_; }
    int order() const { return order_; }

    // Adds coeff * (w1 (x) w2) at nu-order r; words are normal-ordered on
    // insertion.
    void add(int r, const gutt::Word& w1, const gutt::Word& w2, const Rational& coeff);

    const std::map<std::pair<gutt::Word, gutt::Word>, Rational>& component(int r) const {
        return f_.at(static_cast<std::size_t>(r));
    }

    // exp((nu/2) P^{ij} e_i (x) e_j) on an abelian algebra of matching
    // dimension, truncated at `order`.
    static TwistElement abelian_exponential(std::size_t dim,
                                            const std::vector<std::vector<Rational>>& P,
                                            int order);

private:
    gutt::LieAlgebraData lie_;
    int order_;
    std::vector<std::map<std::pair<gutt::Word, gutt::Word>, Rational>> f_;
};

struct TwistDefectReport {
    bool cocycle_ok = true;
    bool counit_ok = true;
    int first_bad_order = -1;
    std::string detail;
};

// (Delta (x) id)(F) (F (x) 1) = (id (x) Delta)(F) (1 (x) F) and the counit
// axiom, order by order.
TwistDefectReport twist_cocycle_defect(const TwistElement& F);

// Universal deformation formula u *_F v = mu(F . (u (x) v)) for an action of
// the Lie algebra by derivations (one arity-1 operator per basis element).
// The action is checked to be a Lie algebra morphism into derivations of the
// pointwise product.
NuSeries apply_udf(const TwistElement& F, const std::vector<MultiDiffOp>& action, const Poly& u,
                   const Poly& v, int order);

StarOracle udf_oracle(const TwistElement& F, const std::vector<MultiDiffOp>& action);

}  // namespace symmetry
}  // namespace starforge
