#pragma once

#include <map>
#include <string>
#include <vector>

#include "starforge/nuseries.hpp"
#include "starforge/poly.hpp"

namespace starforge {

// k-differential operator with polynomial coefficients:
//   A(f_1, ..., f_k) = sum_terms  coeff * prod_j d^{alpha_j} f_j.
// Terms are keyed by the tuple of per-slot derivative multi-indices, so
// composition results merge automatically and equal operators have equal
// representations.
class MultiDiffOp {
public:
    using DerivKey = std::vector<Exp>;
    using TermMap = std::map<DerivKey, Poly>;

    MultiDiffOp(VarSetPtr vars, int arity);
    static MultiDiffOp zero(const VarSetPtr& vars, int arity) { return MultiDiffOp(vars, arity); }

    // Pointwise multiplication mu(f, g) = f g.
    static MultiDiffOp pointwise_mul(const VarSetPtr& vars);

    // First-order operator sum_i components[i] * d_i.
    static MultiDiffOp vector_field(const std::vector<Poly>& components);

    // d^alpha as a 1-differential operator.
    static MultiDiffOp partial(const VarSetPtr& vars, const Exp& alpha);

    int arity() const { return arity_; }
    const VarSetPtr& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Shifted Gerstenhaber degree |A| = arity - 1.
    int degree() const { return arity_ - 1; }

    void add_term(DerivKey key, const Poly& coeff);

    Poly eval(const std::vector<Poly>& args) const;
    Poly eval(const Poly& a) const { return eval(std::vector<Poly>{a}); }
    Poly eval(const Poly& a, const Poly& b) const { return eval(std::vector<Poly>{a, b}); }

    // Symbolic composition: substitutes B into argument slot j (0-based) and
    // expands the derivatives of that slot over B's coefficients and argument
    // derivatives by the Leibniz rule. Result arity = arity(A) + arity(B) - 1.
    MultiDiffOp insert(const MultiDiffOp& B, int j) const;

    // Gerstenhaber pre-composition A o B = sum_j (-1)^{|B|(j-1)} A o_j B.
    MultiDiffOp circ(const MultiDiffOp& B) const;

    MultiDiffOp scaled(const Scalar& s) const;
    MultiDiffOp operator-() const { return scaled(Scalar(-1L)); }
    friend MultiDiffOp operator+(const MultiDiffOp& a, const MultiDiffOp& b);
    friend MultiDiffOp operator-(const MultiDiffOp& a, const MultiDiffOp& b);
    friend bool operator==(const MultiDiffOp& a, const MultiDiffOp& b);
    friend bool operator!=(const MultiDiffOp& a, const MultiDiffOp& b) { return !(a == b); }

    // Maximum total derivative order taken in slot j.
    unsigned max_order_in_slot(int j) const;

    MultiDiffOp with_vars(const VarSetPtr& target) const;
    static std::pair<MultiDiffOp, MultiDiffOp> aligned(const MultiDiffOp& a, const MultiDiffOp& b);

    std::string str() const;

private:
    VarSetPtr vars_;
    int arity_;
    TermMap terms_;
};

// Graded Lie bracket [A,B] = A o B - (-1)^{|A||B|} B o A.
MultiDiffOp gerstenhaber_bracket(const MultiDiffOp& a, const MultiDiffOp& b);

// Hochschild differential d A = -[mu, A]; raises arity by one.
MultiDiffOp hochschild_d(const MultiDiffOp& a);

// A nu-graded series of cochains (all of the same arity), used for defect
// reporting: zero iff every order vanishes.
struct CochainSeries {
    int order = 0;
    std::vector<MultiDiffOp> c;  // size order + 1

    bool is_zero() const;
    int first_nonzero_order() const;
};

}  // namespace starforge
