#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "starforge/multidiffop.hpp"
#include "starforge/polyvector.hpp"

namespace starforge {

// An operational star product: (u, v, order) -> truncated nu-series.
// Constructions (Moyal, Gutt, Fedosov, reduction, twists) expose one of
// these; the cochain-level machinery below converts between the two views.
using StarOracle = std::function<NuSeries(const Poly&, const Poly&, int)>;

// A star product in explicit cochain form: the bidifferential operators
// C_0..C_N together with the Poisson bivector the product deforms.
class StarProduct {
public:
    StarProduct(VarSetPtr vars, std::vector<MultiDiffOp> cochains, PolyVector poisson);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const VarSetPtr& vars() const { return vars_; }
    const MultiDiffOp& cochain(int r) const { return c_.at(static_cast<std::size_t>(r)); }
    const std::vector<MultiDiffOp>& cochains() const { return c_; }
    const PolyVector& poisson() const { return poisson_; }

    NuSeries apply(const Poly& u, const Poly& v, int order) const;
    NuSeries apply(const Poly& u, const Poly& v) const { return apply(u, v, order()); }

    // Extends the product nu-bilinearly to truncated series.
    NuSeries apply(const NuSeries& u, const NuSeries& v) const;

    StarOracle oracle() const;

    // The nu-graded series of 3-cochains sum_{s+t=r} [C_s, C_t]_G; every
    // order vanishes iff the product is associative mod nu^{N+1}.
    CochainSeries maurer_cartan_defect() const;

    // Unit axiom: C_0 = mu and C_r(1,.) = C_r(.,1) = 0 for r >= 1, verified
    // on monomials of total degree <= max_degree.
    bool unit_check(unsigned max_degree) const;

    // C_1(u,v) - C_1(v,u) = {u,v} on monomials of total degree <= max_degree.
    bool skew_c1_matches_poisson(unsigned max_degree) const;

    // Hermitian axiom in the real-coefficient bookkeeping: under nu -> -nu
    // with conjugation, the condition reduces on real monomials to
    // C_r(f,g) = (-1)^r C_r(g,f); checked for all monomial pairs of total
    // degree <= max_degree.
    bool hermitian_check(unsigned max_degree) const;

    // Naturality: C_r takes derivatives of order <= r in each argument.
    bool natural_check() const;

private:
    VarSetPtr vars_;
    std::vector<MultiDiffOp> c_;
    PolyVector poisson_;
};

// Result of the evaluation-based associativity scan.
struct AssocScanResult {
    bool ok = true;
    int failing_order = -1;
    std::string failing_triple;
};

// Checks (u*v)*w == u*(v*w) mod nu^{order+1} for every monomial triple of
// total degree <= max_degree.
AssocScanResult assoc_triple_scan(const StarOracle& star, const VarSetPtr& vars,
                                  unsigned max_degree, int order);

// Reconstructs the cochains C_0..C_N of an operational product, assuming
// C_r takes derivatives of order <= slot_bound(r) in each argument. The
// reconstruction is exact for any bidifferential product within the bound;
// when validate_degree is set the result is re-checked against the oracle
// on all monomial pairs of that total degree and an Error is thrown on
// mismatch (the bound was too small).
StarProduct extract_cochains(const StarOracle& star, const VarSetPtr& vars, int order,
                             const PolyVector& poisson,
                             const std::function<unsigned(int)>& slot_bound,
                             std::optional<unsigned> validate_degree = std::nullopt);

// Convenience overload with the natural bound slot_bound(r) = r.
StarProduct extract_cochains(const StarOracle& star, const VarSetPtr& vars, int order,
                             const PolyVector& poisson,
                             std::optional<unsigned> validate_degree = std::nullopt);

}  // namespace starforge
