#include "starforge/starproduct.hpp"

#include <algorithm>

namespace starforge {

StarProduct::StarProduct(VarSetPtr vars, std::vector<MultiDiffOp> cochains, PolyVector poisson)
    : vars_(std::move(vars)), c_(std::move(cochains)), poisson_(std::move(poisson)) {
    if (c_.empty()) throw Error("StarProduct: needs at least C_0");
    for (auto& op : c_) {
        if (op.arity() != 2) throw ArityError("StarProduct: cochains must have arity 2");
        op = op.with_vars(vars_);
    }
}

NuSeries StarProduct::apply(const Poly& u, const Poly& v, int ord) const {
    NuSeries s(vars_, ord);
    const Poly uu = u.with_vars(vars_);
    const Poly vv = v.with_vars(vars_);
    for (int r = 0; r <= std::min(ord, order()); ++r)
        s.set_coeff(r, c_[static_cast<std::size_t>(r)].eval(uu, vv));
    return s;
}

NuSeries StarProduct::apply(const NuSeries& u, const NuSeries& v) const {
    const int ord = std::min({u.order(), v.order(), order()});
    NuSeries s(VarSet::merged(vars_, VarSet::merged(u.vars(), v.vars())), ord);
    for (int r = 0; r <= ord; ++r) {
        Poly acc = Poly::zero(s.vars());
        for (int a = 0; a <= r; ++a)
            for (int b = 0; a + b <= r; ++b) {
                const int cidx = r - a - b;
                if (cidx > order()) continue;
                acc = acc + c_[static_cast<std::size_t>(cidx)].eval(u.coeff(a), v.coeff(b));
            }
        s.set_coeff(r, acc);
    }
    return s;
}

StarOracle StarProduct::oracle() const {
    StarProduct copy(*this);
    return [copy](const Poly& u, const Poly& v, int ord) { return copy.apply(u, v, ord); };
}

CochainSeries StarProduct::maurer_cartan_defect() const {
    CochainSeries d;
    d.order = order();
    for (int r = 0; r <= order(); ++r) {
        MultiDiffOp acc = MultiDiffOp::zero(vars_, 3);
        for (int s = 0; s <= r; ++s)
            acc = acc + gerstenhaber_bracket(c_[static_cast<std::size_t>(s)],
                                             c_[static_cast<std::size_t>(r - s)]);
        d.c.push_back(std::move(acc));
    }
    return d;
}

bool StarProduct::unit_check(unsigned max_degree) const {
    const Poly one = Poly::constant(vars_, Scalar(1));
    const auto basis = monomials_up_to(vars_, max_degree);
    if (c_[0] != MultiDiffOp::pointwise_mul(vars_)) return false;
    for (int r = 1; r <= order(); ++r) {
        for (const auto& m : basis) {
            if (!c_[static_cast<std::size_t>(r)].eval(one, m).is_zero()) return false;
            if (!c_[static_cast<std::size_t>(r)].eval(m, one).is_zero()) return false;
        }
    }
    return true;
}

bool StarProduct::skew_c1_matches_poisson(unsigned max_degree) const {
    if (order() < 1) return false;
    const auto basis = monomials_up_to(vars_, max_degree);
    for (const auto& u : basis)
        for (const auto& v : basis) {
            const Poly skew = c_[1].eval(u, v) - c_[1].eval(v, u);
            if (skew != poisson_.poisson_bracket(u, v)) return false;
        }
    return true;
}

bool StarProduct::hermitian_check(unsigned max_degree) const {
    const auto basis = monomials_up_to(vars_, max_degree);
    for (int r = 0; r <= order(); ++r) {
        const bool odd = (r % 2) != 0;
        for (const auto& u : basis)
            for (const auto& v : basis) {
                const Poly a = c_[static_cast<std::size_t>(r)].eval(u, v);
                const Poly b = c_[static_cast<std::size_t>(r)].eval(v, u);
                if (odd ? (a != -b) : (a != b)) return false;
            }
    }
    return true;
}

bool StarProduct::natural_check() const {
    for (int r = 0; r <= order(); ++r)
        for (int slot = 0; slot < 2; ++slot)
            if (c_[static_cast<std::size_t>(r)].max_order_in_slot(slot) > static_cast<unsigned>(r))
                return false;
    return true;
}

AssocScanResult assoc_triple_scan(const StarOracle& star, const VarSetPtr& vars,
                                  unsigned max_degree, int order) {
    const auto basis = monomials_up_to(vars, max_degree);
    AssocScanResult res;
    for (const auto& u : basis)
        for (const auto& v : basis)
            for (const auto& w : basis) {
                if (u.total_degree() + v.total_degree() + w.total_degree() >
                    static_cast<long>(max_degree))
                    continue;
                const NuSeries uv = star(u, v, order);
                NuSeries lhs(vars, order);
                for (int r = 0; r <= order; ++r)
                    lhs = lhs + star(uv.coeff(r), w, order - r).shifted_up(r).truncated(order);
                const NuSeries vw = star(v, w, order);
                NuSeries rhs(vars, order);
                for (int r = 0; r <= order; ++r)
                    rhs = rhs + star(u, vw.coeff(r), order - r).shifted_up(r).truncated(order);
                const NuSeries defect = lhs - rhs;
                if (!defect.is_zero()) {
                    res.ok = false;
                    res.failing_order = defect.first_nonzero_order();
                    res.failing_triple = "(" + u.str() + ", " + v.str() + ", " + w.str() + ")";
                    return res;
                }
            }
    return res;
}

StarProduct extract_cochains(const StarOracle& star, const VarSetPtr& vars, int order,
                             const PolyVector& poisson,
                             const std::function<unsigned(int)>& slot_bound,
                             std::optional<unsigned> validate_degree) {
    unsigned max_bound = 0;
    for (int r = 0; r <= order; ++r) max_bound = std::max(max_bound, slot_bound(r));

    // Star-values on the monomial grid, computed once.
    const auto grid = exps_up_to(vars->size(), max_bound);
    std::map<std::pair<Exp, Exp>, NuSeries> table;
    for (const auto& a : grid)
        for (const auto& b : grid)
            table.emplace(std::make_pair(a, b),
                          star(Poly::monomial(vars, a, Scalar(1)), Poly::monomial(vars, b, Scalar(1)),
                               order));

    // Pairs sorted by total derivative order: every strictly smaller pair is
    // reconstructed before it is needed.
    std::vector<std::pair<Exp, Exp>> pairs;
    for (const auto& a : grid)
        for (const auto& b : grid) pairs.emplace_back(a, b);
    std::stable_sort(pairs.begin(), pairs.end(), [](const auto& x, const auto& y) {
        return exp_total(x.first) + exp_total(x.second) < exp_total(y.first) + exp_total(y.second);
    });

    std::vector<MultiDiffOp> cochains;
    for (int r = 0; r <= order; ++r) {
        const unsigned bound = slot_bound(r);
        MultiDiffOp cr(vars, 2);
        std::map<std::pair<Exp, Exp>, Poly> coeffs;
        for (const auto& [alpha, beta] : pairs) {
            if (exp_total(alpha) > bound || exp_total(beta) > bound) continue;
            // C_r(x^alpha, x^beta) = sum_{g<=alpha, d<=beta} coeff_{g,d}
            //      * alpha!/(alpha-g)! x^{alpha-g} * beta!/(beta-d)! x^{beta-d}
            Poly rem = table.at({alpha, beta}).coeff(r);
            for (const auto& [gd, cpoly] : coeffs) {
                const auto& [g, d] = gd;
                if (!exp_divides(g, alpha) || !exp_divides(d, beta)) continue;
                const Rational fa = deriv_factor(alpha, g);
                const Rational fb = deriv_factor(beta, d);
                rem = rem - cpoly.scaled(Scalar(fa * fb)) *
                                Poly::monomial(vars, exp_sub(alpha, g), Scalar(1)) *
                                Poly::monomial(vars, exp_sub(beta, d), Scalar(1));
            }
            const Rational norm = exp_factorial(alpha) * exp_factorial(beta);
            const Poly c = rem.scaled(Scalar(norm.inverse()));
            if (!c.is_zero()) {
                coeffs.emplace(std::make_pair(alpha, beta), c);
                cr.add_term({alpha, beta}, c);
            }
        }
        cochains.push_back(std::move(cr));
    }

    StarProduct sp(vars, std::move(cochains), poisson);
    if (validate_degree) {
        for (const auto& u : monomials_up_to(vars, *validate_degree))
            for (const auto& v : monomials_up_to(vars, *validate_degree)) {
                if (sp.apply(u, v, order) != star(u, v, order))
                    throw Error("extract_cochains: operator order bound too small "
                                "(reconstruction mismatch on " + u.str() + " * " + v.str() + ")");
            }
    }
    return sp;
}

StarProduct extract_cochains(const StarOracle& star, const VarSetPtr& vars, int order,
                             const PolyVector& poisson, std::optional<unsigned> validate_degree) {
    return extract_cochains(star, vars, order, poisson,
                            [](int r) { return static_cast<unsigned>(r); }, validate_degree);
}

}  // namespace starforge
