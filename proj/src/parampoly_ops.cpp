#include "starforge/parampoly_ops.hpp"

#include <algorithm>

namespace starforge {

Rational pp_leading_coeff(const ParamPoly& a) {
    if (a.is_zero()) return Rational(0);
    return a.terms().rbegin()->second;
}

ParamPoly pp_monic(const ParamPoly& a) {
    if (a.is_zero()) return a;
    return a.scaled(pp_leading_coeff(a).inverse());
}

ParamPoly pp_divexact(const ParamPoly& a, const ParamPoly& b) {
    if (b.is_zero()) throw Error("ParamPoly: division by zero polynomial");
    auto [x, y] = ParamPoly::aligned(a, b);
    ParamPoly q(x.vars());
    const Exp& elead = y.terms().rbegin()->first;
    const Rational clead = y.terms().rbegin()->second;
    while (!x.is_zero()) {
        const Exp& et = x.terms().rbegin()->first;
        const Rational& ct = x.terms().rbegin()->second;
        if (!exp_divides(elead, et))
            throw Error("ParamPoly: inexact division");
        Exp eq = exp_sub(et, elead);
        Rational cq = ct / clead;
        q.add_term(eq, cq);
        x = x - y * ParamPoly::monomial(x.vars(), std::move(eq), cq);
    }
    return q;
}

namespace {

// Univariate view with respect to one generator: degree -> coefficient
// polynomial (same context, zero exponent in the main variable).
using UniView = std::map<std::uint32_t, ParamPoly>;

UniView uni_view(const ParamPoly& a, std::size_t main) {
    UniView v;
    for (const auto& [e, c] : a.terms()) {
        Exp rest(e);
        const std::uint32_t d = rest[main];
        rest[main] = 0;
        auto [it, fresh] = v.try_emplace(d, ParamPoly::zero(a.vars()));
        it->second.add_term(std::move(rest), c);
    }
    return v;
}

std::uint32_t uni_degree(const UniView& v) { return v.empty() ? 0 : v.rbegin()->first; }

ParamPoly shift_main(const ParamPoly& a, std::size_t main, std::uint32_t k) {
    ParamPoly r(a.vars());
    for (const auto& [e, c] : a.terms()) {
        Exp ne(e);
        ne[main] += k;
        r.add_term(std::move(ne), c);
    }
    return r;
}

// Content with respect to the main variable: gcd of the univariate-view
// coefficients.
ParamPoly content_main(const ParamPoly& a, std::size_t main) {
    ParamPoly g = ParamPoly::zero(a.vars());
    for (const auto& [d, coeff] : uni_view(a, main)) g = pp_gcd(g, coeff);
    return g;
}

// Pseudo-remainder of a by b in the main variable.
ParamPoly pseudo_rem(ParamPoly a, const ParamPoly& b, std::size_t main) {
    auto bv = uni_view(b, main);
    const std::uint32_t db = uni_degree(bv);
    const ParamPoly lb = bv.rbegin()->second;
    while (!a.is_zero()) {
        auto av = uni_view(a, main);
        const std::uint32_t da = uni_degree(av);
        if (da < db) break;
        const ParamPoly la = av.rbegin()->second;
        a = a * lb - shift_main(la, main, da - db) * b;
    }
    return a;
}

}  // namespace

ParamPoly pp_gcd(const ParamPoly& a0, const ParamPoly& b0) {
    if (a0.is_zero()) return pp_monic(b0);
    if (b0.is_zero()) return pp_monic(a0);
    auto [a, b] = ParamPoly::aligned(a0, b0);
    if (a.is_constant() || b.is_constant())
        return ParamPoly::constant(a.vars(), Rational(1));

    // Main variable: the highest-index generator appearing in either.
    std::size_t main = 0;
    for (std::size_t i = a.vars()->size(); i-- > 0;) {
        if (a.degree_in(i) > 0 || b.degree_in(i) > 0) { main = i; break; }
    }
    if (a.degree_in(main) == 0) return pp_gcd(a, content_main(b, main));
    if (b.degree_in(main) == 0) return pp_gcd(content_main(a, main), b);

    const ParamPoly ca = content_main(a, main);
    const ParamPoly cb = content_main(b, main);
    const ParamPoly c = pp_gcd(ca, cb);
    ParamPoly pa = pp_divexact(a, ca);
    ParamPoly pb = pp_divexact(b, cb);
    if (uni_view(pa, main).rbegin()->first < uni_view(pb, main).rbegin()->first)
        std::swap(pa, pb);

    // Primitive polynomial remainder sequence.
    while (true) {
        ParamPoly r = pseudo_rem(pa, pb, main);
        if (r.is_zero()) break;
        if (r.degree_in(main) == 0) {
            // Main variable drops out: the primitive parts are coprime.
            return pp_monic(c);
        }
        pa = pb;
        pb = pp_divexact(r, content_main(r, main));
    }
    return pp_monic(c * pp_divexact(pb, content_main(pb, main)));
}

}  // namespace starforge
