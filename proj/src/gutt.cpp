#include "starforge/gutt.hpp"

#include <algorithm>

namespace starforge {
namespace gutt {

LieAlgebraData::LieAlgebraData(
    std::size_t dim,
    const std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Rational>>& brackets)
    : dim_(dim),
      C_(dim, std::vector<std::vector<Rational>>(dim, std::vector<Rational>(dim, Rational(0)))),
      modular_(dim, Rational(0)) {
    if (dim == 0 || dim > 255) throw DimensionError("LieAlgebraData: unsupported dimension");
    for (const auto& [a, b, c, coeff] : brackets) {
        if (a >= dim || b >= dim || c >= dim)
            throw DimensionError("LieAlgebraData: basis index out of range");
        if (a == b && !coeff.is_zero())
            throw JacobiError("LieAlgebraData: [e_a, e_a] must vanish");
        C_[a][b][c] = C_[a][b][c] + coeff;
        C_[b][a][c] = C_[b][a][c] - coeff;
    }
    // Jacobi identity: sum_e (C^e_{ab} C^f_{ec} + cyclic) = 0.
    for (std::size_t a = 0; a < dim; ++a)
        for (std::size_t b = a + 1; b < dim; ++b)
            for (std::size_t c = b + 1; c < dim; ++c)
                for (std::size_t f = 0; f < dim; ++f) {
                    Rational s(0);
                    for (std::size_t e = 0; e < dim; ++e) {
                        s += C_[a][b][e] * C_[e][c][f];
                        s += C_[b][c][e] * C_[e][a][f];
                        s += C_[c][a][e] * C_[e][b][f];
                    }
                    if (!s.is_zero())
                        throw JacobiError("LieAlgebraData: Jacobi identity fails on (" +
                                          std::to_string(a) + "," + std::to_string(b) + "," +
                                          std::to_string(c) + ")");
                }
    for (std::size_t a = 0; a < dim; ++a)
        for (std::size_t b = 0; b < dim; ++b) modular_[a] += C_[a][b][b];
}

LieAlgebraData LieAlgebraData::abelian(std::size_t dim) { return LieAlgebraData(dim, {}); }

LieAlgebraData LieAlgebraData::heisenberg3() {
    return LieAlgebraData(3, {{0, 1, 2, Rational(1)}});
}

LieAlgebraData LieAlgebraData::so3() {
    return LieAlgebraData(3, {{0, 1, 2, Rational(1)}, {1, 2, 0, Rational(1)}, {2, 0, 1, Rational(1)}});
}

LieAlgebraData LieAlgebraData::affine2() {
    return LieAlgebraData(2, {{0, 1, 1, Rational(1)}});
}

bool CoeffSeries::is_zero() const {
    return std::all_of(c.begin(), c.end(), [](const Scalar& s) { return s.is_zero(); });
}

CoeffSeries CoeffSeries::operator-() const {
    CoeffSeries r(*this);
    for (auto& s : r.c) s = -s;
    return r;
}

CoeffSeries operator+(const CoeffSeries& a, const CoeffSeries& b) {
    CoeffSeries r(std::min(a.order, b.order));
    for (int k = 0; k <= r.order; ++k)
        r.c[static_cast<std::size_t>(k)] =
            a.c[static_cast<std::size_t>(k)] + b.c[static_cast<std::size_t>(k)];
    return r;
}

CoeffSeries operator-(const CoeffSeries& a, const CoeffSeries& b) { return a + (-b); }

CoeffSeries operator*(const CoeffSeries& a, const CoeffSeries& b) {
    CoeffSeries r(std::min(a.order, b.order));
    for (int s = 0; s <= r.order; ++s) {
        if (a.c[static_cast<std::size_t>(s)].is_zero()) continue;
        for (int t = 0; s + t <= r.order; ++t)
            r.c[static_cast<std::size_t>(s + t)] =
                r.c[static_cast<std::size_t>(s + t)] +
                a.c[static_cast<std::size_t>(s)] * b.c[static_cast<std::size_t>(t)];
    }
    return r;
}

CoeffSeries CoeffSeries::scaled(const Scalar& s) const {
    CoeffSeries r(*this);
    for (auto& x : r.c) x = x * s;
    return r;
}

CoeffSeries CoeffSeries::shifted_up(int k) const {
    CoeffSeries r(order);
    for (int j = 0; j + k <= order; ++j)
        r.c[static_cast<std::size_t>(j + k)] = c[static_cast<std::size_t>(j)];
    return r;
}

CoeffSeries CoeffSeries::truncated(int new_order) const {
    if (new_order >= order) return *this;
    CoeffSeries r(new_order);
    for (int j = 0; j <= new_order; ++j) r.c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j)];
    return r;
}

bool operator==(const CoeffSeries& a, const CoeffSeries& b) {
    return a.order == b.order && a.c == b.c;
}

UEAElement UEAElement::unit(const LieAlgebraData& L, int order, bool nu_weighted) {
    UEAElement u(&L, order, nu_weighted);
    u.add_normal({}, CoeffSeries::unit(order));
    return u;
}

void UEAElement::add_normal(const Word& w, const CoeffSeries& coeff) {
    if (coeff.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(w, coeff);
    if (!fresh) {
        it->second = it->second + coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void UEAElement::add_word(const Word& w, const CoeffSeries& coeff) {
    if (coeff.is_zero()) return;
    // Find the first descending adjacent pair; none means w is normal.
    std::size_t i = 0;
    for (; i + 1 < w.size(); ++i)
        if (w[i] > w[i + 1]) break;
    if (i + 1 >= w.size()) {
        add_normal(w, coeff);
        return;
    }
    // e_b e_a = e_a e_b + weight * C^c_{ba} e_c  (b = w[i] > a = w[i+1]).
    Word swapped(w);
    std::swap(swapped[i], swapped[i + 1]);
    add_word(swapped, coeff);
    const std::size_t b = w[i], a = w[i + 1];
    for (std::size_t cc = 0; cc < lie_->dim(); ++cc) {
        const Rational& f = lie_->c(b, a, cc);
        if (f.is_zero()) continue;
        Word contracted;
        contracted.reserve(w.size() - 1);
        contracted.insert(contracted.end(), w.begin(), w.begin() + static_cast<long>(i));
        contracted.push_back(static_cast<std::uint8_t>(cc));
        contracted.insert(contracted.end(), w.begin() + static_cast<long>(i) + 2, w.end());
        CoeffSeries fc = coeff.scaled(Scalar(f));
        if (nu_weighted_) fc = fc.shifted_up(1);
        add_word(contracted, fc);
    }
}

UEAElement operator+(const UEAElement& a, const UEAElement& b) {
    if (a.nu_weighted_ != b.nu_weighted_)
        throw Error("UEAElement: mixing bracket weights");
    UEAElement r(a.lie_, std::min(a.order_, b.order_), a.nu_weighted_);
    for (const auto& [w, c] : a.terms_) r.add_normal(w, c.truncated(r.order_));
    for (const auto& [w, c] : b.terms_) r.add_normal(w, c.truncated(r.order_));
    return r;
}

UEAElement operator-(const UEAElement& a, const UEAElement& b) {
    return a + b.scaled(CoeffSeries::unit(b.order()).scaled(Scalar(-1L)));
}

UEAElement operator*(const UEAElement& a, const UEAElement& b) {
    if (a.nu_weighted_ != b.nu_weighted_)
        throw Error("UEAElement: mixing bracket weights");
    UEAElement r(a.lie_, std::min(a.order_, b.order_), a.nu_weighted_);
    for (const auto& [w1, c1] : a.terms_)
        for (const auto& [w2, c2] : b.terms_) {
            Word w(w1);
            w.insert(w.end(), w2.begin(), w2.end());
            r.add_word(w, c1 * c2);
        }
    return r;
}

UEAElement UEAElement::scaled(const CoeffSeries& s) const {
    UEAElement r(lie_, std::min(order_, s.order), nu_weighted_);
    for (const auto& [w, c] : terms_) r.add_normal(w, c * s);
    return r;
}

bool operator==(const UEAElement& a, const UEAElement& b) {
    if (a.order_ != b.order_ || a.nu_weighted_ != b.nu_weighted_) return false;
    return a.terms_ == b.terms_;
}

DualContext::DualContext(LieAlgebraData L0, const std::string& prefix) : lie(std::move(L0)) {
    const LieAlgebraData& L = lie;
    std::vector<std::string> names;
    for (std::size_t a = 1; a <= L.dim(); ++a) names.push_back(prefix + std::to_string(a));
    vars = VarSet::make(names);
    var_of_basis.resize(L.dim());
    basis_of_var.resize(L.dim());
    for (std::size_t a = 0; a < L.dim(); ++a) {
        const std::size_t v = *vars->index(prefix + std::to_string(a + 1));
        var_of_basis[a] = v;
        basis_of_var[v] = a;
    }
}

PolyVector DualContext::linear_poisson() const {
    PolyVector P(vars, 1);
    const std::size_t d = lie.dim();
    for (unsigned va = 0; va < d; ++va)
        for (unsigned vb = va + 1; vb < d; ++vb) {
            const std::size_t a = basis_of_var[va], b = basis_of_var[vb];
            Poly comp = Poly::zero(vars);
            for (std::size_t c = 0; c < d; ++c) {
                const Rational& f = lie.c(a, b, c);
                if (!f.is_zero())
                    comp = comp + Poly::variable(vars, var_of_basis[c]).scaled(Scalar(f));
            }
            P.add_component({va, vb}, comp);
        }
    return P;
}

UEAElement pbw_symmetrize(const Poly& f, const DualContext& ctx, int order) {
    const Poly ff = f.with_vars(ctx.vars);
    UEAElement acc(&ctx.lie, order, /*nu_weighted=*/true);
    for (const auto& [e, coeff] : ff.terms()) {
        Word word;
        Rational weight(1);
        for (std::size_t v = 0; v < e.size(); ++v) {
            for (std::uint32_t k = 0; k < e[v]; ++k)
                word.push_back(static_cast<std::uint8_t>(ctx.basis_of_var[v]));
            weight = weight * Rational::factorial(e[v]);
        }
        std::sort(word.begin(), word.end());
        weight = weight / Rational::factorial(static_cast<unsigned>(word.size()));
        UEAElement sym(&ctx.lie, order, true);
        do {
            sym.add_word(word, CoeffSeries::unit(order));
        } while (std::next_permutation(word.begin(), word.end()));
        acc = acc + sym.scaled(CoeffSeries::unit(order).scaled(coeff * Scalar(weight)));
    }
    return acc;
}

NuSeries pbw_desymmetrize(const UEAElement& u, const DualContext& ctx) {
    const int order = u.order();
    NuSeries f(ctx.vars, order);
    UEAElement rest(u);
    while (!rest.is_zero()) {
        // Longest word first: its monomial is determined exactly, since the
        // symmetrization of the monomial is that word plus shorter ones.
        const Word w = rest.terms().rbegin()->first;
        const CoeffSeries s = rest.terms().rbegin()->second;
        Exp e(ctx.vars->size(), 0);
        for (auto b : w) e[ctx.var_of_basis[b]] += 1;
        const Poly mono = Poly::monomial(ctx.vars, e, Scalar(1));
        for (int j = 0; j <= order; ++j)
            if (!s.c[static_cast<std::size_t>(j)].is_zero())
                f.set_coeff(j, f.coeff(j) + mono.scaled(s.c[static_cast<std::size_t>(j)]));
        rest = rest - pbw_symmetrize(mono, ctx, order).scaled(s);
    }
    return f;
}

NuSeries product(const Poly& u, const Poly& v, const DualContext& ctx, int order) {
    const UEAElement su = pbw_symmetrize(u, ctx, order);
    const UEAElement sv = pbw_symmetrize(v, ctx, order);
    return pbw_desymmetrize(su * sv, ctx);
}

StarOracle oracle(const DualContext& ctx) {
    return [ctx](const Poly& u, const Poly& v, int order) { return product(u, v, ctx, order); };
}

}  // namespace gutt
}  // namespace starforge
