#include "starforge/moyal.hpp"

#include <algorithm>

namespace starforge {
namespace moyal {

ConstantPoisson::ConstantPoisson(VarSetPtr v, std::vector<std::vector<Rational>> m)
    : vars(std::move(v)), matrix(std::move(m)) {
    const std::size_t d = vars->size();
    if (matrix.size() != d) throw DimensionError("ConstantPoisson: matrix size mismatch");
    for (std::size_t i = 0; i < d; ++i) {
        if (matrix[i].size() != d) throw DimensionError("ConstantPoisson: matrix not square");
        for (std::size_t j = 0; j < d; ++j)
            if (matrix[i][j] != -matrix[j][i])
                throw Error("ConstantPoisson: matrix is not skewsymmetric");
    }
}

PolyVector ConstantPoisson::bivector() const {
    PolyVector P(vars, 1);
    for (unsigned i = 0; i < dim(); ++i)
        for (unsigned j = i + 1; j < dim(); ++j)
            if (!matrix[i][j].is_zero())
                P.add_component({i, j}, Poly::constant(vars, Scalar(matrix[i][j])));
    return P;
}

CanonicalContext::CanonicalContext(std::size_t n_) : n(n_) {
    std::vector<std::string> qs, all;
    for (std::size_t i = 1; i <= n; ++i) {
        qs.push_back("q" + std::to_string(i));
        all.push_back("q" + std::to_string(i));
        all.push_back("p" + std::to_string(i));
    }
    phase = VarSet::make(all);
    config = VarSet::make(qs);
}

std::size_t CanonicalContext::q_phase(std::size_t i) const {
    return *phase->index("q" + std::to_string(i + 1));
}
std::size_t CanonicalContext::p_phase(std::size_t i) const {
    return *phase->index("p" + std::to_string(i + 1));
}
std::size_t CanonicalContext::q_config(std::size_t i) const {
    return *config->index("q" + std::to_string(i + 1));
}

ConstantPoisson CanonicalContext::standard_poisson() const {
    std::vector<std::vector<Rational>> m(2 * n, std::vector<Rational>(2 * n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        m[q_phase(i)][p_phase(i)] = Rational(1);
        m[p_phase(i)][q_phase(i)] = Rational(-1);
    }
    return ConstantPoisson(phase, std::move(m));
}

NuSeries product(const Poly& u, const Poly& v, const ConstantPoisson& P, int order) {
    const std::size_t m = P.dim();
    const Poly uu = u.with_vars(P.vars);
    const Poly vv = v.with_vars(P.vars);
    if (uu.vars()->size() != m || vv.vars()->size() != m)
        throw DimensionError("moyal::product: operand variables escape the Poisson context");

    // Work on the doubled context u(x) v(y); one Poisson step applies
    // D = P^{rs} d_{x^r} d_{y^s}, and x = y is restored at the end.
    std::vector<std::string> doubled;
    for (const auto& nm : P.vars->names()) doubled.push_back("L#" + nm);
    for (const auto& nm : P.vars->names()) doubled.push_back("R#" + nm);
    VarSetPtr dvars = VarSet::make(doubled);
    std::vector<std::size_t> lidx(m), ridx(m);
    for (std::size_t i = 0; i < m; ++i) {
        lidx[i] = *dvars->index("L#" + P.vars->name(i));
        ridx[i] = *dvars->index("R#" + P.vars->name(i));
    }

    auto embed = [&](const Poly& p, const std::vector<std::size_t>& map) {
        Poly r(dvars);
        for (const auto& [e, c] : p.terms()) {
            Exp ne(dvars->size(), 0);
            for (std::size_t i = 0; i < m; ++i) ne[map[i]] = e[i];
            r.add_term(std::move(ne), c);
        }
        return r;
    };

    auto back = [&](const Poly& p) {
        // All doubled exponents must sit on L-variables by then.
        Poly r(P.vars);
        for (const auto& [e, c] : p.terms()) {
            Exp ne(m, 0);
            for (std::size_t i = 0; i < m; ++i) ne[i] = e[lidx[i]] + e[ridx[i]];
            r.add_term(std::move(ne), c);
        }
        return r;
    };

    NuSeries out(P.vars, order);
    Poly t = embed(uu, lidx) * embed(vv, ridx);
    Rational factor(1);
    for (int k = 0; k <= order; ++k) {
        if (t.is_zero()) break;
        out.set_coeff(k, back(t).scaled(Scalar(factor)));
        if (k == order) break;
        Poly next(dvars);
        for (std::size_t r = 0; r < m; ++r)
            for (std::size_t s = 0; s < m; ++s) {
                if (P.matrix[r][s].is_zero()) continue;
                next = next + t.derivative(lidx[r]).derivative(ridx[s]).scaled(
                                  Scalar(P.matrix[r][s]));
            }
        t = std::move(next);
        factor = factor * Rational(1, 2 * (k + 1));  // 1 / (2^k k!)
    }
    return out;
}

StarOracle oracle(const ConstantPoisson& P) {
    return [P](const Poly& u, const Poly& v, int order) { return product(u, v, P, order); };
}

StarProduct star_product(const ConstantPoisson& P, int order) {
    const std::size_t m = P.dim();
    std::vector<MultiDiffOp> cochains;
    for (int r = 0; r <= order; ++r) {
        MultiDiffOp cr(P.vars, 2);
        // Enumerate index sequences (r_1..r_k, s_1..s_k); the term map merges
        // the symmetric duplicates.
        std::vector<std::size_t> seq(static_cast<std::size_t>(r), 0);
        Rational norm(1);
        for (int k = 1; k <= r; ++k) norm = norm * Rational(1, 2 * k);
        auto rec = [&](auto&& self, int pos, Exp a, Exp b, Rational coeff) -> void {
            if (pos == r) {
                cr.add_term({std::move(a), std::move(b)},
                            Poly::constant(P.vars, Scalar(coeff * norm)));
                return;
            }
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < m; ++j) {
                    if (P.matrix[i][j].is_zero()) continue;
                    Exp na(a), nb(b);
                    na[i] += 1;
                    nb[j] += 1;
                    self(self, pos + 1, std::move(na), std::move(nb), coeff * P.matrix[i][j]);
                }
        };
        rec(rec, 0, Exp(m, 0), Exp(m, 0), Rational(1));
        cochains.push_back(std::move(cr));
    }
    return StarProduct(P.vars, std::move(cochains), P.bivector());
}

WeylOperator::WeylOperator(const CanonicalContext& ctx, int nu_order)
    : ctx_(&ctx), nu_order_(nu_order) {}

WeylOperator WeylOperator::identity(const CanonicalContext& ctx, int nu_order) {
    WeylOperator W(ctx, nu_order);
    W.add_term(Exp(ctx.config->size(), 0), NuSeries::one(ctx.config, nu_order));
    return W;
}

WeylOperator WeylOperator::mult_q(const CanonicalContext& ctx, std::size_t i, int nu_order) {
    WeylOperator W(ctx, nu_order);
    W.add_term(Exp(ctx.config->size(), 0),
               NuSeries::from_poly(Poly::variable(ctx.config, ctx.q_config(i)), nu_order));
    return W;
}

WeylOperator WeylOperator::momentum(const CanonicalContext& ctx, std::size_t i, int nu_order) {
    WeylOperator W(ctx, nu_order);
    Exp d(ctx.config->size(), 0);
    d[ctx.q_config(i)] = 1;
    NuSeries c(ctx.config, nu_order);
    if (nu_order >= 1) c.set_coeff(1, Poly::constant(ctx.config, Scalar(-1L)));
    W.add_term(std::move(d), c);
    return W;
}

void WeylOperator::add_term(Exp deriv, const NuSeries& coeff) {
    if (coeff.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(std::move(deriv), coeff);
    if (!fresh) {
        it->second = it->second + coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

WeylOperator WeylOperator::compose(const WeylOperator& other) const {
    WeylOperator R(*ctx_, std::min(nu_order_, other.nu_order_));
    // (c d^a) (e d^b) psi = c sum_{g<=a} binom(a,g) d^g(e) d^{a-g+b} psi
    for (const auto& [a, c] : terms_) {
        const auto splits = exp_splits(a, 2);
        for (const auto& [b, e] : other.terms_) {
            for (const auto& parts : splits) {
                const Exp& g = parts[0];
                const NuSeries de = e.map_coeffs([&](const Poly& p) { return p.deriv_multi(g); });
                if (de.is_zero()) continue;
                const Rational binom = exp_multinomial(a, parts);
                R.add_term(exp_add(parts[1], b), (c * de).scaled(Scalar(binom)));
            }
        }
    }
    return R;
}

WeylOperator operator+(const WeylOperator& a, const WeylOperator& b) {
    WeylOperator r(a);
    r.nu_order_ = std::min(a.nu_order_, b.nu_order_);
    for (auto& [d, c] : r.terms_) c = c.truncated(r.nu_order_);
    for (const auto& [d, c] : b.terms_) r.add_term(d, c.truncated(r.nu_order_));
    return r;
}

WeylOperator operator-(const WeylOperator& a, const WeylOperator& b) {
    return a + b.scaled(Scalar(-1L));
}

WeylOperator WeylOperator::scaled(const Scalar& s) const {
    WeylOperator r(*ctx_, nu_order_);
    if (s.is_zero()) return r;
    for (const auto& [d, c] : terms_) r.terms_.emplace(d, c.scaled(s));
    return r;
}

bool operator==(const WeylOperator& a, const WeylOperator& b) {
    return a.nu_order_ == b.nu_order_ && a.terms_ == b.terms_;
}

WeylOperator quantize(const Poly& f, const CanonicalContext& ctx, int nu_order) {
    const Poly ff = f.with_vars(ctx.phase);
    WeylOperator acc(ctx, nu_order);
    for (const auto& [e, coeff] : ff.terms()) {
        // The word of the monomial: one symbol per q / p factor.
        // Symbols sort q's before p's; the multiset permutations then
        // enumerate each distinct ordering exactly once.
        std::vector<std::pair<int, std::size_t>> word;
        Rational weight(1);
        for (std::size_t i = 0; i < ctx.n; ++i) {
            const auto qe = e[ctx.q_phase(i)];
            const auto pe = e[ctx.p_phase(i)];
            for (std::uint32_t k = 0; k < qe; ++k) word.emplace_back(0, i);
            for (std::uint32_t k = 0; k < pe; ++k) word.emplace_back(1, i);
            weight = weight * Rational::factorial(qe) * Rational::factorial(pe);
        }
        std::sort(word.begin(), word.end());
        weight = weight / Rational::factorial(static_cast<unsigned>(word.size()));

        WeylOperator sym(ctx, nu_order);
        do {
            WeylOperator w = WeylOperator::identity(ctx, nu_order);
            for (const auto& [is_p, i] : word)
                w = w.compose(is_p ? WeylOperator::momentum(ctx, i, nu_order)
                                   : WeylOperator::mult_q(ctx, i, nu_order));
            sym = sym + w;
        } while (std::next_permutation(word.begin(), word.end()));
        acc = acc + sym.scaled(coeff * Scalar(weight));
    }
    return acc;
}

WeylOperator quantize(const NuSeries& f, const CanonicalContext& ctx) {
    WeylOperator acc(ctx, f.order());
    for (int r = 0; r <= f.order(); ++r) {
        if (f.coeff(r).is_zero()) continue;
        WeylOperator w = quantize(f.coeff(r), ctx, f.order());
        // Shift by nu^r, staying at the working order.
        WeylOperator shifted(ctx, f.order());
        for (const auto& [d, c] : w.terms())
            shifted.add_term(d, c.shifted_up(r).truncated(f.order()));
        acc = acc + shifted;
    }
    return acc;
}

NuSeries dequantize(const WeylOperator& W0, const CanonicalContext& ctx) {
    WeylOperator W(W0);
    NuSeries f(ctx.phase, W.nu_order());
    while (!W.is_zero()) {
        // Peel the maximal derivative signature; its coefficient is exactly
        // (-nu)^{|beta|} q^alpha + strictly smaller corrections.
        const auto& [beta, coeff] = *W.terms().rbegin();
        const auto blen = static_cast<int>(exp_total(beta));
        NuSeries inc(ctx.phase, W.nu_order());
        for (int j = 0; j <= coeff.order(); ++j) {
            for (const auto& [alpha, c] : coeff.coeff(j).terms()) {
                if (j - blen < 0)
                    throw Error("dequantize: operator not in the image of Weyl quantization");
                Exp pe(ctx.phase->size(), 0);
                for (std::size_t i = 0; i < ctx.n; ++i) {
                    pe[ctx.q_phase(i)] = alpha[ctx.q_config(i)];
                    pe[ctx.p_phase(i)] = beta[ctx.q_config(i)];
                }
                const Scalar sign((blen % 2) ? Rational(-1) : Rational(1));
                inc.set_coeff(j - blen,
                              inc.coeff(j - blen) + Poly::monomial(ctx.phase, pe, c * sign));
            }
        }
        f = f + inc;
        W = W - quantize(inc, ctx);
    }
    return f;
}

bool compose_check(const Poly& f, const Poly& g, const CanonicalContext& ctx, int order) {
    const WeylOperator qf = quantize(f, ctx, order);
    const WeylOperator qg = quantize(g, ctx, order);
    const NuSeries lhs = dequantize(qf.compose(qg), ctx);
    const NuSeries rhs = product(f, g, ctx.standard_poisson(), order);
    return lhs == rhs;
}

}  // namespace moyal
}  // namespace starforge
