#include "starforge/fedosov.hpp"

#include <algorithm>
#include <bit>
#include <memory>
#include <sstream>

namespace starforge {
namespace fedosov {

namespace {

int wedge_sign(std::uint32_t a, std::uint32_t b) {
    // Parity of inversions when concatenating the increasing lists of a and b.
    int inv = 0;
    for (std::uint32_t m = b; m; m &= m - 1) {
        const unsigned j = static_cast<unsigned>(std::countr_zero(m));
        inv += std::popcount(a >> (j + 1));
    }
    return (inv % 2) ? -1 : 1;
}

}  // namespace

WeylFormElement WeylFormElement::one(std::size_t dim) {
    WeylFormElement e(dim);
    e.add_term({Exp(dim, 0), Exp(dim, 0), 0, 0}, Rational(1));
    return e;
}

void WeylFormElement::add_term(WTermKey key, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(std::move(key), c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void WeylFormElement::add_form_term(Exp x, Exp y, unsigned nu, const std::vector<unsigned>& wedge,
                                    const Rational& c) {
    std::uint32_t mask = 0;
    int sign = 1;
    for (auto j : wedge) {
        if (j >= dim_) throw DimensionError("WeylFormElement: wedge index out of range");
        const std::uint32_t bit = 1u << j;
        if (mask & bit) return;  // dx^j ^ dx^j = 0
        // Sign of moving dx^j from the right end to its sorted slot.
        sign *= (std::popcount(mask >> (j + 1)) % 2) ? -1 : 1;
        mask |= bit;
    }
    add_term({std::move(x), std::move(y), nu, mask}, (sign > 0) ? c : -c);
}

WeylFormElement operator+(const WeylFormElement& a, const WeylFormElement& b) {
    WeylFormElement r(a);
    for (const auto& [k, c] : b.terms_) r.add_term(k, c);
    return r;
}

WeylFormElement operator-(const WeylFormElement& a, const WeylFormElement& b) {
    WeylFormElement r(a);
    for (const auto& [k, c] : b.terms_) r.add_term(k, -c);
    return r;
}

WeylFormElement WeylFormElement::scaled(const Rational& s) const {
    WeylFormElement r(dim_);
    if (s.is_zero()) return r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, c * s);
    return r;
}

bool operator==(const WeylFormElement& a, const WeylFormElement& b) {
    return a.terms_ == b.terms_;
}

WeylFormElement WeylFormElement::mul_nu(int k) const {
    WeylFormElement r(dim_);
    for (const auto& [key, c] : terms_) {
        WTermKey nk(key);
        nk.nu += static_cast<unsigned>(k);
        r.terms_.emplace(std::move(nk), c);
    }
    return r;
}

WeylFormElement WeylFormElement::div_nu(int k) const {
    WeylFormElement r(dim_);
    for (const auto& [key, c] : terms_) {
        if (key.nu < static_cast<unsigned>(k))
            throw NotDivisibleError("WeylFormElement: nu-power too small for exact division");
        WTermKey nk(key);
        nk.nu -= static_cast<unsigned>(k);
        r.terms_.emplace(std::move(nk), c);
    }
    return r;
}

WeylFormElement WeylFormElement::fdeg_component(unsigned d) const {
    WeylFormElement r(dim_);
    for (const auto& [key, c] : terms_)
        if (exp_total(key.y) + 2 * key.nu == d) r.terms_.emplace(key, c);
    return r;
}

WeylFormElement WeylFormElement::fdeg_truncated(unsigned d) const {
    WeylFormElement r(dim_);
    for (const auto& [key, c] : terms_)
        if (exp_total(key.y) + 2 * key.nu <= d) r.terms_.emplace(key, c);
    return r;
}

unsigned WeylFormElement::max_fdeg() const {
    unsigned m = 0;
    for (const auto& [key, c] : terms_)
        m = std::max(m, static_cast<unsigned>(exp_total(key.y)) + 2 * key.nu);
    return m;
}

WeylFormElement WeylFormElement::form_component(unsigned q) const {
    WeylFormElement r(dim_);
    for (const auto& [key, c] : terms_)
        if (static_cast<unsigned>(std::popcount(key.dx)) == q) r.terms_.emplace(key, c);
    return r;
}

unsigned WeylFormElement::max_form_degree() const {
    unsigned m = 0;
    for (const auto& [key, c] : terms_)
        m = std::max(m, static_cast<unsigned>(std::popcount(key.dx)));
    return m;
}

std::string WeylFormElement::str(const VarSetPtr& base) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        for (std::size_t i = 0; i < key.x.size(); ++i)
            if (key.x[i]) os << "*" << base->name(i) << "^" << key.x[i];
        for (std::size_t i = 0; i < key.y.size(); ++i)
            if (key.y[i]) os << "*y" << i + 1 << "^" << key.y[i];
        if (key.nu) os << "*nu^" << key.nu;
        for (std::uint32_t m = key.dx; m; m &= m - 1)
            os << "*dx" << std::countr_zero(m) + 1;
    }
    return os.str();
}

VarSetPtr FedosovInput::standard_base(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= 2 * n; ++i) names.push_back("x" + std::to_string(i));
    return VarSet::make(names);
}

FedosovInput FedosovInput::flat(std::size_t n) {
    return FedosovInput(n, standard_base(n), {}, {});
}

Rational FedosovInput::omega_lower(std::size_t i, std::size_t j) const {
    // omega = sum dp_i ^ dq^i: omega_{n+i, i} = 1; then Lambda = omega^{-1}
    // gives the standard bracket {x^i, x^{n+i}} = 1.
    if (j < n_ && i == j + n_) return Rational(1);
    if (i < n_ && j == i + n_) return Rational(-1);
    return Rational(0);
}

Rational FedosovInput::poisson_upper(std::size_t i, std::size_t j) const {
    // Lambda = [[0, I], [-I, 0]]: {x^i, x^{n+i}} = 1.
    if (i < n_ && j == i + n_) return Rational(1);
    if (j < n_ && i == j + n_) return Rational(-1);
    return Rational(0);
}

const ParamPoly& FedosovInput::gamma(std::size_t k, std::size_t i, std::size_t j) const {
    static const ParamPoly zero = ParamPoly();
    auto it = gamma_.find({static_cast<unsigned>(k), static_cast<unsigned>(i),
                           static_cast<unsigned>(j)});
    return it == gamma_.end() ? zero : it->second;
}

FedosovInput::FedosovInput(std::size_t n, VarSetPtr base,
                           const std::map<std::array<unsigned, 3>, ParamPoly>& gamma,
                           const std::map<std::array<unsigned, 3>, ParamPoly>& omega)
    : n_(n), base_(std::move(base)), conn_(2 * n), curv_(2 * n), omega_(2 * n) {
    const std::size_t d = 2 * n_;
    if (n_ == 0 || d > 31) throw DimensionError("FedosovInput: unsupported dimension");
    if (base_->size() != d) throw DimensionError("FedosovInput: base context size mismatch");
    coord_.resize(d);
    for (std::size_t i = 0; i < d; ++i) {
        auto idx = base_->index("x" + std::to_string(i + 1));
        if (!idx) throw Error("FedosovInput: base context must use coordinates x1..x" +
                              std::to_string(d));
        coord_[i] = *idx;
    }

    // Symmetrize Gamma over the lower index pair and keep both orderings.
    for (const auto& [kij, poly] : gamma) {
        const auto [k, i, j] = std::array<unsigned, 3>{kij[0], kij[1], kij[2]};
        if (k >= d || i >= d || j >= d)
            throw DimensionError("FedosovInput: Christoffel index out of range");
        const ParamPoly p = poly.with_vars(base_);
        auto slot = [&](unsigned a, unsigned b, unsigned c) -> ParamPoly& {
            auto [it, fresh] = gamma_.try_emplace({a, b, c}, ParamPoly::zero(base_));
            return it->second;
        };
        if (i == j) {
            slot(k, i, j) = slot(k, i, j) + p;
        } else {
            slot(k, i, j) = slot(k, i, j) + p;
            slot(k, j, i) = slot(k, j, i) + p;
        }
    }
    for (auto it = gamma_.begin(); it != gamma_.end();) {
        if (it->second.is_zero())
            it = gamma_.erase(it);
        else
            ++it;
    }

    // Symplectic connection: omega_{kl} Gamma^l_{ij} totally symmetric in
    // (k, i, j).
    auto gamma_low = [&](std::size_t k, std::size_t i, std::size_t j) {
        ParamPoly acc = ParamPoly::zero(base_);
        for (std::size_t l = 0; l < d; ++l) {
            const Rational w = omega_lower(k, l);
            if (!w.is_zero()) acc = acc + this->gamma(l, i, j).scaled(w);
        }
        return acc;
    };
    for (std::size_t k = 0; k < d; ++k)
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = i; j < d; ++j) {
                const ParamPoly t = gamma_low(k, i, j);
                if (t != gamma_low(i, k, j) || t != gamma_low(k, j, i))
                    throw Error("FedosovInput: connection is not symplectic "
                                "(omega_{kl} Gamma^l_{ij} is not totally symmetric)");
            }

    // Connection form (1/2) omega_{ki} Gamma^k_{rj} y^i y^j dx^r.
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                const ParamPoly g = gamma_low(i, r, j);
                if (g.is_zero()) continue;
                for (const auto& [xe, c] : g.terms()) {
                    Exp ye(d, 0);
                    ye[i] += 1;
                    ye[j] += 1;
                    conn_.add_form_term(remap_exp(xe), std::move(ye), 0,
                                        {static_cast<unsigned>(r)}, c * Rational(-1, 2));
                }
            }

    // Curvature R^k_{jlm} = d_l Gamma^k_{mj} - d_m Gamma^k_{lj}
    //                     + Gamma^k_{ls} Gamma^s_{mj} - Gamma^k_{ms} Gamma^s_{lj},
    // packed as (1/4) omega_{ki} R^k_{jlm} y^i y^j dx^l ^ dx^m.
    for (std::size_t l = 0; l < d; ++l)
        for (std::size_t m = l + 1; m < d; ++m)
            for (std::size_t k = 0; k < d; ++k)
                for (std::size_t j = 0; j < d; ++j) {
                    ParamPoly R = this->gamma(k, m, j).derivative(coord_[l]) -
                                  this->gamma(k, l, j).derivative(coord_[m]);
                    for (std::size_t s = 0; s < d; ++s) {
                        R = R + this->gamma(k, l, s) * this->gamma(s, m, j);
                        R = R - this->gamma(k, m, s) * this->gamma(s, l, j);
                    }
                    if (R.is_zero()) continue;
                    for (std::size_t i = 0; i < d; ++i) {
                        const Rational w = omega_lower(k, i);
                        if (w.is_zero()) continue;
                        for (const auto& [xe, c] : R.terms()) {
                            Exp ye(d, 0);
                            ye[i] += 1;
                            ye[j] += 1;
                            // Both wedge orders contribute; keep l < m and
                            // double the coefficient (skew part in (l, m)).
                            curv_.add_form_term(remap_exp(xe), std::move(ye), 0,
                                                {static_cast<unsigned>(l), static_cast<unsigned>(m)},
                                                c * w * Rational(1, 2));
                        }
                    }
                }

    // Omega-tilde series; each omega_k must be closed.
    for (const auto& [kij, poly] : omega) {
        const unsigned ord = kij[0];
        const unsigned i = kij[1], j = kij[2];
        if (ord < 1) throw Error("FedosovInput: Omega-tilde starts at nu^1");
        if (i >= d || j >= d || i == j)
            throw DimensionError("FedosovInput: 2-form component indices invalid");
        const ParamPoly wpoly = poly.with_vars(base_);
        for (const auto& [xe, c] : wpoly.terms())
            omega_.add_form_term(remap_exp(xe), Exp(d, 0), ord, {i, j}, c);
    }
    // Closedness: for every a<b<c, d_a w_{bc} - d_b w_{ac} + d_c w_{ab} = 0.
    for (unsigned ord = 1; ord <= 31; ++ord) {
        std::map<std::pair<unsigned, unsigned>, ParamPoly> w;
        bool any = false;
        for (const auto& [key, c] : omega_.terms()) {
            if (key.nu != ord) continue;
            any = true;
            std::vector<unsigned> idx;
            for (std::uint32_t mm = key.dx; mm; mm &= mm - 1)
                idx.push_back(static_cast<unsigned>(std::countr_zero(mm)));
            Exp xe(base_->size(), 0);
            for (std::size_t t = 0; t < d; ++t) xe[coord_[t]] = key.x[t];
            auto [it, fresh] = w.try_emplace({idx[0], idx[1]}, ParamPoly::zero(base_));
            it->second.add_term(std::move(xe), c);
        }
        if (!any) continue;
        auto comp = [&](unsigned a, unsigned b) {
            auto it = w.find({std::min(a, b), std::max(a, b)});
            ParamPoly p = (it == w.end()) ? ParamPoly::zero(base_) : it->second;
            return (a < b) ? p : -p;
        };
        for (unsigned a = 0; a < d; ++a)
            for (unsigned b = a + 1; b < d; ++b)
                for (unsigned c = b + 1; c < d; ++c) {
                    const ParamPoly dd = comp(b, c).derivative(coord_[a]) -
                                         comp(a, c).derivative(coord_[b]) +
                                         comp(a, b).derivative(coord_[c]);
                    if (!dd.is_zero())
                        throw Error("FedosovInput: omega_" + std::to_string(ord) +
                                    " is not closed");
                }
    }
}

Exp FedosovInput::remap_exp(const Exp& xe) const {
    // ParamPoly exponents are laid out over the (sorted) base context; the
    // Weyl element stores them in coordinate order x^1..x^{2n}.
    Exp r(dim(), 0);
    for (std::size_t i = 0; i < dim(); ++i) r[i] = xe[coord_[i]];
    return r;
}

PolyVector FedosovInput::base_poisson() const {
    PolyVector P(base_, 1);
    for (unsigned i = 0; i < n_; ++i)
        P.add_component({static_cast<unsigned>(coord_[i]), static_cast<unsigned>(coord_[i + n_])},
                        Poly::constant(base_, Scalar(1)));
    return P;
}

WeylFormElement fiber_star(const WeylFormElement& a, const WeylFormElement& b,
                           const FedosovInput& F) {
    const std::size_t d = F.dim();
    const std::size_t n = F.n();
    WeylFormElement out(d);
    for (const auto& [ka, ca] : a.terms()) {
        for (const auto& [kb, cb] : b.terms()) {
            if (ka.dx & kb.dx) continue;
            const int sgn = wedge_sign(ka.dx, kb.dx);
            const Rational c0 = (sgn > 0) ? ca * cb : -(ca * cb);
            const Exp x = exp_add(ka.x, kb.x);
            const std::uint32_t dx = ka.dx | kb.dx;
            const unsigned nu0 = ka.nu + kb.nu;
            // Moyal expansion in the fiber variables.
            std::map<std::pair<Exp, Exp>, Rational> cur;
            cur.emplace(std::make_pair(ka.y, kb.y), Rational(1));
            Rational factor(1);
            unsigned k = 0;
            while (!cur.empty()) {
                for (const auto& [yy, c] : cur)
                    out.add_term({x, exp_add(yy.first, yy.second), nu0 + k, dx},
                                 c0 * c * factor);
                std::map<std::pair<Exp, Exp>, Rational> next;
                for (const auto& [yy, c] : cur) {
                    const Exp& ya = yy.first;
                    const Exp& yb = yy.second;
                    for (std::size_t i = 0; i < n; ++i) {
                        // Lambda^{i, n+i} = 1, Lambda^{n+i, i} = -1.
                        if (ya[i] > 0 && yb[i + n] > 0) {
                            Exp na(ya), nb(yb);
                            na[i] -= 1;
                            nb[i + n] -= 1;
                            const Rational add = c * Rational(static_cast<long>(ya[i])) *
                                                 Rational(static_cast<long>(yb[i + n]));
                            auto [it, fresh] = next.try_emplace({std::move(na), std::move(nb)}, add);
                            if (!fresh) it->second += add;
                        }
                        if (ya[i + n] > 0 && yb[i] > 0) {
                            Exp na(ya), nb(yb);
                            na[i + n] -= 1;
                            nb[i] -= 1;
                            const Rational add = -(c * Rational(static_cast<long>(ya[i + n])) *
                                                   Rational(static_cast<long>(yb[i])));
                            auto [it, fresh] = next.try_emplace({std::move(na), std::move(nb)}, add);
                            if (!fresh) it->second += add;
                        }
                    }
                }
                for (auto it = next.begin(); it != next.end();) {
                    if (it->second.is_zero())
                        it = next.erase(it);
                    else
                        ++it;
                }
                cur = std::move(next);
                ++k;
                factor = factor * Rational(1, 2 * static_cast<long>(k));
            }
        }
    }
    return out;
}

WeylFormElement graded_commutator(const WeylFormElement& a, const WeylFormElement& b,
                                  const FedosovInput& F) {
    WeylFormElement acc(F.dim());
    const unsigned qa_max = a.max_form_degree();
    const unsigned qb_max = b.max_form_degree();
    for (unsigned qa = 0; qa <= qa_max; ++qa) {
        const WeylFormElement aq = a.form_component(qa);
        if (aq.is_zero()) continue;
        for (unsigned qb = 0; qb <= qb_max; ++qb) {
            const WeylFormElement bq = b.form_component(qb);
            if (bq.is_zero()) continue;
            acc = acc + fiber_star(aq, bq, F);
            const WeylFormElement ba = fiber_star(bq, aq, F);
            acc = ((qa * qb) % 2) ? acc + ba : acc - ba;
        }
    }
    return acc;
}

WeylFormElement delta_op(const WeylFormElement& a) {
    WeylFormElement r(a.dim());
    for (const auto& [key, c] : a.terms()) {
        for (std::size_t k = 0; k < a.dim(); ++k) {
            if (key.y[k] == 0) continue;
            const std::uint32_t bit = 1u << k;
            if (key.dx & bit) continue;
            // dx^k lands in front: sign counts the wedge factors below k.
            const int sgn = (std::popcount(key.dx & (bit - 1)) % 2) ? -1 : 1;
            WTermKey nk(key);
            nk.y[k] -= 1;
            nk.dx |= bit;
            const Rational f = c * Rational(static_cast<long>(key.y[k]));
            r.add_term(std::move(nk), (sgn > 0) ? f : -f);
        }
    }
    return r;
}

WeylFormElement delta_inv(const WeylFormElement& a) {
    WeylFormElement r(a.dim());
    for (const auto& [key, c] : a.terms()) {
        const unsigned p = static_cast<unsigned>(exp_total(key.y));
        const unsigned q = static_cast<unsigned>(std::popcount(key.dx));
        if (p + q == 0) continue;
        const Rational norm = Rational(1, static_cast<long>(p + q));
        unsigned pos = 0;
        for (std::uint32_t m = key.dx; m; m &= m - 1, ++pos) {
            const unsigned k = static_cast<unsigned>(std::countr_zero(m));
            WTermKey nk(key);
            nk.y[k] += 1;
            nk.dx &= ~(1u << k);
            const Rational f = c * norm;
            r.add_term(std::move(nk), (pos % 2) ? -f : f);
        }
    }
    return r;
}

namespace {

WeylFormElement exterior_d(const WeylFormElement& a) {
    WeylFormElement r(a.dim());
    for (const auto& [key, c] : a.terms()) {
        for (std::size_t k = 0; k < a.dim(); ++k) {
            if (key.x[k] == 0) continue;
            const std::uint32_t bit = 1u << k;
            if (key.dx & bit) continue;
            const int sgn = (std::popcount(key.dx & (bit - 1)) % 2) ? -1 : 1;
            WTermKey nk(key);
            nk.x[k] -= 1;
            nk.dx |= bit;
            const Rational f = c * Rational(static_cast<long>(key.x[k]));
            r.add_term(std::move(nk), (sgn > 0) ? f : -f);
        }
    }
    return r;
}

}  // namespace

WeylFormElement covariant_partial(const WeylFormElement& a, const FedosovInput& F) {
    WeylFormElement r = exterior_d(a);
    if (!F.connection_form().is_zero())
        r = r - graded_commutator(F.connection_form(), a, F).div_nu(1);
    return r;
}

WeylFormElement build_r(const FedosovInput& F, unsigned degree_bound) {
    const std::size_t d = F.dim();
    WeylFormElement r(d);
    std::vector<WeylFormElement> bucket(degree_bound + 1, WeylFormElement(d));
    const WeylFormElement source = F.omega_series() - F.curvature();
    for (unsigned deg = 3; deg <= degree_bound; ++deg) {
        WeylFormElement src = source.fdeg_component(deg - 1);
        if (deg >= 4) src = src + covariant_partial(bucket[deg - 1], F);
        // (1/nu) r^2 at Fedosov degree deg - 1: bucket pairs of total deg + 1.
        WeylFormElement rr(d);
        for (unsigned e = 3; e + 3 <= deg + 1; ++e) {
            const unsigned f = deg + 1 - e;
            if (f < 3 || f > degree_bound) continue;
            if (bucket[e].is_zero() || bucket[f].is_zero()) continue;
            rr = rr + fiber_star(bucket[e], bucket[f], F);
        }
        if (!rr.is_zero()) src = src - rr.div_nu(1);
        bucket[deg] = delta_inv(src);
        r = r + bucket[deg];
    }
    return r;
}

WeylFormElement r_residual(const FedosovInput& F, const WeylFormElement& r,
                           unsigned degree_bound) {
    WeylFormElement res = delta_op(r) + F.curvature() - covariant_partial(r, F) -
                          F.omega_series();
    const WeylFormElement rr = fiber_star(r, r, F);
    if (!rr.is_zero()) res = res + rr.div_nu(1);
    return res.fdeg_truncated(degree_bound - 1);
}

WeylFormElement from_base_poly(const Poly& u, const FedosovInput& F) {
    const Poly uu = u.with_vars(F.base());
    WeylFormElement a(F.dim());
    for (const auto& [e, c] : uu.terms()) {
        if (!c.is_rational())
            throw FieldMismatchError("fedosov: base functions must have rational coefficients");
        a.add_term({F.remap_exp(e), Exp(F.dim(), 0), 0, 0}, c.rational());
    }
    return a;
}

NuSeries center_part(const WeylFormElement& a, const FedosovInput& F, int order) {
    NuSeries s(F.base(), order);
    for (const auto& [key, c] : a.terms()) {
        if (key.dx != 0 || exp_total(key.y) != 0) continue;
        if (key.nu > static_cast<unsigned>(order)) continue;
        Exp xe(F.base()->size(), 0);
        for (std::size_t i = 0; i < F.dim(); ++i) xe[F.coord(i)] = key.x[i];
        const int r = static_cast<int>(key.nu);
        s.set_coeff(r, s.coeff(r) + Poly::monomial(F.base(), std::move(xe), Scalar(c)));
    }
    return s;
}

WeylFormElement flat_lift(const FedosovInput& F, const WeylFormElement& r, const Poly& u,
                          unsigned degree_bound) {
    const std::size_t d = F.dim();
    std::vector<WeylFormElement> rbucket(degree_bound + 2, WeylFormElement(d));
    for (unsigned e = 3; e <= r.max_fdeg(); ++e)
        if (e < rbucket.size()) rbucket[e] = r.fdeg_component(e);

    WeylFormElement a = from_base_poly(u, F);
    std::vector<WeylFormElement> abucket(degree_bound + 1, WeylFormElement(d));
    abucket[0] = a;
    for (unsigned deg = 1; deg <= degree_bound; ++deg) {
        WeylFormElement src = covariant_partial(abucket[deg - 1], F);
        WeylFormElement comm(d);
        for (unsigned e = 3; e <= deg + 1 && e < rbucket.size(); ++e) {
            const unsigned f = deg + 1 - e;
            if (f > degree_bound || abucket[f].is_zero() || rbucket[e].is_zero()) continue;
            comm = comm + graded_commutator(rbucket[e], abucket[f], F);
        }
        if (!comm.is_zero()) src = src - comm.div_nu(1);
        abucket[deg] = delta_inv(src);
        a = a + abucket[deg];
    }
    return a;
}

WeylFormElement flatness_defect(const FedosovInput& F, const WeylFormElement& r,
                                const WeylFormElement& a, unsigned check_bound) {
    WeylFormElement D = covariant_partial(a, F) - delta_op(a) -
                        graded_commutator(r, a, F).div_nu(1);
    return D.fdeg_truncated(check_bound);
}

Quantizer::Quantizer(FedosovInput F, int order)
    : F_(std::move(F)), order_(order), lift_bound_(2 * static_cast<unsigned>(order) + 1) {
    if (order < 0) throw Error("fedosov::Quantizer: negative order");
    r_ = build_r(F_, 2 * static_cast<unsigned>(order) + 3);
}

WeylFormElement Quantizer::lift(const Poly& u) const { return flat_lift(F_, r_, u, lift_bound_); }

NuSeries Quantizer::star(const Poly& u, const Poly& v, int order) const {
    if (order > order_) throw Error("fedosov::Quantizer: order exceeds the built budget");
    const WeylFormElement qu = lift(u);
    const WeylFormElement qv = lift(v);
    return center_part(fiber_star(qu, qv, F_), F_, order);
}

StarOracle Quantizer::oracle() const {
    auto self = std::make_shared<const Quantizer>(*this);
    return [self](const Poly& u, const Poly& v, int order) { return self->star(u, v, order); };
}

NuSeries star(const FedosovInput& F, const Poly& u, const Poly& v, int order) {
    return Quantizer(F, order).star(u, v, order);
}

}  // namespace fedosov
}  // namespace starforge
