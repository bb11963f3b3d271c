#include "starforge/symmetry.hpp"

#include <algorithm>

namespace starforge {
namespace symmetry {

namespace {

MultiDiffOp identity_op(const VarSetPtr& vars) {
    MultiDiffOp id(vars, 1);
    id.add_term({Exp(vars->size(), 0)}, Poly::constant(vars, Scalar(1)));
    return id;
}

// Composition of two arity-1 operator series: (A o B)_r = sum A_s o B_t.
std::vector<MultiDiffOp> series_compose(const std::vector<MultiDiffOp>& a,
                                        const std::vector<MultiDiffOp>& b,
                                        const VarSetPtr& vars) {
    const int n = static_cast<int>(a.size()) - 1;
    std::vector<MultiDiffOp> r(a.size(), MultiDiffOp::zero(vars, 1));
    for (int s = 0; s <= n; ++s) {
        if (a[static_cast<std::size_t>(s)].is_zero()) continue;
        for (int t = 0; s + t <= n; ++t) {
            if (b[static_cast<std::size_t>(t)].is_zero()) continue;
            r[static_cast<std::size_t>(s + t)] =
                r[static_cast<std::size_t>(s + t)] +
                a[static_cast<std::size_t>(s)].insert(b[static_cast<std::size_t>(t)], 0);
        }
    }
    return r;
}

}  // namespace

OpSeries::OpSeries(VarSetPtr vars, int order) : vars_(std::move(vars)), order_(order) {
    if (order < 0) throw Error("OpSeries: negative order");
    t_.assign(static_cast<std::size_t>(order) + 1, MultiDiffOp::zero(vars_, 1));
}

void OpSeries::set(int r, const MultiDiffOp& op) {
    if (r < 1 || r > order_) throw Error("OpSeries: order slot out of range (T starts at nu^1)");
    if (op.arity() != 1) throw ArityError("OpSeries: equivalence transforms use arity-1 operators");
    t_.at(static_cast<std::size_t>(r)) = op.with_vars(vars_);
}

OpSeries OpSeries::operator-() const {
    OpSeries r(vars_, order_);
    for (int k = 1; k <= order_; ++k) r.t_[static_cast<std::size_t>(k)] = -t_[static_cast<std::size_t>(k)];
    return r;
}

unsigned OpSeries::max_op_order() const {
    unsigned m = 1;
    for (const auto& op : t_)
        if (!op.is_zero()) m = std::max(m, op.max_order_in_slot(0));
    return m;
}

Transform::Transform(VarSetPtr vars, int order) : vars_(std::move(vars)), order_(order) {
    e_.assign(static_cast<std::size_t>(order) + 1, MultiDiffOp::zero(vars_, 1));
}

Transform Transform::exp(const OpSeries& T) {
    Transform E(T.vars(), T.order());
    std::vector<MultiDiffOp> tser;
    tser.reserve(static_cast<std::size_t>(T.order()) + 1);
    tser.push_back(MultiDiffOp::zero(T.vars(), 1));
    for (int r = 1; r <= T.order(); ++r) tser.push_back(T.at(r));

    std::vector<MultiDiffOp> acc(tser.size(), MultiDiffOp::zero(T.vars(), 1));
    acc[0] = identity_op(T.vars());
    std::vector<MultiDiffOp> pow = acc;  // T^0 = id
    Rational kfac(1);
    for (int k = 1; k <= T.order(); ++k) {
        pow = series_compose(pow, tser, T.vars());
        kfac = kfac * Rational(1, k);
        for (int r = k; r <= T.order(); ++r)
            acc[static_cast<std::size_t>(r)] =
                acc[static_cast<std::size_t>(r)] +
                pow[static_cast<std::size_t>(r)].scaled(Scalar(kfac));
    }
    E.e_ = std::move(acc);
    return E;
}

NuSeries Transform::apply(const NuSeries& f) const {
    const int ord = std::min(order_, f.order());
    NuSeries out(VarSet::merged(vars_, f.vars()), ord);
    for (int r = 0; r <= ord; ++r) {
        if (e_[static_cast<std::size_t>(r)].is_zero()) continue;
        for (int s = 0; r + s <= ord; ++s)
            out.set_coeff(r + s,
                          out.coeff(r + s) + e_[static_cast<std::size_t>(r)].eval(f.coeff(s)));
    }
    return out;
}

StarProduct transform_star(const StarProduct& S, const OpSeries& T,
                           std::optional<unsigned> validate_degree) {
    if (T.order() < S.order())
        throw Error("transform_star: transform truncation shorter than the product's");
    const Transform E = Transform::exp(T);
    const Transform Einv = Transform::exp(-T);
    const StarProduct base(S);
    StarOracle transformed = [E, Einv, base](const Poly& u, const Poly& v, int ord) {
        const NuSeries tu = Einv.apply(NuSeries::from_poly(u, ord));
        const NuSeries tv = Einv.apply(NuSeries::from_poly(v, ord));
        return E.apply(base.apply(tu, tv)).truncated(ord);
    };
    const unsigned M = T.max_op_order();
    auto bound = [M](int r) { return M * static_cast<unsigned>(r); };
    return extract_cochains(transformed, S.vars(), S.order(), S.poisson(), bound,
                            validate_degree);
}

CochainSeries derivation_defect(const StarProduct& S, const MultiDiffOp& X) {
    if (X.arity() != 1) throw ArityError("derivation_defect: X must be an arity-1 operator");
    CochainSeries d;
    d.order = S.order();
    for (int r = 0; r <= S.order(); ++r)
        d.c.push_back(gerstenhaber_bracket(X, S.cochain(r)));
    return d;
}

DefectReport strong_invariance_defect(const StarOracle& star, const PolyVector& poisson,
                                      const MomentMapData& M, unsigned max_degree, int order) {
    DefectReport rep;
    const auto basis = monomials_up_to(poisson.vars(), max_degree);
    for (std::size_t a = 0; a < M.j.size(); ++a) {
        for (const auto& m : basis) {
            NuSeries defect = star(M.j[a], m, order) - star(m, M.j[a], order);
            if (order >= 1) {
                const Poly br = poisson.poisson_bracket(M.j[a], m);
                defect = defect - NuSeries::from_poly(br, order - 1).shifted_up(1);
            }
            if (!defect.is_zero()) {
                rep.ok = false;
                rep.basis_a = static_cast<int>(a);
                rep.order = defect.first_nonzero_order();
                rep.witness = m.str();
                rep.defect = defect;
                return rep;
            }
        }
    }
    return rep;
}

DefectReport covariance_defect(const StarOracle& star, const MomentMapData& M, int order) {
    DefectReport rep;
    const std::size_t d = M.lie.dim();
    if (M.j.size() != d) throw DimensionError("covariance_defect: one Hamiltonian per basis element");
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
            Poly jab = Poly::zero(M.j[a].vars());
            for (std::size_t c = 0; c < d; ++c) {
                const Rational& f = M.lie.c(a, b, c);
                if (!f.is_zero()) jab = jab + M.j[c].scaled(Scalar(f));
            }
            NuSeries defect = star(M.j[a], M.j[b], order) - star(M.j[b], M.j[a], order);
            if (order >= 1) defect = defect - NuSeries::from_poly(jab, order - 1).shifted_up(1);
            if (!defect.is_zero()) {
                rep.ok = false;
                rep.basis_a = static_cast<int>(a);
                rep.basis_b = static_cast<int>(b);
                rep.order = defect.first_nonzero_order();
                rep.defect = defect;
                return rep;
            }
        }
    return rep;
}

DefectReport quantum_moment_defect(const StarProduct& S, const std::vector<NuSeries>& u_assign,
                                   const std::vector<MultiDiffOp>& fields, unsigned max_degree) {
    if (u_assign.size() != fields.size())
        throw DimensionError("quantum_moment_defect: assignment and fields sizes differ");
    DefectReport rep;
    const int order = S.order();
    const auto basis = monomials_up_to(S.vars(), max_degree);
    for (std::size_t a = 0; a < u_assign.size(); ++a) {
        for (const auto& m : basis) {
            const NuSeries ms = NuSeries::from_poly(m, order);
            NuSeries defect = S.apply(u_assign[a], ms) - S.apply(ms, u_assign[a]);
            if (order >= 1)
                defect = defect -
                         NuSeries::from_poly(fields[a].eval(m), order - 1).shifted_up(1);
            if (!defect.is_zero()) {
                rep.ok = false;
                rep.basis_a = static_cast<int>(a);
                rep.order = defect.first_nonzero_order();
                rep.witness = m.str();
                rep.defect = defect;
                return rep;
            }
        }
    }
    return rep;
}

TwistElement::TwistElement(gutt::LieAlgebraData lie, int order)
    : lie_(std::move(lie)), order_(order) {
    if (order < 0) throw Error("TwistElement: negative order");
    f_.resize(static_cast<std::size_t>(order) + 1);
    f_[0].emplace(std::make_pair(gutt::Word{}, gutt::Word{}), Rational(1));
}

namespace {

// Normal form of a word with plain (nu-free) brackets: word -> rational
// coefficients.
std::map<gutt::Word, Rational> plain_normal(const gutt::Word& w, const gutt::LieAlgebraData& L) {
    gutt::UEAElement e(&L, 0, /*nu_weighted=*/false);
    e.add_word(w, gutt::CoeffSeries::unit(0));
    std::map<gutt::Word, Rational> out;
    for (const auto& [nw, cs] : e.terms()) {
        if (cs.c[0].is_zero()) continue;
        out.emplace(nw, cs.c[0].rational());
    }
    return out;
}

}  // namespace

void TwistElement::add(int r, const gutt::Word& w1, const gutt::Word& w2, const Rational& coeff) {
    if (r < 1 || r > order_) throw Error("TwistElement: order slot out of range");
    if (coeff.is_zero()) return;
    for (const auto& [n1, c1] : plain_normal(w1, lie_))
        for (const auto& [n2, c2] : plain_normal(w2, lie_)) {
            auto& slot = f_[static_cast<std::size_t>(r)];
            auto [it, fresh] = slot.try_emplace({n1, n2}, coeff * c1 * c2);
            if (!fresh) {
                it->second += coeff * c1 * c2;
                if (it->second.is_zero()) slot.erase(it);
            }
        }
}

TwistElement TwistElement::abelian_exponential(std::size_t dim,
                                               const std::vector<std::vector<Rational>>& P,
                                               int order) {
    if (P.size() != dim) throw DimensionError("abelian_exponential: matrix size mismatch");
    TwistElement F(gutt::LieAlgebraData::abelian(dim), order);
    using Pair = std::pair<gutt::Word, gutt::Word>;
    std::map<Pair, Rational> pow;
    pow.emplace(Pair{{}, {}}, Rational(1));
    Rational kfac(1);
    for (int k = 1; k <= order; ++k) {
        std::map<Pair, Rational> next;
        for (const auto& [wp, c] : pow)
            for (std::size_t i = 0; i < dim; ++i)
                for (std::size_t j = 0; j < dim; ++j) {
                    if (P[i][j].is_zero()) continue;
                    gutt::Word l(wp.first), rr(wp.second);
                    l.push_back(static_cast<std::uint8_t>(i));
                    rr.push_back(static_cast<std::uint8_t>(j));
                    std::sort(l.begin(), l.end());
                    std::sort(rr.begin(), rr.end());
                    const Rational add = c * P[i][j] * Rational(1, 2);
                    auto [it, fresh] = next.try_emplace(Pair{std::move(l), std::move(rr)}, add);
                    if (!fresh) it->second += add;
                }
        pow = std::move(next);
        kfac = kfac * Rational(1, k);
        for (const auto& [wp, c] : pow) {
            const Rational v = c * kfac;
            if (!v.is_zero()) F.add(k, wp.first, wp.second, v);
        }
    }
    return F;
}

namespace {

struct T3Key {
    gutt::Word a, b, c;
    friend bool operator<(const T3Key& x, const T3Key& y) {
        if (x.a != y.a) return x.a < y.a;
        if (x.b != y.b) return x.b < y.b;
        return x.c < y.c;
    }
    friend bool operator==(const T3Key& x, const T3Key& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c;
    }
};

// Triple tensor product of enveloping algebras with per-order rational
// coefficients, enough for the cocycle comparison.
class Tensor3 {
public:
    Tensor3(const gutt::LieAlgebraData* L, int order) : lie_(L), order_(order) {}

    void add(const gutt::Word& a, const gutt::Word& b, const gutt::Word& c, int r,
             const Rational& coeff) {
        if (coeff.is_zero() || r > order_) return;
        for (const auto& [na, ca] : plain_normal(a, *lie_))
            for (const auto& [nb, cb] : plain_normal(b, *lie_))
                for (const auto& [nc, cc] : plain_normal(c, *lie_)) {
                    put({na, nb, nc}, r, coeff * ca * cb * cc);
                }
    }

    Tensor3 mul(const Tensor3& o) const {
        Tensor3 r(lie_, order_);
        for (const auto& [k1, c1] : t_)
            for (const auto& [k2, c2] : o.t_) {
                for (int s = 0; s <= order_; ++s) {
                    if (c1[static_cast<std::size_t>(s)].is_zero()) continue;
                    for (int t = 0; s + t <= order_; ++t) {
                        if (c2[static_cast<std::size_t>(t)].is_zero()) continue;
                        gutt::Word a(k1.a), b(k1.b), c(k1.c);
                        a.insert(a.end(), k2.a.begin(), k2.a.end());
                        b.insert(b.end(), k2.b.begin(), k2.b.end());
                        c.insert(c.end(), k2.c.begin(), k2.c.end());
                        r.add(a, b, c, s + t,
                              c1[static_cast<std::size_t>(s)] * c2[static_cast<std::size_t>(t)]);
                    }
                }
            }
        return r;
    }

    // First order with any nonzero coefficient in the difference with o.
    int first_difference(const Tensor3& o) const {
        for (int r = 0; r <= order_; ++r) {
            auto collect = [r](const Tensor3& x) {
                std::map<T3Key, Rational> m;
                for (const auto& [k, c] : x.t_)
                    if (!c[static_cast<std::size_t>(r)].is_zero())
                        m.emplace(k, c[static_cast<std::size_t>(r)]);
                return m;
            };
            if (collect(*this) != collect(o)) return r;
        }
        return -1;
    }

private:
    void put(T3Key k, int r, const Rational& v) {
        if (v.is_zero()) return;
        auto [it, fresh] =
            t_.try_emplace(std::move(k), std::vector<Rational>(static_cast<std::size_t>(order_) + 1,
                                                               Rational(0)));
        it->second[static_cast<std::size_t>(r)] += v;
    }

    const gutt::LieAlgebraData* lie_;
    int order_;
    std::map<T3Key, std::vector<Rational>> t_;
};

// All coproduct splits of a word: Delta(w) = sum over position subsets
// w_S (x) w_{S^c}, both legs keeping the relative order.
std::vector<std::pair<gutt::Word, gutt::Word>> coproduct_splits(const gutt::Word& w) {
    std::vector<std::pair<gutt::Word, gutt::Word>> out;
    const std::size_t n = w.size();
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        gutt::Word l, r;
        for (std::size_t i = 0; i < n; ++i)
            ((mask >> i) & 1u ? l : r).push_back(w[i]);
        out.emplace_back(std::move(l), std::move(r));
    }
    return out;
}

}  // namespace

TwistDefectReport twist_cocycle_defect(const TwistElement& F) {
    TwistDefectReport rep;
    const auto& L = F.lie();
    const int N = F.order();

    // Counit axiom per order.
    for (int r = 0; r <= N; ++r) {
        std::map<gutt::Word, Rational> left, right;
        for (const auto& [wp, c] : F.component(r)) {
            if (wp.first.empty()) {
                auto [it, fresh] = left.try_emplace(wp.second, c);
                if (!fresh) it->second += c;
            }
            if (wp.second.empty()) {
                auto [it, fresh] = right.try_emplace(wp.first, c);
                if (!fresh) it->second += c;
            }
        }
        auto prune = [](std::map<gutt::Word, Rational>& m) {
            for (auto it = m.begin(); it != m.end();)
                it = it->second.is_zero() ? m.erase(it) : std::next(it);
        };
        prune(left);
        prune(right);
        const bool ok =
            (r == 0) ? (left.size() == 1 && left.count({}) && left.at({}) == Rational(1) &&
                        right.size() == 1 && right.count({}) && right.at({}) == Rational(1))
                     : (left.empty() && right.empty());
        if (!ok) {
            rep.counit_ok = false;
            if (rep.first_bad_order < 0) rep.first_bad_order = r;
            rep.detail = "counit defect at nu^" + std::to_string(r);
        }
    }

    // Cocycle axiom: (Delta (x) id)(F) (F (x) 1) == (id (x) Delta)(F) (1 (x) F).
    Tensor3 d1F(&L, N), d2F(&L, N), F1(&L, N), F2(&L, N);
    for (int r = 0; r <= N; ++r) {
        for (const auto& [wp, c] : F.component(r)) {
            for (const auto& [l, m] : coproduct_splits(wp.first)) d1F.add(l, m, wp.second, r, c);
            for (const auto& [m, rr] : coproduct_splits(wp.second)) d2F.add(wp.first, m, rr, r, c);
            F1.add(wp.first, wp.second, {}, r, c);
            F2.add({}, wp.first, wp.second, r, c);
        }
    }
    const Tensor3 lhs = d1F.mul(F1);
    const Tensor3 rhs = d2F.mul(F2);
    const int bad = lhs.first_difference(rhs);
    if (bad >= 0) {
        rep.cocycle_ok = false;
        if (rep.first_bad_order < 0 || bad < rep.first_bad_order) rep.first_bad_order = bad;
        rep.detail += std::string(rep.detail.empty() ? "" : "; ") + "cocycle defect at nu^" +
                      std::to_string(bad);
    }
    return rep;
}

namespace {

Poly act_word(const gutt::Word& w, const std::vector<MultiDiffOp>& action, const Poly& u) {
    Poly r = u;
    for (auto it = w.rbegin(); it != w.rend(); ++it) r = action[*it].eval(r);
    return r;
}

void check_action(const TwistElement& F, const std::vector<MultiDiffOp>& action) {
    const auto& L = F.lie();
    if (action.size() != L.dim())
        throw DimensionError("apply_udf: one derivation per basis element required");
    for (const auto& D : action) {
        if (D.arity() != 1) throw ArityError("apply_udf: actions are arity-1 operators");
        if (!hochschild_d(D).is_zero())
            throw Error("apply_udf: action operator is not a derivation of the pointwise product");
    }
    for (std::size_t a = 0; a < L.dim(); ++a)
        for (std::size_t b = 0; b < L.dim(); ++b) {
            MultiDiffOp lhs = action[a].insert(action[b], 0) - action[b].insert(action[a], 0);
            MultiDiffOp rhs = MultiDiffOp::zero(action[a].vars(), 1);
            for (std::size_t c = 0; c < L.dim(); ++c) {
                const Rational& f = L.c(a, b, c);
                if (!f.is_zero()) rhs = rhs + action[c].scaled(Scalar(f));
            }
            if (lhs != rhs)
                throw Error("apply_udf: action fails the Lie algebra morphism check");
        }
}

}  // namespace

NuSeries apply_udf(const TwistElement& F, const std::vector<MultiDiffOp>& action, const Poly& u,
                   const Poly& v, int order) {
    check_action(F, action);
    VarSetPtr vars = VarSet::merged(u.vars(), v.vars());
    for (const auto& D : action) vars = VarSet::merged(vars, D.vars());
    NuSeries out(vars, order);
    for (int r = 0; r <= std::min(order, F.order()); ++r) {
        Poly acc = Poly::zero(vars);
        for (const auto& [wp, c] : F.component(r))
            acc = acc + (act_word(wp.first, action, u) * act_word(wp.second, action, v))
                            .scaled(Scalar(c));
        out.set_coeff(r, acc);
    }
    return out;
}

StarOracle udf_oracle(const TwistElement& F, const std::vector<MultiDiffOp>& action) {
    check_action(F, action);
    const TwistElement Fc(F);
    const std::vector<MultiDiffOp> act(action);
    return [Fc, act](const Poly& u, const Poly& v, int order) {
        VarSetPtr vars = VarSet::merged(u.vars(), v.vars());
        for (const auto& D : act) vars = VarSet::merged(vars, D.vars());
        NuSeries out(vars, order);
        for (int r = 0; r <= std::min(order, Fc.order()); ++r) {
            Poly acc = Poly::zero(vars);
            for (const auto& [wp, c] : Fc.component(r))
                acc = acc + (act_word(wp.first, act, u) * act_word(wp.second, act, v))
                                .scaled(Scalar(c));
            out.set_coeff(r, acc);
        }
        return out;
    };
}

}  // namespace symmetry
}  // namespace starforge
