#include "starforge/multidiffop.hpp"

#include <sstream>

namespace starforge {

MultiDiffOp::MultiDiffOp(VarSetPtr vars, int arity) : vars_(std::move(vars)), arity_(arity) {
    if (arity < 1) throw ArityError("MultiDiffOp: arity must be positive");
}

MultiDiffOp MultiDiffOp::pointwise_mul(const VarSetPtr& vars) {
    MultiDiffOp mu(vars, 2);
    const Exp z(vars->size(), 0);
    mu.add_term({z, z}, Poly::constant(vars, Scalar(1)));
    return mu;
}

MultiDiffOp MultiDiffOp::vector_field(const std::vector<Poly>& components) {
    if (components.empty()) throw Error("MultiDiffOp: empty vector field");
    VarSetPtr vars = components[0].vars();
    if (components.size() != vars->size())
        throw DimensionError("MultiDiffOp: vector field needs one component per generator");
    MultiDiffOp X(vars, 1);
    for (std::size_t i = 0; i < components.size(); ++i) {
        Exp e(vars->size(), 0);
        e[i] = 1;
        X.add_term({std::move(e)}, components[i].with_vars(vars));
    }
    return X;
}

MultiDiffOp MultiDiffOp::partial(const VarSetPtr& vars, const Exp& alpha) {
    MultiDiffOp D(vars, 1);
    D.add_term({alpha}, Poly::constant(vars, Scalar(1)));
    return D;
}

void MultiDiffOp::add_term(DerivKey key, const Poly& coeff) {
    if (coeff.is_zero()) return;
    if (static_cast<int>(key.size()) != arity_)
        throw ArityError("MultiDiffOp: derivative signature arity mismatch");
    for (const auto& a : key)
        if (a.size() != vars_->size())
            throw Error("MultiDiffOp: derivative multi-index arity mismatch");
    Poly c = coeff.with_vars(vars_);
    auto [it, fresh] = terms_.try_emplace(std::move(key), std::move(c));
    if (!fresh) {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly MultiDiffOp::eval(const std::vector<Poly>& args) const {
    if (static_cast<int>(args.size()) != arity_)
        throw ArityError("MultiDiffOp: expected " + std::to_string(arity_) + " arguments, got " +
                         std::to_string(args.size()));
    std::vector<Poly> aligned_args;
    aligned_args.reserve(args.size());
    for (const auto& a : args) aligned_args.push_back(a.with_vars(vars_));
    Poly acc = Poly::zero(vars_);
    for (const auto& [key, coeff] : terms_) {
        Poly t = coeff;
        for (int j = 0; j < arity_; ++j) {
            t = t * aligned_args[static_cast<std::size_t>(j)].deriv_multi(key[static_cast<std::size_t>(j)]);
            if (t.is_zero()) break;
        }
        acc = acc + t;
    }
    return acc;
}

MultiDiffOp MultiDiffOp::insert(const MultiDiffOp& B0, int j) const {
    if (j < 0 || j >= arity_) throw ArityError("MultiDiffOp: insertion slot out of range");
    auto [A, B] = aligned(*this, B0);
    const int rb = B.arity_;
    MultiDiffOp R(A.vars_, A.arity_ + rb - 1);
    for (const auto& [ka, ca] : A.terms_) {
        const Exp& alpha_j = ka[static_cast<std::size_t>(j)];
        // d^{alpha_j} distributes over B's coefficient and B's argument slots.
        const auto splits = exp_splits(alpha_j, static_cast<std::size_t>(rb) + 1);
        for (const auto& [kb, cb] : B.terms_) {
            for (const auto& parts : splits) {
                const Poly dcb = cb.deriv_multi(parts[0]);
                if (dcb.is_zero()) continue;
                const Rational mult = exp_multinomial(alpha_j, parts);
                DerivKey key;
                key.reserve(static_cast<std::size_t>(R.arity_));
                for (int s = 0; s < j; ++s) key.push_back(ka[static_cast<std::size_t>(s)]);
                for (int s = 0; s < rb; ++s)
                    key.push_back(exp_add(kb[static_cast<std::size_t>(s)], parts[static_cast<std::size_t>(s) + 1]));
                for (int s = j + 1; s < A.arity_; ++s) key.push_back(ka[static_cast<std::size_t>(s)]);
                R.add_term(std::move(key), (ca * dcb).scaled(Scalar(mult)));
            }
        }
    }
    return R;
}

MultiDiffOp MultiDiffOp::circ(const MultiDiffOp& B) const {
    MultiDiffOp acc(VarSet::merged(vars_, B.vars_), arity_ + B.arity_ - 1);
    const int db = B.degree();
    for (int j = 0; j < arity_; ++j) {
        MultiDiffOp t = insert(B, j);
        if ((db * j) % 2 != 0) t = -t;  // sign (-1)^{|B| (j-1)} with j one-based
        acc = acc + t;
    }
    return acc;
}

MultiDiffOp MultiDiffOp::scaled(const Scalar& s) const {
    MultiDiffOp r(vars_, arity_);
    if (s.is_zero()) return r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, c.scaled(s));
    return r;
}

MultiDiffOp MultiDiffOp::with_vars(const VarSetPtr& target) const {
    if (same_vars(vars_, target)) return *this;
    auto emb = VarSet::embedding(*vars_, *target);
    MultiDiffOp r(target, arity_);
    for (const auto& [k, c] : terms_) {
        DerivKey nk;
        nk.reserve(k.size());
        for (const auto& a : k) {
            Exp na(target->size(), 0);
            for (std::size_t i = 0; i < a.size(); ++i) na[emb[i]] = a[i];
            nk.push_back(std::move(na));
        }
        r.add_term(std::move(nk), c.with_vars(target));
    }
    return r;
}

std::pair<MultiDiffOp, MultiDiffOp> MultiDiffOp::aligned(const MultiDiffOp& a, const MultiDiffOp& b) {
    if (same_vars(a.vars_, b.vars_)) return {a, b};
    auto m = VarSet::merged(a.vars_, b.vars_);
    return {a.with_vars(m), b.with_vars(m)};
}

MultiDiffOp operator+(const MultiDiffOp& a, const MultiDiffOp& b) {
    if (a.arity_ != b.arity_) throw ArityError("MultiDiffOp: arity mismatch in sum");
    auto [x, y] = MultiDiffOp::aligned(a, b);
    for (const auto& [k, c] : y.terms_) x.add_term(k, c);
    return x;
}

MultiDiffOp operator-(const MultiDiffOp& a, const MultiDiffOp& b) { return a + (-b); }

bool operator==(const MultiDiffOp& a, const MultiDiffOp& b) {
    if (a.arity_ != b.arity_) return false;
    auto [x, y] = MultiDiffOp::aligned(a, b);
    return x.terms_ == y.terms_;
}

unsigned MultiDiffOp::max_order_in_slot(int j) const {
    unsigned m = 0;
    for (const auto& [k, c] : terms_)
        m = std::max(m, static_cast<unsigned>(exp_total(k[static_cast<std::size_t>(j)])));
    return m;
}

std::string MultiDiffOp::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "[" << c.str() << "]";
        for (std::size_t j = 0; j < k.size(); ++j) {
            os << " d" << j << "^(";
            for (std::size_t i = 0; i < k[j].size(); ++i) {
                if (i) os << ",";
                os << k[j][i];
            }
            os << ")";
        }
    }
    return os.str();
}

MultiDiffOp gerstenhaber_bracket(const MultiDiffOp& a, const MultiDiffOp& b) {
    MultiDiffOp ab = a.circ(b);
    MultiDiffOp ba = b.circ(a);
    if ((a.degree() * b.degree()) % 2 != 0) return ab + ba;
    return ab - ba;
}

MultiDiffOp hochschild_d(const MultiDiffOp& a) {
    const MultiDiffOp mu = MultiDiffOp::pointwise_mul(a.vars());
    return -gerstenhaber_bracket(mu, a);
}

bool CochainSeries::is_zero() const {
    for (const auto& x : c)
        if (!x.is_zero()) return false;
    return true;
}

int CochainSeries::first_nonzero_order() const {
    for (int r = 0; r < static_cast<int>(c.size()); ++r)
        if (!c[static_cast<std::size_t>(r)].is_zero()) return r;
    return -1;
}

}  // namespace starforge
