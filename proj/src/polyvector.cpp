#include "starforge/polyvector.hpp"

#include <algorithm>

namespace starforge {

namespace {

// Sign of the permutation sorting idx ascending; 0 when an index repeats.
int sort_sign(std::vector<unsigned>& idx) {
    int sign = 1;
    for (std::size_t i = 0; i + 1 < idx.size(); ++i)
        for (std::size_t j = 0; j + 1 < idx.size() - i; ++j)
            if (idx[j] > idx[j + 1]) {
                std::swap(idx[j], idx[j + 1]);
                sign = -sign;
            }
    for (std::size_t i = 0; i + 1 < idx.size(); ++i)
        if (idx[i] == idx[i + 1]) return 0;
    return sign;
}

}  // namespace

PolyVector::PolyVector(VarSetPtr vars, int degree) : vars_(std::move(vars)), degree_(degree) {
    if (degree < 0) throw Error("PolyVector: negative degree");
}

void PolyVector::add_component(const Index& idx, const Poly& value) {
    if (static_cast<int>(idx.size()) != degree_ + 1)
        throw DimensionError("PolyVector: index tuple length mismatch");
    for (auto i : idx)
        if (i >= vars_->size()) throw DimensionError("PolyVector: direction out of range");
    if (value.is_zero()) return;
    Index sorted(idx);
    const int sign = sort_sign(sorted);
    if (sign == 0) {
        throw Error("PolyVector: nonzero component on a repeated index tuple");
    }
    const Poly v = (sign > 0) ? value : -value;
    // Store the full skewsymmetric orbit of the sorted representative.
    Index perm(sorted);
    do {
        Index tmp(perm);
        const int s = sort_sign(tmp);
        Poly contrib = (s > 0) ? v : -v;
        auto [it, fresh] = comp_.try_emplace(perm, contrib);
        if (!fresh) {
            it->second = it->second + contrib;
            if (it->second.is_zero()) comp_.erase(it);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
}

Poly PolyVector::component(const Index& idx) const {
    auto it = comp_.find(idx);
    if (it == comp_.end()) return Poly::zero(vars_);
    return it->second;
}

PolyVector operator+(const PolyVector& a, const PolyVector& b) {
    if (a.degree_ != b.degree_) throw Error("PolyVector: degree mismatch in sum");
    PolyVector r(VarSet::merged(a.vars_, b.vars_), a.degree_);
    for (const auto& [i, p] : a.comp_) {
        auto [it, fresh] = r.comp_.try_emplace(i, p.with_vars(r.vars_));
        (void)it; (void)fresh;
    }
    for (const auto& [i, p] : b.comp_) {
        auto [it, fresh] = r.comp_.try_emplace(i, Poly::zero(r.vars_));
        it->second = it->second + p;
        if (it->second.is_zero()) r.comp_.erase(it);
    }
    return r;
}

PolyVector PolyVector::scaled(const Scalar& s) const {
    PolyVector r(vars_, degree_);
    if (s.is_zero()) return r;
    for (const auto& [i, p] : comp_) r.comp_.emplace(i, p.scaled(s));
    return r;
}

bool operator==(const PolyVector& a, const PolyVector& b) {
    if (a.degree_ != b.degree_) return false;
    if (a.comp_.size() != b.comp_.size()) return false;
    for (const auto& [i, p] : a.comp_) {
        if (b.component(i) != p) return false;
    }
    return true;
}

bool PolyVector::skewsymmetric() const {
    for (const auto& [idx, p] : comp_) {
        Index sorted(idx);
        const int sign = sort_sign(sorted);
        if (sign == 0) return false;
        const Poly canon = component(sorted);
        if ((sign > 0 && p != canon) || (sign < 0 && p != -canon)) return false;
    }
    return true;
}

Poly PolyVector::poisson_bracket(const Poly& u, const Poly& v) const {
    if (degree_ != 1) throw Error("PolyVector: poisson_bracket needs a bivector");
    const Poly uu = u.with_vars(vars_);
    const Poly vv = v.with_vars(vars_);
    Poly acc = Poly::zero(vars_);
    for (const auto& [idx, p] : comp_)
        acc = acc + p * uu.derivative(idx[0]) * vv.derivative(idx[1]);
    return acc;
}

MultiDiffOp PolyVector::bracket_op() const {
    if (degree_ != 1) throw Error("PolyVector: bracket_op needs a bivector");
    MultiDiffOp op(vars_, 2);
    for (const auto& [idx, p] : comp_) {
        Exp a(vars_->size(), 0), b(vars_->size(), 0);
        a[idx[0]] = 1;
        b[idx[1]] = 1;
        op.add_term({std::move(a), std::move(b)}, p);
    }
    return op;
}

PolyVector PolyVector::schouten_self() const {
    if (degree_ != 1) throw Error("PolyVector: schouten_self needs a bivector");
    PolyVector t(vars_, 2);
    const std::size_t m = vars_->size();
    for (unsigned i = 0; i < m; ++i)
        for (unsigned j = i + 1; j < m; ++j)
            for (unsigned k = j + 1; k < m; ++k) {
                Poly acc = Poly::zero(vars_);
                for (unsigned l = 0; l < m; ++l) {
                    acc = acc + component({i, l}) * component({j, k}).derivative(l);
                    acc = acc + component({j, l}) * component({k, i}).derivative(l);
                    acc = acc + component({k, l}) * component({i, j}).derivative(l);
                }
                t.add_component({i, j, k}, acc);
            }
    return t;
}

}  // namespace starforge
