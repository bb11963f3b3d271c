#include "starforge/nuseries.hpp"

#include <algorithm>
#include <sstream>

namespace starforge {

NuSeries::NuSeries(VarSetPtr vars, int order) : vars_(std::move(vars)), order_(order) {
    if (order < 0) throw Error("NuSeries: negative truncation order");
    c_.assign(static_cast<std::size_t>(order) + 1, Poly::zero(vars_));
}

NuSeries NuSeries::from_poly(const Poly& p, int order) {
    NuSeries s(p.vars(), order);
    s.c_[0] = p;
    return s;
}

NuSeries NuSeries::one(const VarSetPtr& vars, int order) {
    return from_poly(Poly::constant(vars, Scalar(1)), order);
}

void NuSeries::set_coeff(int r, const Poly& p) {
    auto& slot = c_.at(static_cast<std::size_t>(r));
    if (same_vars(p.vars(), vars_)) {
        slot = p;
        return;
    }
    auto merged = VarSet::merged(vars_, p.vars());
    vars_ = merged;
    for (auto& q : c_) q = q.with_vars(merged);
    c_[static_cast<std::size_t>(r)] = p.with_vars(merged);
}

void NuSeries::renormalize() {
    VarSetPtr m = vars_;
    for (const auto& p : c_) m = VarSet::merged(m, p.vars());
    vars_ = m;
    for (auto& p : c_) p = p.with_vars(m);
}

bool NuSeries::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Poly& p) { return p.is_zero(); });
}

int NuSeries::first_nonzero_order() const {
    for (int r = 0; r <= order_; ++r)
        if (!c_[static_cast<std::size_t>(r)].is_zero()) return r;
    return -1;
}

NuSeries operator+(const NuSeries& a, const NuSeries& b) {
    NuSeries r(VarSet::merged(a.vars_, b.vars_), std::min(a.order_, b.order_));
    for (int k = 0; k <= r.order_; ++k) r.set_coeff(k, a.coeff(k) + b.coeff(k));
    return r;
}

NuSeries operator-(const NuSeries& a, const NuSeries& b) {
    NuSeries r(VarSet::merged(a.vars_, b.vars_), std::min(a.order_, b.order_));
    for (int k = 0; k <= r.order_; ++k) r.set_coeff(k, a.coeff(k) - b.coeff(k));
    return r;
}

NuSeries NuSeries::operator-() const {
    NuSeries r(*this);
    for (auto& p : r.c_) p = -p;
    return r;
}

NuSeries operator*(const NuSeries& a, const NuSeries& b) {
    NuSeries r(VarSet::merged(a.vars_, b.vars_), std::min(a.order_, b.order_));
    for (int s = 0; s <= r.order_; ++s) {
        if (a.coeff(s).is_zero()) continue;
        for (int t = 0; s + t <= r.order_; ++t) {
            if (b.coeff(t).is_zero()) continue;
            r.set_coeff(s + t, r.coeff(s + t) + a.coeff(s) * b.coeff(t));
        }
    }
    return r;
}

bool operator==(const NuSeries& a, const NuSeries& b) {
    if (a.order_ != b.order_) return false;
    for (int k = 0; k <= a.order_; ++k)
        if (a.coeff(k) != b.coeff(k)) return false;
    return true;
}

NuSeries NuSeries::scaled(const Scalar& s) const {
    NuSeries r(*this);
    for (auto& p : r.c_) p = p.scaled(s);
    return r;
}

NuSeries NuSeries::mul_poly(const Poly& p) const {
    NuSeries r(*this);
    for (auto& q : r.c_) q = q * p;
    r.renormalize();
    return r;
}

NuSeries NuSeries::shifted_up(int k) const {
    NuSeries r(vars_, order_ + k);
    for (int j = 0; j <= order_; ++j) r.c_[static_cast<std::size_t>(j + k)] = c_[static_cast<std::size_t>(j)];
    return r;
}

NuSeries NuSeries::div_nu(int k) const {
    if (k == 0) return *this;
    if (order_ < k) throw Error("NuSeries: truncation order too small for nu-division");
    for (int j = 0; j < k; ++j) {
        if (!c_[static_cast<std::size_t>(j)].is_zero())
            throw NotDivisibleError("NuSeries: nonzero coefficient at nu^" + std::to_string(j) +
                                    " obstructs division by nu^" + std::to_string(k));
    }
    NuSeries r(vars_, order_ - k);
    for (int j = 0; j <= r.order_; ++j) r.c_[static_cast<std::size_t>(j)] = c_[static_cast<std::size_t>(j + k)];
    return r;
}

NuSeries NuSeries::truncated(int new_order) const {
    if (new_order >= order_) return *this;
    NuSeries r(vars_, new_order);
    for (int j = 0; j <= new_order; ++j) r.c_[static_cast<std::size_t>(j)] = c_[static_cast<std::size_t>(j)];
    return r;
}

NuSeries NuSeries::nu_negated() const {
    NuSeries r(*this);
    for (int j = 1; j <= order_; j += 2) r.c_[static_cast<std::size_t>(j)] = -r.c_[static_cast<std::size_t>(j)];
    return r;
}

std::string NuSeries::str() const {
    std::ostringstream os;
    bool first = true;
    for (int j = 0; j <= order_; ++j) {
        if (coeff(j).is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (j == 0)
            os << coeff(j).str();
        else
            os << "nu^" << j << "*[" << coeff(j).str() << "]";
    }
    if (first) os << "0";
    os << " (mod nu^" << order_ + 1 << ")";
    return os.str();
}

}  // namespace starforge
