#pragma once

#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "starforge/monomial.hpp"
#include "starforge/rational.hpp"
#include "starforge/varset.hpp"

namespace starforge {

// Customization point: coefficient types may veto living inside a given
// generator context (the Scalar overload rejects parameter names colliding
// with polynomial generators). Default accepts everything.
template <class K>
inline void scalar_check_compatible(const K&, const VarSet&) {}

// Sparse multivariate polynomial over a coefficient field K, stored as a
// term map under the fixed deglex monomial order. No zero coefficients are
// ever stored. Values are immutable in spirit: all operations return fresh
// polynomials and the mutating helpers are used only during construction.
template <class K>
class SparsePoly {
public:
    using TermMap = std::map<Exp, K, DegLexLess>;

    SparsePoly() : vars_(VarSet::empty()) {}
    explicit SparsePoly(VarSetPtr vars) : vars_(std::move(vars)) {}

    static SparsePoly zero(VarSetPtr vars) { return SparsePoly(std::move(vars)); }

    static SparsePoly constant(VarSetPtr vars, K c) {
        SparsePoly p(std::move(vars));
        p.add_term(Exp(p.vars_->size(), 0), std::move(c));
        return p;
    }

    static SparsePoly monomial(VarSetPtr vars, Exp e, K c) {
        SparsePoly p(std::move(vars));
        if (e.size() != p.vars_->size()) throw Error("SparsePoly: exponent arity mismatch");
        p.add_term(std::move(e), std::move(c));
        return p;
    }

    static SparsePoly variable(const VarSetPtr& vars, std::size_t i) {
        Exp e(vars->size(), 0);
        e.at(i) = 1;
        return monomial(vars, std::move(e), K(1));
    }

    const VarSetPtr& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && exp_total(terms_.begin()->first) == 0);
    }

    K constant_term() const {
        Exp z(vars_->size(), 0);
        auto it = terms_.find(z);
        return it == terms_.end() ? K(0) : it->second;
    }

    long total_degree() const {
        if (terms_.empty()) return -1;
        return static_cast<long>(exp_total(terms_.rbegin()->first));
    }

    long degree_in(std::size_t var) const {
        long d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, static_cast<long>(e[var]));
        return d;
    }

    void add_term(Exp e, K c) {
        if (c == K(0)) return;
        scalar_check_compatible(c, *vars_);
        auto [it, fresh] = terms_.try_emplace(std::move(e), std::move(c));
        if (!fresh) {
            it->second = it->second + c;
            if (it->second == K(0)) terms_.erase(it);
        }
    }

    // Rebuilds the polynomial over `target`, translating exponents through
    // the name embedding. `target` must contain every generator of *this.
    SparsePoly with_vars(const VarSetPtr& target) const {
        if (same_vars(vars_, target)) return *this;
        auto emb = VarSet::embedding(*vars_, *target);
        SparsePoly r(target);
        for (const auto& [e, c] : terms_) {
            Exp ne(target->size(), 0);
            for (std::size_t i = 0; i < e.size(); ++i) ne[emb[i]] = e[i];
            r.terms_.emplace(std::move(ne), c);
        }
        return r;
    }

    static std::pair<SparsePoly, SparsePoly> aligned(const SparsePoly& a, const SparsePoly& b) {
        if (same_vars(a.vars_, b.vars_)) return {a, b};
        auto m = VarSet::merged(a.vars_, b.vars_);
        return {a.with_vars(m), b.with_vars(m)};
    }

    friend SparsePoly operator+(const SparsePoly& a, const SparsePoly& b) {
        auto [x, y] = aligned(a, b);
        for (auto& [e, c] : y.terms_) x.add_term(e, c);
        return x;
    }

    friend SparsePoly operator-(const SparsePoly& a, const SparsePoly& b) {
        auto [x, y] = aligned(a, b);
        for (auto& [e, c] : y.terms_) x.add_term(e, -c);
        return x;
    }

    SparsePoly operator-() const {
        SparsePoly r(vars_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }

    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
        auto [x, y] = aligned(a, b);
        SparsePoly r(x.vars_);
        for (const auto& [ea, ca] : x.terms_)
            for (const auto& [eb, cb] : y.terms_) r.add_term(exp_add(ea, eb), ca * cb);
        return r;
    }

    SparsePoly scaled(const K& s) const {
        SparsePoly r(vars_);
        if (s == K(0)) return r;
        for (const auto& [e, c] : terms_) r.add_term(e, c * s);
        return r;
    }

    friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
        auto [x, y] = aligned(a, b);
        return x.terms_ == y.terms_;
    }
    friend bool operator!=(const SparsePoly& a, const SparsePoly& b) { return !(a == b); }

    SparsePoly derivative(std::size_t var) const {
        SparsePoly r(vars_);
        for (const auto& [e, c] : terms_) {
            if (e[var] == 0) continue;
            Exp ne(e);
            ne[var] -= 1;
            r.add_term(std::move(ne), c * K(static_cast<long>(e[var])));
        }
        return r;
    }

    // Multi-derivative with falling-factorial coefficients.
    SparsePoly deriv_multi(const Exp& alpha) const {
        SparsePoly r(vars_);
        for (const auto& [e, c] : terms_) {
            Rational f = deriv_factor(e, alpha);
            if (f.is_zero()) continue;
            r.add_term(exp_sub(e, alpha), c * K(f));
        }
        return r;
    }

    // Substitutes 0 for every listed generator.
    SparsePoly subs_zero(const std::vector<std::size_t>& idxs) const {
        SparsePoly r(vars_);
        for (const auto& [e, c] : terms_) {
            bool kill = false;
            for (auto i : idxs)
                if (e[i] != 0) { kill = true; break; }
            if (!kill) r.terms_.emplace(e, c);
        }
        return r;
    }

    // Identifies generator `from` with generator `to` (exponents add).
    SparsePoly merge_vars(std::size_t from, std::size_t to) const {
        SparsePoly r(vars_);
        for (const auto& [e, c] : terms_) {
            Exp ne(e);
            ne[to] += ne[from];
            ne[from] = 0;
            r.add_term(std::move(ne), c);
        }
        return r;
    }

    // Full evaluation at a point (one value per generator).
    K eval(const std::vector<K>& point) const {
        if (point.size() != vars_->size()) throw Error("SparsePoly: eval arity mismatch");
        K acc(0);
        for (const auto& [e, c] : terms_) {
            K t = c;
            for (std::size_t i = 0; i < e.size(); ++i)
                for (std::uint32_t k = 0; k < e[i]; ++k) t = t * point[i];
            acc = acc + t;
        }
        return acc;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            if (!first) os << " + ";
            first = false;
            os << "(" << coeff_str(it->second) << ")";
            for (std::size_t i = 0; i < it->first.size(); ++i) {
                if (it->first[i] == 0) continue;
                os << "*" << vars_->name(i);
                if (it->first[i] > 1) os << "^" << it->first[i];
            }
        }
        return os.str();
    }

private:
    template <class T>
    static std::string coeff_str(const T& c) {
        if constexpr (requires { c.str(); }) {
            return c.str();
        } else {
            std::ostringstream os;
            os << c;
            return os.str();
        }
    }

    VarSetPtr vars_;
    TermMap terms_;
};

// Polynomials over the plain rationals: the home of formal parameters
// (rational-function numerators and denominators).
using ParamPoly = SparsePoly<Rational>;

}  // namespace starforge
