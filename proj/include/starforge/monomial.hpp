#pragma once

#include <cstdint>
#include <vector>

#include "starforge/rational.hpp"

namespace starforge {

// Exponent multi-index, one entry per generator of the owning context.
using Exp = std::vector<std::uint32_t>;

inline std::uint64_t exp_total(const Exp& e) {
    std::uint64_t t = 0;
    for (auto x : e) t += x;
    return t;
}

// Degree-lexicographic order: total degree first, then lexicographic on the
// exponent vector. The fixed global monomial order for every term map.
struct DegLexLess {
    bool operator()(const Exp& a, const Exp& b) const {
        const auto ta = exp_total(a), tb = exp_total(b);
        if (ta != tb) return ta < tb;
        return a < b;
    }
};

// Componentwise a <= b (monomial divisibility).
inline bool exp_divides(const Exp& a, const Exp& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline Exp exp_add(const Exp& a, const Exp& b) {
    Exp r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

inline Exp exp_sub(const Exp& a, const Exp& b) {
    Exp r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

// Falling-factorial coefficient of applying the derivative alpha to the
// monomial with exponent e: prod_i e_i (e_i-1) ... (e_i - alpha_i + 1).
// Zero when alpha does not divide e.
Rational deriv_factor(const Exp& e, const Exp& alpha);

// alpha! = prod_i alpha_i!
Rational exp_factorial(const Exp& alpha);

// Multinomial coefficient alpha! / (parts[0]! ... parts[k]!) for a split of
// alpha into componentwise parts.
Rational exp_multinomial(const Exp& alpha, const std::vector<Exp>& parts);

// All decompositions of alpha into `parts` componentwise summands.
std::vector<std::vector<Exp>> exp_splits(const Exp& alpha, std::size_t parts);

// All exponent vectors over `nvars` generators with total degree <= max_total.
std::vector<Exp> exps_up_to(std::size_t nvars, unsigned max_total);

}  // namespace starforge
