#include "starforge/monomial.hpp"

namespace starforge {

Rational deriv_factor(const Exp& e, const Exp& alpha) {
    mpz_class f = 1;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (alpha[i] > e[i]) return Rational(0);
        for (std::uint32_t k = 0; k < alpha[i]; ++k) f *= (e[i] - k);
    }
    return Rational(f);
}

Rational exp_factorial(const Exp& alpha) {
    mpz_class f = 1, t;
    for (auto a : alpha) {
        mpz_fac_ui(t.get_mpz_t(), a);
        f *= t;
    }
    return Rational(f);
}

Rational exp_multinomial(const Exp& alpha, const std::vector<Exp>& parts) {
    Rational m = exp_factorial(alpha);
    for (const auto& p : parts) m /= exp_factorial(p);
    return m;
}

namespace {

// Compositions of n into k nonnegative parts.
void compositions(std::uint32_t n, std::size_t k, std::vector<std::uint32_t>& cur,
                  std::vector<std::vector<std::uint32_t>>& out) {
    if (k == 1) {
        cur.push_back(n);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (std::uint32_t i = 0; i <= n; ++i) {
        cur.push_back(i);
        compositions(n - i, k - 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<std::vector<Exp>> exp_splits(const Exp& alpha, std::size_t parts) {
    const std::size_t m = alpha.size();
    // Per-variable compositions, combined as a cartesian product.
    std::vector<std::vector<std::vector<std::uint32_t>>> per_var(m);
    for (std::size_t v = 0; v < m; ++v) {
        std::vector<std::uint32_t> cur;
        compositions(alpha[v], parts, cur, per_var[v]);
    }
    std::vector<std::vector<Exp>> out;
    std::vector<std::size_t> idx(m, 0);
    while (true) {
        std::vector<Exp> split(parts, Exp(m, 0));
        for (std::size_t v = 0; v < m; ++v)
            for (std::size_t p = 0; p < parts; ++p) split[p][v] = per_var[v][idx[v]][p];
        out.push_back(std::move(split));
        std::size_t v = 0;
        while (v < m && ++idx[v] == per_var[v].size()) idx[v++] = 0;
        if (v == m) break;
    }
    return out;
}

std::vector<Exp> exps_up_to(std::size_t nvars, unsigned max_total) {
    std::vector<Exp> out;
    Exp cur(nvars, 0);
    // Lexicographic enumeration with a degree bound.
    auto rec = [&](auto&& self, std::size_t pos, unsigned left) -> void {
        if (pos == nvars) {
            out.push_back(cur);
            return;
        }
        for (unsigned i = 0; i <= left; ++i) {
            cur[pos] = i;
            self(self, pos + 1, left - i);
        }
        cur[pos] = 0;
    };
    if (nvars == 0) {
        out.push_back({});
        return out;
    }
    rec(rec, 0, max_total);
    std::sort(out.begin(), out.end(), DegLexLess{});
    return out;
}

}  // namespace starforge
