#pragma once

#include <map>
#include <numeric>
#include <vector>

#include "partition.hpp"
#include "polyq.hpp"

namespace ytab {

// Sparse polynomial in x_1..x_n with exact rational coefficients.
class MPoly {
public:
    explicit MPoly(int nvars) : n_(nvars) {
        if (nvars < 0) throw std::domain_error("MPoly: negative variable count");
    }

    int nvars() const { return n_; }
    bool is_zero() const { return t_.empty(); }
    const std::map<std::vector<int>, Rat>& terms() const { return t_; }

    static MPoly constant(int nvars, const Rat& c) {
        MPoly p(nvars);
        p.add_term(std::vector<int>(static_cast<size_t>(nvars), 0), c);
        return p;
    }
    // x_i (1-based)
    static MPoly var(int nvars, int i) {
        MPoly p(nvars);
        std::vector<int> e(static_cast<size_t>(nvars), 0);
        e.at(static_cast<size_t>(i - 1)) = 1;
        p.add_term(e, Rat(1));
        return p;
    }

    void add_term(const std::vector<int>& exps, const Rat& c) {
        if (static_cast<int>(exps.size()) != n_)
            throw std::domain_error("MPoly: exponent arity mismatch");
        if (c == 0) return;
        auto [it, fresh] = t_.try_emplace(exps, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) t_.erase(it);
        }
    }

    MPoly operator+(const MPoly& o) const {
        MPoly r = *this;
        for (const auto& [e, c] : o.t_) r.add_term(e, c);
        return r;
    }
    MPoly operator-(const MPoly& o) const {
        MPoly r = *this;
        for (const auto& [e, c] : o.t_) r.add_term(e, -c);
        return r;
    }
    MPoly operator*(const MPoly& o) const {
        MPoly r(n_);
        for (const auto& [e1, c1] : t_)
            for (const auto& [e2, c2] : o.t_) {
                std::vector<int> e(e1);
                for (size_t i = 0; i < e.size(); ++i) e[i] += e2[i];
                r.add_term(e, c1 * c2);
            }
        return r;
    }
    MPoly scaled(const Rat& c) const {
        MPoly r(n_);
        if (c == 0) return r;
        for (const auto& [e, k] : t_) r.t_[e] = k * c;
        return r;
    }

    // substitute x_i := 1
    MPoly substitute_one(int i) const {
        MPoly r(n_);
        for (const auto& [e, c] : t_) {
            std::vector<int> e2 = e;
            e2.at(static_cast<size_t>(i - 1)) = 0;
            r.add_term(e2, c);
        }
        return r;
    }

    Rat eval(const std::vector<Rat>& x) const {
        Rat acc = 0;
        for (const auto& [e, c] : t_) {
            Rat m = c;
            for (size_t i = 0; i < e.size(); ++i)
                if (e[i] != 0) m *= pow_rat(x[i], e[i]);
            acc += m;
        }
        return acc;
    }

    // substitute x_i := q^{nu_i}
    PolyQ eval_q_powers(const std::vector<long>& nu) const {
        PolyQ out;
        for (const auto& [e, c] : t_) {
            long deg = 0;
            for (size_t i = 0; i < e.size(); ++i) deg += e[i] * nu[i];
            if (!is_integer(c)) throw std::domain_error("MPoly: integer coefficients required");
            out += PolyQ::monomial(c.get_num(), deg);
        }
        return out;
    }

private:
    int n_;
    std::map<std::vector<int>, Rat> t_;
};

// a_mu(x) = det(x_j^{mu_i}); bar marks the sign (-1)^{C(n,2)}.
// Expanded over permutations; n stays small everywhere this is used.
inline MPoly alternant(const std::vector<long>& mu, int n, bool bar) {
    if (static_cast<int>(mu.size()) != n)
        throw std::domain_error("alternant: need one exponent per variable");
    MPoly out(n);
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    long c2 = static_cast<long>(n) * (n - 1) / 2;
    int bar_sign = (bar && c2 % 2 == 1) ? -1 : 1;
    do {
        // permutation sign
        int sgn = 1;
        std::vector<bool> vis(static_cast<size_t>(n), false);
        for (int i = 0; i < n; ++i) {
            if (vis[static_cast<size_t>(i)]) continue;
            int len = 0;
            for (int j = i; !vis[static_cast<size_t>(j)]; j = perm[static_cast<size_t>(j)]) {
                vis[static_cast<size_t>(j)] = true;
                ++len;
            }
            if (len % 2 == 0) sgn = -sgn;
        }
        std::vector<int> exps(static_cast<size_t>(n), 0);
        for (int i = 0; i < n; ++i)
            exps[static_cast<size_t>(perm[static_cast<size_t>(i)])] += static_cast<int>(mu[static_cast<size_t>(i)]);
        out.add_term(exps, Rat(sgn * bar_sign));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

// bar a_{lambda-(1^n)}(x) for a strict partition lambda with n parts.
inline MPoly alternant_bar_shifted(const StrictPartition& lam) {
    int n = lam.length();
    std::vector<long> mu;
    for (int i = 1; i <= n; ++i) mu.push_back(lam.part(i) - 1);
    return alternant(mu, n, true);
}

// Exact integral over 0 <= x_1 <= ... <= x_n <= 1, monomial by monomial:
// repeated antidifferentiation sends x^k to t^{k+1}/(k+1) at each step, so
// a monomial with prefix exponent sums s_j contributes prod_j 1/(s_j + j).
inline Rat simplex_integrate(const MPoly& p, int n) {
    if (p.nvars() > n) throw std::domain_error("simplex_integrate: too many variables");
    Rat total = 0;
    for (const auto& [e, c] : p.terms()) {
        Rat f = c;
        long s = 0;
        for (int j = 1; j <= n; ++j) {
            s += (j <= static_cast<int>(e.size())) ? e[static_cast<size_t>(j - 1)] : 0;
            f /= Rat(s + j);
        }
        total += f;
    }
    return total;
}

// The q-analogue: each step integrates x^k to t^{k+1}(1-q)/(1-q^{k+1}),
// giving prod_j (1-q)/(1-q^{s_j+j}) per monomial.
inline RatQ q_simplex_integrate(const MPoly& p, int n) {
    if (p.nvars() > n) throw std::domain_error("q_simplex_integrate: too many variables");
    RatQ total;
    for (const auto& [e, c] : p.terms()) {
        PolyQ num(c.get_num());
        PolyQ den(c.get_den());
        long s = 0;
        for (int j = 1; j <= n; ++j) {
            s += (j <= static_cast<int>(e.size())) ? e[static_cast<size_t>(j - 1)] : 0;
            num *= PolyQ::one_minus_q_pow(1);
            den *= PolyQ::one_minus_q_pow(s + j);
        }
        total += RatQ(num, den);
    }
    return total;
}

}  // namespace ytab
