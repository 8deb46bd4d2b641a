#pragma once

#include <cstdlib>
#include <string>
#include <vector>

#include "rational.hpp"

namespace ytab {

// A terminating sum  prefactor * sum_{j=0}^{terms-1} prod_p (num_p)_j / (den_p)_j
// of ordinary Pochhammer ratios with exact rational parameters.
struct HyperSpec {
    Rat prefactor = 1;
    std::vector<std::pair<Rat, Rat>> ratios;
    long terms = 0;
};

inline Rat hyper_sum(const HyperSpec& spec) {
    Rat total = 0;
    Rat term = 1;
    for (long j = 0; j < spec.terms; ++j) {
        if (j > 0) {
            for (const auto& [num, den] : spec.ratios) {
                Rat d = den + (j - 1);
                if (d == 0)
                    throw std::domain_error("hyper_sum: zero Pochhammer denominator at j=" +
                                            std::to_string(j));
                term *= (num + (j - 1)) / d;
            }
        }
        total += term;
    }
    return spec.prefactor * total;
}

struct SidesR {
    Rat lhs, rhs;
    bool equal = false;
};

inline SidesR make_sides(const Rat& l, const Rat& r) { return {l, r, l == r}; }

// 2^{4e-4} = sum_{j=0}^{e-1} (2j)!/(j!)^2 * (2e-2-2j)!/((e-j-1)!)^2
//   * ((2d-1)/a + 1 - 2j)_{2e-2} / (((2d-1)/(2a) + 1 - j)_{e-1})^2
//   * (2d-1+2a(e-1-2j)) / (2d-1-2ja),  valid for d > a(e-1)+1.
inline SidesR check_identitytoshow1(long a, long d, long e) {
    if (a < 1 || d < 1 || e < 1 || d <= a * (e - 1) + 1)
        throw std::domain_error("identitytoshow1: need a,d,e >= 1 and d > a(e-1)+1");
    Rat rhs = 0;
    for (long j = 0; j <= e - 1; ++j) {
        Rat t = rat(factorial(2 * j), factorial(j) * factorial(j));
        t *= rat(factorial(2 * e - 2 - 2 * j), factorial(e - j - 1) * factorial(e - j - 1));
        Rat x1 = rat(2 * d - 1, a) + 1 - 2 * j;
        Rat x2 = rat(2 * d - 1, 2 * a) + 1 - j;
        t *= pochhammer(x1, 2 * e - 2);
        Rat p2 = pochhammer(x2, e - 1);
        t /= p2 * p2;
        t *= rat(2 * d - 1 + 2 * a * (e - 1 - 2 * j), 2 * d - 1 - 2 * j * a);
        rhs += t;
    }
    return make_sides(pow_rat(rat(2), 4 * e - 4), rhs);
}

// Lagrange interpolation identity:
// 1 = sum_i prod_{j<l} (b_i-c_j)(u-b_i-c_j) / prod_{j != i} (b_i-b_j)(u-b_i-b_j).
inline SidesR check_li(const std::vector<Rat>& b, const std::vector<Rat>& c, const Rat& u) {
    if (b.size() != c.size() + 1)
        throw std::domain_error("li: need one more b than c");
    size_t l = c.size();
    Rat rhs = 0;
    for (size_t i = 0; i < b.size(); ++i) {
        Rat t = 1;
        for (size_t j = 0; j < l; ++j) t *= (b[i] - c[j]) * (u - b[i] - c[j]);
        for (size_t j = 0; j < b.size(); ++j) {
            if (j == i) continue;
            Rat d = (b[i] - b[j]) * (u - b[i] - b[j]);
            if (d == 0) throw std::domain_error("li: parameters must be generic");
            t /= d;
        }
        rhs += t;
    }
    return make_sides(rat(1), rhs);
}

// The balanced-shape identity behind the (n+1+k)/4 evaluation, for a
// composition (a_1..a_l) with k = a_1+...+a_l < n.
inline SidesR check_thm42(const std::vector<long>& a, long n) {
    long l = static_cast<long>(a.size());
    long k = 0;
    for (long x : a) k += x;
    if (l < 1 || k >= n) throw std::domain_error("thm42: need nonempty a with sum < n");
    for (long x : a)
        if (x < 1) throw std::domain_error("thm42: composition parts must be positive");
    auto A = [&](long t) { return a[static_cast<size_t>(t - 1)]; };
    Rat rhs = 0;
    for (long i = 0; i <= l; ++i) {
        long ri = 1;
        for (long t = 1; t <= i; ++t) ri += A(t);
        Rat t1 = 1;
        // descending block: t = i, i-1, ..., 1 with partial sums from a_i
        {
            long run = 0;
            for (long t = i; t >= 1; --t) {
                t1 *= (Rat(run) + rat(A(t), 2)) / Rat(run + A(t));
                run += A(t);
            }
        }
        // ascending block: t = i+1, ..., l
        {
            long run = 0;
            for (long t = i + 1; t <= l; ++t) {
                t1 *= (Rat(run) + rat(A(t), 2)) / Rat(run + A(t));
                run += A(t);
            }
        }
        // middle factor and the tail block through all of a_l..a_1
        Rat base = Rat(n) + rat(1, 2) - ri;
        long upper = 0;
        for (long t = i + 1; t <= l; ++t) upper += A(t);
        t1 *= (base + upper) / base;
        {
            Rat run = base;
            for (long t = l; t >= 1; --t) {
                t1 *= (run + rat(A(t), 2)) / (run + A(t));
                run += A(t);
            }
        }
        rhs += t1;
    }
    return make_sides(rat(1), rhs);
}

// n/(2(m+2n+1)) = sum_{i=0}^{n-1} (2i)!/(i!)^2 (2n-2i-1)!/((n-i-1)!)^2
//   ((m+2n-i)!)^2/((m+n-i)!)^2 (2m+2n-2i+1)!/(2m+4n-2i+1)!
//   (2m+4n-4i+1)/((m+2n-2i)(m+2n-2i+1)).
inline SidesR check_mainidentity(long m, long n) {
    if (m < 0 || n < 1) throw std::domain_error("mainidentity: need m >= 0, n >= 1");
    Rat rhs = 0;
    for (long i = 0; i <= n - 1; ++i) {
        Rat t = rat(factorial(2 * i), factorial(i) * factorial(i));
        t *= rat(factorial(2 * n - 2 * i - 1), factorial(n - i - 1) * factorial(n - i - 1));
        t *= rat(factorial(m + 2 * n - i) * factorial(m + 2 * n - i),
                 factorial(m + n - i) * factorial(m + n - i));
        t *= rat(factorial(2 * m + 2 * n - 2 * i + 1), factorial(2 * m + 4 * n - 2 * i + 1));
        t *= rat(2 * m + 4 * n - 4 * i + 1,
                 (m + 2 * n - 2 * i) * (m + 2 * n - 2 * i + 1));
        rhs += t;
    }
    return make_sides(rat(n, 2 * (m + 2 * n + 1)), rhs);
}

// n(N-n+1)/(N+1) C(N+1,n) = C(N,n-1) + N C(N-1,n-1)
//   - sum_{i=0}^{n-1} C(2i,i)/(i+1) * C(N-1-2i, n-1-i).
inline SidesR check_eq8(long N, long n) {
    if (n < 1 || N - 2 * n + 2 < 1) throw std::domain_error("eq8: need N - 2n + 2 >= 1");
    Rat lhs = rat(n * (N - n + 1), N + 1) * Rat(binomial(N + 1, n));
    Rat rhs = Rat(binomial(N, n - 1)) + Rat(N) * Rat(binomial(N - 1, n - 1));
    for (long i = 0; i <= n - 1; ++i)
        rhs -= rat(binomial(2 * i, i), i + 1) * Rat(binomial(N - 1 - 2 * i, n - 1 - i));
    return make_sides(lhs, rhs);
}

// N/(N-n+1) = sum_i (1/2, 1, n-N, 1-n)_i / (1, 2, (1-N)/2, 1-N/2)_i.
inline SidesR check_eq9(long N, long n) {
    if (n < 1 || N - 2 * n + 2 < 1) throw std::domain_error("eq9: need N - 2n + 2 >= 1");
    HyperSpec spec;
    spec.terms = n;
    spec.ratios = {{rat(1, 2), rat(1)},
                   {rat(1), rat(2)},
                   {rat(n - N), rat(1 - N, 2)},
                   {rat(1 - n), rat(2 - N, 2)}};
    return make_sides(rat(N, N - n + 1), hyper_sum(spec));
}

// Terminating Dougall 5F4 with d = -n:
// 5F4[a, 1+a/2, b, c, -n; a/2, 1+a-b, 1+a-c, 1+a+n; 1]
//   = (1+a)_n (1+a-b-c)_n / ((1+a-b)_n (1+a-c)_n).
inline SidesR check_dougall(const Rat& a, const Rat& b, const Rat& c, long n) {
    HyperSpec spec;
    spec.terms = n + 1;
    spec.ratios = {{a, rat(1)},
                   {a / 2 + 1, a / 2},
                   {b, a - b + 1},
                   {c, a - c + 1},
                   {rat(-n), a + Rat(n) + 1}};
    Rat lhs = hyper_sum(spec);
    Rat rhs = pochhammer(a + 1, n) * pochhammer(a - b - c + 1, n) /
              (pochhammer(a - b + 1, n) * pochhammer(a - c + 1, n));
    return make_sides(lhs, rhs);
}

// Bailey's 4F3:
// 4F3[a/2, (a+1)/2, b+n, -n; b/2, (b+1)/2, a+1; 1] = (b-a)_n / (b)_n.
inline SidesR check_bailey(const Rat& a, const Rat& b, long n) {
    HyperSpec spec;
    spec.terms = n + 1;
    spec.ratios = {{a / 2, b / 2},
                   {(a + 1) / 2, (b + 1) / 2},
                   {b + Rat(n), a + 1},
                   {rat(-n), rat(1)}};
    Rat lhs = hyper_sum(spec);
    Rat den = pochhammer(b, n);
    if (den == 0) throw std::domain_error("bailey: (b)_n vanishes");
    return make_sides(lhs, pochhammer(b - a, n) / den);
}

// ---- q-identities, verified as specialized rational functions of q ----
//
// Parameters are integer powers of q (with a sign for factors like (-q; q)_n).
// Both sides are rational functions of q; each arithmetic step tracks a bound
// on deg(num) + deg(den), and two sides that agree on bound_L + bound_R + 1
// sample points with no pole encountered are equal as rational functions:
// N_L D_R - N_R D_L is a polynomial of degree <= bound_L + bound_R with more
// roots than its degree.

namespace qeval {

struct QV {
    Rat v = 1;
    long deg = 0;
};

// multiply by (1 - sign q^{e})
inline void mul_factor(QV& x, const Rat& q, int sign, long e) {
    x.v *= Rat(1) - Rat(sign) * pow_rat(q, e);
    x.deg += 2 * std::labs(e) + 1;
}
inline void div_factor(QV& x, const Rat& q, int sign, long e) {
    Rat f = Rat(1) - Rat(sign) * pow_rat(q, e);
    if (f == 0) throw std::domain_error("q-identity: zero denominator factor");
    x.v /= f;
    x.deg += 2 * std::labs(e) + 1;
}
// multiply by (sign q^{e})^{j}
inline void mul_power(QV& x, const Rat& q, int sign, long e, long j) {
    x.v *= pow_rat(Rat(sign) * pow_rat(q, e), j);
    x.deg += std::labs(e) * j;
}
// multiply or divide by (sign * q^m; q^base)_len
inline void mul_poch(QV& x, const Rat& q, int sign, long m, long base, long len) {
    for (long i = 0; i < len; ++i) mul_factor(x, q, sign, m + i * base);
}
inline void div_poch(QV& x, const Rat& q, int sign, long m, long base, long len) {
    for (long i = 0; i < len; ++i) div_factor(x, q, sign, m + i * base);
}

}  // namespace qeval

struct SidesQ {
    bool equal = false;
    long points = 0;       // sample points used
    long degree_bound = 0; // bound on deg num + deg den across both sides
};

namespace detail {

// Compare two q-evaluators on enough points to prove rational-function
// equality.  Each evaluator returns a value and its degree budget.
template <typename F, typename G>
SidesQ compare_q_sides(F&& lhs, G&& rhs) {
    // probe once to learn the budgets
    Rat probe = rat(1, 2);
    qeval::QV l0 = lhs(probe), r0 = rhs(probe);
    long bound = l0.deg + r0.deg;
    long points = bound + 1;
    SidesQ out;
    out.points = points;
    out.degree_bound = bound;
    out.equal = true;
    for (long t = 0; t < points; ++t) {
        Rat q = rat(t + 2, 2 * t + 5);  // distinct, in (0,1)
        if (lhs(q).v != rhs(q).v) { out.equal = false; return out; }
    }
    return out;
}

}  // namespace detail

// Watson's transformation of a terminating very-well-poised 8phi7 into a
// 4phi3, with a = q^alpha, b = q^beta, c = q^gamma, d = q^delta, e = q^eps.
// The well-poised pair contributes (1 - a q^{2j})/(1 - a) per term.
inline SidesQ check_watson(long alpha, long beta, long gamma, long delta, long eps, long n) {
    using namespace qeval;
    auto lhs = [=](const Rat& q) {
        QV acc;
        acc.v = 0;
        long zexp = 2 * alpha + n + 2 - beta - gamma - delta - eps;
        for (long j = 0; j <= n; ++j) {
            QV t;
            mul_factor(t, q, +1, alpha + 2 * j);
            div_factor(t, q, +1, alpha);
            mul_poch(t, q, +1, alpha, 1, j);
            mul_poch(t, q, +1, beta, 1, j);
            mul_poch(t, q, +1, gamma, 1, j);
            mul_poch(t, q, +1, delta, 1, j);
            mul_poch(t, q, +1, eps, 1, j);
            mul_poch(t, q, +1, -n, 1, j);
            div_poch(t, q, +1, 1, 1, j);  // (q;q)_j
            div_poch(t, q, +1, alpha + 1 - beta, 1, j);
            div_poch(t, q, +1, alpha + 1 - gamma, 1, j);
            div_poch(t, q, +1, alpha + 1 - delta, 1, j);
            div_poch(t, q, +1, alpha + 1 - eps, 1, j);
            div_poch(t, q, +1, alpha + n + 1, 1, j);
            mul_power(t, q, +1, zexp, j);
            acc.v += t.v;
            acc.deg += t.deg;
        }
        return acc;
    };
    auto rhs = [=](const Rat& q) {
        QV t;
        mul_poch(t, q, +1, alpha + 1, 1, n);
        mul_poch(t, q, +1, alpha + 1 - delta - eps, 1, n);
        div_poch(t, q, +1, alpha + 1 - delta, 1, n);
        div_poch(t, q, +1, alpha + 1 - eps, 1, n);
        QV acc;
        acc.v = 0;
        acc.deg = t.deg;
        for (long j = 0; j <= n; ++j) {
            QV s;
            mul_poch(s, q, +1, alpha + 1 - beta - gamma, 1, j);
            mul_poch(s, q, +1, delta, 1, j);
            mul_poch(s, q, +1, eps, 1, j);
            mul_poch(s, q, +1, -n, 1, j);
            div_poch(s, q, +1, 1, 1, j);
            div_poch(s, q, +1, alpha + 1 - beta, 1, j);
            div_poch(s, q, +1, alpha + 1 - gamma, 1, j);
            div_poch(s, q, +1, delta + eps - n - alpha, 1, j);
            mul_power(s, q, +1, 1, j);
            acc.v += s.v;
            acc.deg += s.deg;
        }
        acc.v *= t.v;
        return acc;
    };
    return detail::compare_q_sides(lhs, rhs);
}

// 4phi3[q^{-2n}, c^2, a, aq; a^2 q^2, c q^{-n}, c q^{1-n}; q^2, q^2]
//   = (-q, qa/c; q)_n / ((-aq, q/c; q)_n),  a = q^alpha, c = q^gamma.
inline SidesQ check_eq43(long alpha, long gamma, long n) {
    using namespace qeval;
    auto lhs = [=](const Rat& q) {
        QV acc;
        acc.v = 0;
        for (long j = 0; j <= n; ++j) {
            QV t;
            mul_poch(t, q, +1, -2 * n, 2, j);
            mul_poch(t, q, +1, 2 * gamma, 2, j);
            mul_poch(t, q, +1, alpha, 2, j);
            mul_poch(t, q, +1, alpha + 1, 2, j);
            div_poch(t, q, +1, 2, 2, j);  // (q^2; q^2)_j
            div_poch(t, q, +1, 2 * alpha + 2, 2, j);
            div_poch(t, q, +1, gamma - n, 2, j);
            div_poch(t, q, +1, gamma + 1 - n, 2, j);
            mul_power(t, q, +1, 2, j);
            acc.v += t.v;
            acc.deg += t.deg;
        }
        return acc;
    };
    auto rhs = [=](const Rat& q) {
        QV t;
        mul_poch(t, q, -1, 1, 1, n);                   // (-q; q)_n
        mul_poch(t, q, +1, 1 + alpha - gamma, 1, n);   // (qa/c; q)_n
        div_poch(t, q, -1, alpha + 1, 1, n);           // (-aq; q)_n
        div_poch(t, q, +1, 1 - gamma, 1, n);           // (q/c; q)_n
        return t;
    };
    return detail::compare_q_sides(lhs, rhs);
}

// The summation obtained from Watson + eq43 (base q^2, argument d^2 q / a):
// 8phi7[a, q^2 a^{1/2}, -q^2 a^{1/2}, a/d^2, a^2 q^{2+2n}/d^2, d, dq, q^{-2n};
//       a^{1/2}, -a^{1/2}, d^2 q^2, d^2 q^{-2n}/a, a q^2/d, a q/d, a q^{2n+2}]
//   = (-q, aq/d^2; q)_n (a q^2; q^2)_n / ((-dq, aq/d; q)_n (a q^2/d^2; q^2)_n)
// with a = q^alpha, d = q^delta; the well-poised pair gives
// (1 - a q^{4j})/(1 - a) per term.
inline SidesQ check_eqnew(long alpha, long delta, long n) {
    using namespace qeval;
    auto lhs = [=](const Rat& q) {
        QV acc;
        acc.v = 0;
        long zexp = 2 * delta + 1 - alpha;
        for (long j = 0; j <= n; ++j) {
            QV t;
            mul_factor(t, q, +1, alpha + 4 * j);
            div_factor(t, q, +1, alpha);
            mul_poch(t, q, +1, alpha, 2, j);
            mul_poch(t, q, +1, alpha - 2 * delta, 2, j);
            mul_poch(t, q, +1, 2 * alpha + 2 + 2 * n - 2 * delta, 2, j);
            mul_poch(t, q, +1, delta, 2, j);
            mul_poch(t, q, +1, delta + 1, 2, j);
            mul_poch(t, q, +1, -2 * n, 2, j);
            div_poch(t, q, +1, 2, 2, j);
            div_poch(t, q, +1, 2 * delta + 2, 2, j);
            div_poch(t, q, +1, 2 * delta - 2 * n - alpha, 2, j);
            div_poch(t, q, +1, alpha + 2 - delta, 2, j);
            div_poch(t, q, +1, alpha + 1 - delta, 2, j);
            div_poch(t, q, +1, alpha + 2 * n + 2, 2, j);
            mul_power(t, q, +1, zexp, j);
            acc.v += t.v;
            acc.deg += t.deg;
        }
        return acc;
    };
    auto rhs = [=](const Rat& q) {
        QV t;
        mul_poch(t, q, -1, 1, 1, n);                        // (-q; q)_n
        mul_poch(t, q, +1, alpha + 1 - 2 * delta, 1, n);    // (aq/d^2; q)_n
        mul_poch(t, q, +1, alpha + 2, 2, n);                // (a q^2; q^2)_n
        div_poch(t, q, -1, delta + 1, 1, n);                // (-dq; q)_n
        div_poch(t, q, +1, alpha + 1 - delta, 1, n);        // (aq/d; q)_n
        div_poch(t, q, +1, alpha + 2 - 2 * delta, 2, n);    // (a q^2/d^2; q^2)_n
        return t;
    };
    return detail::compare_q_sides(lhs, rhs);
}

}  // namespace ytab
