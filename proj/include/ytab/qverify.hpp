#pragma once

#include "count.hpp"
#include "enumerate.hpp"
#include "mpoly.hpp"
#include "qseries.hpp"

namespace ytab {

struct GfVerdict {
    bool equal = false;
    QSeries lhs, rhs;
};

// The alternant identity for shifted SSYT with fixed reversed diagonal nu:
//   sum_{T: rdiag(T)=nu} q^{|T|}
//     = q^{|nu|} / prod_j (q;q)_{lambda_j - 1} * bar a_{lambda-(1^n)}(q^nu),
// both sides as series through order D (the sum on the left is finite there).
inline GfVerdict check_alternant(const StrictPartition& lam, const Parts& nu, long D) {
    int n = lam.length();
    if (static_cast<int>(nu.size()) > n)
        throw std::domain_error("check_alternant: nu has too many parts");
    for (size_t i = 0; i + 1 < nu.size(); ++i)
        if (nu[i] < nu[i + 1]) throw std::domain_error("check_alternant: nu not a partition");
    std::vector<long> nu_full(static_cast<size_t>(n), 0);
    for (size_t i = 0; i < nu.size(); ++i) nu_full[i] = nu[i];

    PolyQ lhs_poly;
    Diagram d = Diagram::shifted(lam);
    for_each_ssyt_bounded(d, D, [&](const std::vector<Cell>& cells,
                                    const std::vector<int>& val, long sum) {
        // reversed diagonal must equal nu
        for (int i = 1; i <= n; ++i) {
            int diag = 0;
            for (size_t k = 0; k < cells.size(); ++k)
                if (cells[k].row == i && cells[k].col == i) { diag = val[k]; break; }
            if (diag != nu_full[static_cast<size_t>(n - i)]) return;
        }
        lhs_poly += PolyQ::q_pow(sum);
    });
    QSeries lhs(D, lhs_poly);

    MPoly bar = alternant_bar_shifted(lam);
    PolyQ numer = bar.eval_q_powers(nu_full).shifted(parts_sum(nu));
    QSeries rhs(D, numer);
    for (int j = 1; j <= n; ++j)
        rhs = rhs * QSeries(D, q_factorial_poch(lam.part(j) - 1)).inverse();
    return {lhs == rhs, lhs, rhs};
}

// The generating-function lemma for alternants (they vanish on x_i = x_j):
//   sum_{nu in Par_n} q^{|nu|} f(q^nu)
//     = (1-q)^{-n} * q-integral of f over 0 <= x_1 <= ... <= x_n <= 1,
// both sides as series through order D.
inline GfVerdict check_gf_lemma(const StrictPartition& lam, long D) {
    int n = lam.length();
    MPoly f = alternant_bar_shifted(lam);
    PolyQ lhs_poly;
    // every nu with |nu| <= D; larger nu only contribute above order D
    std::vector<long> nu(static_cast<size_t>(n), 0);
    std::function<void(int, long, long)> rec = [&](int i, long prev, long rem) {
        if (i == n) {
            PolyQ term = f.eval_q_powers(nu).shifted(
                std::accumulate(nu.begin(), nu.end(), 0L));
            lhs_poly += term;
            return;
        }
        for (long v = 0; v <= std::min(prev, rem); ++v) {
            nu[static_cast<size_t>(i)] = v;
            rec(i + 1, v, rem - v);
        }
        nu[static_cast<size_t>(i)] = 0;
    };
    rec(0, D, D);
    QSeries lhs(D, lhs_poly);

    RatQ integral = q_simplex_integrate(f, n);
    PolyQ den_extra(1);
    for (int i = 0; i < n; ++i) den_extra *= PolyQ::one_minus_q_pow(1);
    RatQ rhs_fun = integral / RatQ(den_extra);
    QSeries rhs = series_of(rhs_fun, D);
    return {lhs == rhs, lhs, rhs};
}

struct IntegralVerdict {
    bool equal = false;
    Rat lhs;
    Int rhs;
};

// g^lambda = |lambda|!/prod (lambda_j - 1)! * integral of bar a_{lambda-(1^n)}.
inline IntegralVerdict check_ssyt_int(const StrictPartition& lam) {
    int n = lam.length();
    Rat lhs(factorial(lam.size()));
    for (int j = 1; j <= n; ++j) lhs /= Rat(factorial(lam.part(j) - 1));
    lhs *= simplex_integrate(alternant_bar_shifted(lam), n);
    Int rhs = count_syt_shifted(lam);
    return {lhs == Rat(rhs), lhs, rhs};
}

// g^{lambda u {(n-i+1, n-i)}} = (|lambda|+1)!/prod (lambda_j - 1)!
//   * integral of (x_{i+1} - x_i) bar a_{lambda-(1^n)}, with x_{n+1} = 1.
inline IntegralVerdict check_ssyt_int2(const StrictPartition& lam, int i) {
    int n = lam.length();
    if (i < 1 || i > n) throw std::domain_error("check_ssyt_int2: need 1 <= i <= n");
    MPoly bar = alternant_bar_shifted(lam);
    MPoly factor = (i < n) ? MPoly::var(n, i + 1) - MPoly::var(n, i)
                           : MPoly::constant(n, Rat(1)) - MPoly::var(n, n);
    Rat lhs(factorial(lam.size() + 1));
    for (int j = 1; j <= n; ++j) lhs /= Rat(factorial(lam.part(j) - 1));
    lhs *= simplex_integrate(factor * bar, n);
    Int rhs = enumerate_syt(Diagram::extended(lam, n - i + 1));
    return {lhs == Rat(rhs), lhs, rhs};
}

// |SYT(pi)| = lim_{q->1} (q;q)_{|pi|} sum_{T in SSYT(pi)} q^{|T|}, evaluated
// through the closed rational form of the SSYT generating function.
inline IntegralVerdict check_syt_ssyt(const StrictPartition& lam) {
    int n = lam.length();
    RatQ gen = q_simplex_integrate(alternant_bar_shifted(lam), n);
    PolyQ den(1);
    for (int i = 0; i < n; ++i) den *= PolyQ::one_minus_q_pow(1);
    for (int j = 1; j <= n; ++j) den *= q_factorial_poch(lam.part(j) - 1);
    RatQ ssyt_gf = gen / RatQ(den);
    RatQ limit_arg = ssyt_gf * RatQ(q_factorial_poch(lam.size()));
    Rat lhs = limit_arg.limit_at_one();
    Int rhs = count_syt_shifted(lam);
    return {lhs == Rat(rhs), lhs, rhs};
}

}  // namespace ytab
