#pragma once

#include <numeric>

#include "interval.hpp"
#include "polyaq.hpp"

namespace ytab {

// Width, length and their gcd for the a;q-analogue.  d divides every
// exponent fed to the weights below; build() asserts the shape is straight.
struct AqParams {
    long w = 0, l = 0, d = 1;

    static AqParams of(const Partition& lam) {
        if (lam.empty()) throw std::domain_error("AqParams: empty shape");
        AqParams p;
        p.w = lam.width();
        p.l = lam.length();
        p.d = std::gcd(p.w, p.l);
        return p;
    }
};

namespace detail {

inline long exact_div(long num, long den) {
    if (num % den != 0)
        throw std::logic_error("aq: exponent not divisible by gcd(w, l)");
    return num / den;
}

}  // namespace detail

// W_{a q^shift; q}(n) = (1 - a q^{shift+1+2n}) / ((1 - a q^{shift+1}) q^n)
inline RatAQ aq_weight(long n, long shift) {
    if (n < 0) throw std::domain_error("aq_weight: negative argument");
    PolyAQ num = PolyAQ::one_minus_aq(1, shift + 1 + 2 * n);
    PolyAQ den = PolyAQ::one_minus_aq(1, shift + 1) * PolyAQ::monomial(1, 0, n);
    return RatAQ(num, den);
}

// [n]_{a q^shift; q} = (1-q^n)(1 - a q^{shift+n}) / ((1-q)(1 - a q^{shift+1})) q^{1-n}
inline RatAQ aq_number(long n, long shift) {
    if (n < 0) throw std::domain_error("aq_number: negative argument");
    if (n == 0) return RatAQ();
    PolyAQ num = PolyAQ(PolyQ::one_minus_q_pow(n)) * PolyAQ::one_minus_aq(1, shift + n);
    PolyAQ den = PolyAQ(PolyQ::one_minus_q_pow(1)) * PolyAQ::one_minus_aq(1, shift + 1) *
                 PolyAQ::monomial(1, 0, n - 1);
    return RatAQ(num, den);
}

// [n] with both parameters rebased: a -> a q^ashift, q -> q^base.
inline RatAQ aq_number_rebased(long n, long ashift, long base) {
    if (n < 0 || base < 1) throw std::domain_error("aq_number_rebased: bad arguments");
    if (n == 0) return RatAQ();
    PolyAQ num = PolyAQ(PolyQ::one_minus_q_pow(base * n)) *
                 PolyAQ::one_minus_aq(1, ashift + base * n);
    PolyAQ den = PolyAQ(PolyQ::one_minus_q_pow(base)) *
                 PolyAQ::one_minus_aq(1, ashift + base) *
                 PolyAQ::monomial(1, 0, base * (n - 1));
    return RatAQ(num, den);
}

// Sum of W_{a q^shift; q}(m) over a list of arguments, assembled over the
// single common denominator (1 - a q^{shift+1}) q^{max m}.
inline RatAQ aq_weight_sum(long shift, const std::vector<long>& ms) {
    if (ms.empty()) return RatAQ();
    long M = *std::max_element(ms.begin(), ms.end());
    PolyAQ num;
    for (long m : ms)
        num += PolyAQ::one_minus_aq(1, shift + 1 + 2 * m).q_shifted(M - m);
    PolyAQ den = PolyAQ::one_minus_aq(1, shift + 1) * PolyAQ::monomial(1, 0, M);
    return RatAQ(num, den);
}

// Weight of the cover x -> y where y deletes a cell in row s of x.
inline RatAQ cover_weight(const Parts& x, int s, const AqParams& p) {
    int n = static_cast<int>(x.size());
    if (s < 1 || s > n) throw std::domain_error("cover_weight: bad row");
    bool removable = (s == n) || x[static_cast<size_t>(s - 1)] > x[static_cast<size_t>(s)];
    if (!removable) throw std::domain_error("cover_weight: not a cover");
    long m = detail::exact_div(p.w * (s - 1) + p.l * (parts_sum(x) - 1), p.d);
    return aq_weight(m, detail::exact_div(p.w + p.l, p.d));
}

// aqddeg(x): sum of cover weights over all y covered by x.
inline RatAQ aq_down_degree(const Parts& x, const AqParams& p) {
    std::vector<long> ms;
    int n = static_cast<int>(x.size());
    for (int s = 1; s <= n; ++s) {
        if (s < n && x[static_cast<size_t>(s - 1)] == x[static_cast<size_t>(s)]) continue;
        ms.push_back(detail::exact_div(p.w * (s - 1) + p.l * (parts_sum(x) - 1), p.d));
    }
    return aq_weight_sum(detail::exact_div(p.w + p.l, p.d), ms);
}

// R(lambda | a; q) = sum over x <= lambda of W_{a q^{wl/d}; q}(l|x|/d).
inline RatAQ aq_generating(const Partition& lam) {
    AqParams p = AqParams::of(lam);
    std::vector<long> ms;
    for_each_subshape(lam.parts(), Kind::straight, [&](const Parts& x) {
        ms.push_back(detail::exact_div(p.l * parts_sum(x), p.d));
    });
    return aq_weight_sum(detail::exact_div(p.w * p.l, p.d), ms);
}

// Numerator of E_{a;q}(X): the total a;q-down-degree of the interval.
inline RatAQ aq_ddeg_total(const Partition& lam) {
    AqParams p = AqParams::of(lam);
    std::vector<long> ms;
    for_each_subshape(lam.parts(), Kind::straight, [&](const Parts& x) {
        int n = static_cast<int>(x.size());
        for (int s = 1; s <= n; ++s) {
            if (s < n && x[static_cast<size_t>(s - 1)] == x[static_cast<size_t>(s)]) continue;
            ms.push_back(detail::exact_div(p.w * (s - 1) + p.l * (parts_sum(x) - 1), p.d));
        }
    });
    return aq_weight_sum(detail::exact_div(p.w + p.l, p.d), ms);
}

inline RatAQ aq_expect(const Partition& lam) {
    return aq_ddeg_total(lam) / aq_generating(lam);
}

// The conjectured product, in its two equivalent forms:
//   [wl/d]_{a q^{(w+l)/d}; q} / [(w+l)/d]_{a q^{wl/d}; q}
//   [wl/d]_{a q; q^{(w+l)/d}} / [(w+l)/d]_{a q; q^{wl/d}}
inline RatAQ conjecture_product(const Partition& lam, int variant = 1) {
    AqParams p = AqParams::of(lam);
    long wl = detail::exact_div(p.w * p.l, p.d);
    long wpl = detail::exact_div(p.w + p.l, p.d);
    if (variant == 1) return aq_number(wl, wpl) / aq_number(wpl, wl);
    if (variant == 2) return aq_number_rebased(wl, 1, wpl) / aq_number_rebased(wpl, 1, wl);
    throw std::domain_error("conjecture_product: variant must be 1 or 2");
}

// Closed form of R((w^l) | a; q) for rectangles:
// qbinom(w+l, l) at q^{l/d} times (1 - a q^{1+wl(l+1)/d})/(1 - a q^{1+wl/d}) q^{-wl^2/d}.
inline RatAQ aq_rectangle_generating(long w, long l) {
    long d = std::gcd(w, l);
    PolyQ qb = q_binomial(w + l, l);
    // substitute q -> q^{l/d}
    PolyQ qbs;
    for (long e = qb.low(); e <= qb.high(); ++e)
        qbs += PolyQ::monomial(qb.coeff(e), e * (l / d));
    PolyAQ num = PolyAQ(qbs) * PolyAQ::one_minus_aq(1, 1 + w * l * (l + 1) / d);
    PolyAQ den = PolyAQ::one_minus_aq(1, 1 + w * l / d) *
                 PolyAQ::monomial(1, 0, w * l * l / d);
    return RatAQ(num, den);
}

struct AqVerdict {
    bool equal = false;            // aq_expect == conjecture_product
    bool variants_equal = false;   // the two product forms agree
    bool conjugate_equal = false;  // aq_expect(lambda) == aq_expect(lambda')
    RatAQ expect, product;
};

// Exact verification of the product formula for one shape.  Failure is a
// verdict, not an error: the formula is only conjectured for balanced shapes.
inline AqVerdict verify_conjecture(const Partition& lam) {
    AqVerdict v;
    v.expect = aq_expect(lam);
    v.product = conjecture_product(lam, 1);
    v.equal = (v.expect == v.product);
    v.variants_equal = (v.product == conjecture_product(lam, 2));
    v.conjugate_equal = (v.expect == aq_expect(lam.conjugate()));
    return v;
}

// q -> 1 specialization: after stripping matched (1-q) factors, the value is
// a rational function of a; true iff it is the constant c.
inline bool aq_q1_equals(const RatAQ& f, const Rat& c) {
    if (f.is_zero()) return c == 0;
    PolyAQ n = f.num(), d = f.den();
    while (n.vanishes_at_q1() && d.vanishes_at_q1()) {
        n = n.div_one_minus_q();
        d = d.div_one_minus_q();
    }
    std::vector<Int> nv = n.eval_q1(), dv = d.eval_q1();
    if (dv.empty()) return false;  // pole in a at q=1
    // c = p/q: check q * n(1) == p * d(1) coefficientwise in a
    std::vector<Int> lhs = nv, rhs = dv;
    for (auto& x : lhs) x *= c.get_den();
    for (auto& x : rhs) x *= c.get_num();
    return lhs == rhs;
}

// The a -> infinity reduction replaces every weight W(m) by q^m; the
// expectation then becomes a ratio of plain q-polynomials.
inline std::pair<PolyQ, PolyQ> aq_qweight_expectation(const Partition& lam) {
    AqParams p = AqParams::of(lam);
    PolyQ num, den;
    for_each_subshape(lam.parts(), Kind::straight, [&](const Parts& x) {
        den += PolyQ::q_pow(detail::exact_div(p.l * parts_sum(x), p.d));
        int n = static_cast<int>(x.size());
        for (int s = 1; s <= n; ++s) {
            if (s < n && x[static_cast<size_t>(s - 1)] == x[static_cast<size_t>(s)]) continue;
            num += PolyQ::q_pow(
                detail::exact_div(p.w * (s - 1) + p.l * (parts_sum(x) - 1), p.d));
        }
    });
    return {num, den};
}

// Ratio of the leading a-coefficients of aq_expect equals the q-weight
// expectation; checked by cross-multiplication.
inline bool aq_leading_matches_qweight(const Partition& lam) {
    RatAQ e = aq_expect(lam);
    auto [num_q, den_q] = aq_qweight_expectation(lam);
    const PolyQ& ln = e.num().a_lead();
    const PolyQ& ld = e.den().a_lead();
    return ln * den_q == ld * num_q;
}

}  // namespace ytab
