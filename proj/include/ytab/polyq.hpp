#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <vector>

#include "rational.hpp"

namespace ytab {

// Integer-coefficient Laurent polynomial in q.  Coefficients are stored
// densely from the lowest nonzero exponent; the zero polynomial has an
// empty coefficient vector.
class PolyQ {
public:
    PolyQ() = default;
    PolyQ(long c) { if (c != 0) { c_.assign(1, Int(c)); } }
    PolyQ(const Int& c) { if (c != 0) { c_.assign(1, c); } }

    static PolyQ monomial(const Int& c, long e) {
        PolyQ p;
        if (c != 0) { p.low_ = e; p.c_.assign(1, c); }
        return p;
    }
    static PolyQ q_pow(long e) { return monomial(1, e); }
    // 1 - q^e (e may be 0, giving the zero polynomial)
    static PolyQ one_minus_q_pow(long e) {
        PolyQ p = PolyQ(1);
        p -= q_pow(e);
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    long low() const { return low_; }
    long high() const { return low_ + static_cast<long>(c_.size()) - 1; }

    Int coeff(long e) const {
        if (is_zero() || e < low_ || e > high()) return 0;
        return c_[static_cast<size_t>(e - low_)];
    }

    PolyQ& operator+=(const PolyQ& o) {
        if (o.is_zero()) return *this;
        if (is_zero()) { *this = o; return *this; }
        long nlow = std::min(low_, o.low_);
        long nhigh = std::max(high(), o.high());
        std::vector<Int> nc(static_cast<size_t>(nhigh - nlow + 1));
        for (size_t i = 0; i < c_.size(); ++i) nc[static_cast<size_t>(low_ - nlow) + i] += c_[i];
        for (size_t i = 0; i < o.c_.size(); ++i) nc[static_cast<size_t>(o.low_ - nlow) + i] += o.c_[i];
        low_ = nlow;
        c_ = std::move(nc);
        normalize();
        return *this;
    }
    PolyQ& operator-=(const PolyQ& o) { return *this += o.negated(); }
    PolyQ operator+(const PolyQ& o) const { PolyQ r = *this; r += o; return r; }
    PolyQ operator-(const PolyQ& o) const { PolyQ r = *this; r -= o; return r; }
    PolyQ operator-() const { return negated(); }

    PolyQ negated() const {
        PolyQ r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }

    PolyQ operator*(const PolyQ& o) const {
        if (is_zero() || o.is_zero()) return PolyQ();
        PolyQ r;
        r.low_ = low_ + o.low_;
        r.c_.assign(c_.size() + o.c_.size() - 1, Int(0));
        for (size_t i = 0; i < c_.size(); ++i)
            for (size_t j = 0; j < o.c_.size(); ++j)
                r.c_[i + j] += c_[i] * o.c_[j];
        r.normalize();
        return r;
    }
    PolyQ& operator*=(const PolyQ& o) { *this = *this * o; return *this; }

    PolyQ scaled(const Int& k) const {
        if (k == 0) return PolyQ();
        PolyQ r = *this;
        for (auto& c : r.c_) c *= k;
        return r;
    }
    PolyQ shifted(long e) const {
        PolyQ r = *this;
        if (!r.is_zero()) r.low_ += e;
        return r;
    }

    bool operator==(const PolyQ& o) const { return low_ == o.low_ && c_ == o.c_; }
    bool operator!=(const PolyQ& o) const { return !(*this == o); }

    Rat eval(const Rat& q0) const {
        if (is_zero()) return Rat(0);
        if (q0 == 0 && low_ < 0) throw std::domain_error("PolyQ::eval: pole at q=0");
        Rat acc = 0;
        for (size_t i = c_.size(); i-- > 0;) { acc *= q0; acc += Rat(c_[i]); }
        return acc * pow_rat(q0, low_);
    }
    Int eval_at_one() const {
        Int s = 0;
        for (const auto& c : c_) s += c;
        return s;
    }

    // Exact division by (1 - q); requires eval_at_one() == 0.
    PolyQ div_one_minus_q() const {
        if (is_zero()) return PolyQ();
        if (eval_at_one() != 0)
            throw std::domain_error("PolyQ: not divisible by (1-q)");
        // p = (1-q) s  =>  s_e = sum of coefficients of p up to exponent e.
        PolyQ s;
        s.low_ = low_;
        s.c_.assign(c_.size() - 1, Int(0));
        Int acc = 0;
        for (size_t i = 0; i + 1 < c_.size(); ++i) {
            acc += c_[i];
            s.c_[i] = acc;
        }
        s.normalize();
        return s;
    }

    // Exact polynomial division; nullopt if not exact over Z[q,q^-1].
    std::optional<PolyQ> div_exact(const PolyQ& d) const {
        if (d.is_zero()) throw std::domain_error("PolyQ: division by zero");
        if (is_zero()) return PolyQ();
        PolyQ rem = *this;
        PolyQ quot;
        const Int& dl = d.c_.back();
        while (!rem.is_zero() && rem.c_.size() >= d.c_.size()) {
            Int qc = rem.c_.back() / dl;
            if (qc * dl != rem.c_.back()) return std::nullopt;
            long qe = rem.high() - d.high();
            PolyQ t = monomial(qc, qe);
            quot += t;
            rem -= t * d;
        }
        if (!rem.is_zero()) return std::nullopt;
        return quot;
    }

    Int content() const {
        Int g = 0;
        for (const auto& c : c_) { g = gcd(g, c); if (g == 1) break; }
        return g;
    }

    std::string str(const std::string& var = "q") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (size_t i = 0; i < c_.size(); ++i) {
            const Int& c = c_[i];
            if (c == 0) continue;
            long e = low_ + static_cast<long>(i);
            Int a = abs(c);
            if (first) { if (c < 0) os << "-"; first = false; }
            else os << (c < 0 ? " - " : " + ");
            if (a != 1 || e == 0) os << a.get_str();
            if (e != 0) {
                if (a != 1) os << "*";
                os << var;
                if (e != 1) os << "^" << e;
            }
        }
        return os.str();
    }

private:
    long low_ = 0;
    std::vector<Int> c_;

    void normalize() {
        size_t b = 0, e = c_.size();
        while (e > b && c_[e - 1] == 0) --e;
        while (b < e && c_[b] == 0) ++b;
        if (b == e) { c_.clear(); low_ = 0; return; }
        if (b > 0 || e < c_.size()) {
            std::vector<Int> nc(c_.begin() + static_cast<long>(b), c_.begin() + static_cast<long>(e));
            c_ = std::move(nc);
            low_ += static_cast<long>(b);
        }
    }
};

// (q^m; q)_n = prod_{i=0}^{n-1} (1 - q^{m+i}), exact in Z[q].
inline PolyQ q_pochhammer(long m, long n) {
    if (n < 0) throw std::domain_error("q_pochhammer: negative length");
    PolyQ p(1);
    for (long i = 0; i < n; ++i) p *= PolyQ::one_minus_q_pow(m + i);
    return p;
}

// (q; q)_n
inline PolyQ q_factorial_poch(long n) { return q_pochhammer(1, n); }

// Gaussian binomial [n, k]_q as an exact polynomial.
inline PolyQ q_binomial(long n, long k) {
    if (k < 0 || k > n) return PolyQ();
    PolyQ num(1), den(1);
    for (long i = 0; i < k; ++i) {
        num *= PolyQ::one_minus_q_pow(n - i);
        den *= PolyQ::one_minus_q_pow(i + 1);
    }
    auto q = num.div_exact(den);
    if (!q) throw std::logic_error("q_binomial: division not exact");
    return *q;
}

// Rational function of q: a pair of integer polynomials, normalized so the
// common q-power and integer content are removed and the denominator's
// leading coefficient is positive.  Equality is by cross-multiplication;
// no polynomial gcd is ever computed.
class RatQ {
public:
    RatQ() : num_(), den_(1) {}
    RatQ(long c) : num_(c), den_(1) {}
    RatQ(const PolyQ& n) : num_(n), den_(1) {}
    RatQ(const PolyQ& n, const PolyQ& d) : num_(n), den_(d) {
        if (den_.is_zero()) throw std::domain_error("RatQ: zero denominator");
        normalize();
    }

    const PolyQ& num() const { return num_; }
    const PolyQ& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RatQ operator+(const RatQ& o) const {
        return RatQ(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    RatQ operator-(const RatQ& o) const {
        return RatQ(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    RatQ operator*(const RatQ& o) const { return RatQ(num_ * o.num_, den_ * o.den_); }
    RatQ operator/(const RatQ& o) const {
        if (o.is_zero()) throw std::domain_error("RatQ: division by zero");
        return RatQ(num_ * o.den_, den_ * o.num_);
    }
    RatQ& operator+=(const RatQ& o) { *this = *this + o; return *this; }
    RatQ& operator-=(const RatQ& o) { *this = *this - o; return *this; }
    RatQ& operator*=(const RatQ& o) { *this = *this * o; return *this; }

    bool operator==(const RatQ& o) const { return num_ * o.den_ == o.num_ * den_; }
    bool operator!=(const RatQ& o) const { return !(*this == o); }

    Rat eval(const Rat& q0) const {
        Rat d = den_.eval(q0);
        if (d == 0) throw std::domain_error("RatQ::eval: pole");
        return num_.eval(q0) / d;
    }

    // Exact q->1 limit: strip matched (1-q) factors until one side is
    // nonzero at q=1, then evaluate.
    Rat limit_at_one() const {
        if (is_zero()) return Rat(0);
        PolyQ n = num_, d = den_;
        while (n.eval_at_one() == 0 && d.eval_at_one() == 0) {
            n = n.div_one_minus_q();
            d = d.div_one_minus_q();
        }
        Int dv = d.eval_at_one();
        if (dv == 0) throw std::domain_error("RatQ::limit_at_one: pole at q=1");
        return rat(n.eval_at_one(), dv);
    }

    std::string str() const {
        if (den_ == PolyQ(1)) return num_.str();
        return "(" + num_.str() + ") / (" + den_.str() + ")";
    }

private:
    PolyQ num_, den_;

    void normalize() {
        if (num_.is_zero()) { den_ = PolyQ(1); return; }
        long shift = std::min(num_.low(), den_.low());
        num_ = num_.shifted(-shift);
        den_ = den_.shifted(-shift);
        Int g = gcd(num_.content(), den_.content());
        if (den_.coeff(den_.high()) < 0) g = -g;
        if (g != 1) {
            auto n = num_.div_exact(PolyQ(g));
            auto d = den_.div_exact(PolyQ(g));
            num_ = *n;
            den_ = *d;
        }
    }
};

}  // namespace ytab
