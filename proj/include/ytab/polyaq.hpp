#pragma once

#include <optional>
#include <sstream>
#include <vector>

#include "polyq.hpp"

namespace ytab {

// Integer-coefficient polynomial in a and q, dense in a (the a-degree stays
// tiny everywhere in this library) with PolyQ coefficients.  q-exponents are
// kept nonnegative; negative powers of q live in RatAQ denominators.
class PolyAQ {
public:
    PolyAQ() = default;
    PolyAQ(long c) { if (c != 0) ca_.assign(1, PolyQ(c)); normalize(); }
    PolyAQ(const PolyQ& p) { ca_.assign(1, p); normalize(); }

    static PolyAQ monomial(const Int& c, long adeg, long qdeg) {
        PolyAQ p;
        if (c != 0) {
            p.ca_.assign(static_cast<size_t>(adeg + 1), PolyQ());
            p.ca_.back() = PolyQ::monomial(c, qdeg);
        }
        return p;
    }
    // 1 - a^i q^e
    static PolyAQ one_minus_aq(long adeg, long qdeg) {
        PolyAQ p(1);
        p -= monomial(1, adeg, qdeg);
        return p;
    }

    bool is_zero() const { return ca_.empty(); }
    long a_degree() const { return static_cast<long>(ca_.size()) - 1; }
    const PolyQ& a_coeff(long i) const {
        static const PolyQ zero;
        if (i < 0 || i > a_degree()) return zero;
        return ca_[static_cast<size_t>(i)];
    }
    const PolyQ& a_lead() const {
        if (is_zero()) throw std::domain_error("PolyAQ: leading term of zero");
        return ca_.back();
    }

    long q_low() const {
        long m = 0; bool seen = false;
        for (const auto& p : ca_)
            if (!p.is_zero()) { m = seen ? std::min(m, p.low()) : p.low(); seen = true; }
        return seen ? m : 0;
    }
    long q_high() const {
        long m = 0; bool seen = false;
        for (const auto& p : ca_)
            if (!p.is_zero()) { m = seen ? std::max(m, p.high()) : p.high(); seen = true; }
        return seen ? m : 0;
    }

    PolyAQ& operator+=(const PolyAQ& o) {
        if (ca_.size() < o.ca_.size()) ca_.resize(o.ca_.size());
        for (size_t i = 0; i < o.ca_.size(); ++i) ca_[i] += o.ca_[i];
        normalize();
        return *this;
    }
    PolyAQ& operator-=(const PolyAQ& o) {
        if (ca_.size() < o.ca_.size()) ca_.resize(o.ca_.size());
        for (size_t i = 0; i < o.ca_.size(); ++i) ca_[i] -= o.ca_[i];
        normalize();
        return *this;
    }
    PolyAQ operator+(const PolyAQ& o) const { PolyAQ r = *this; r += o; return r; }
    PolyAQ operator-(const PolyAQ& o) const { PolyAQ r = *this; r -= o; return r; }
    PolyAQ operator-() const {
        PolyAQ r = *this;
        for (auto& p : r.ca_) p = p.negated();
        return r;
    }
    PolyAQ operator*(const PolyAQ& o) const {
        if (is_zero() || o.is_zero()) return PolyAQ();
        PolyAQ r;
        r.ca_.assign(ca_.size() + o.ca_.size() - 1, PolyQ());
        for (size_t i = 0; i < ca_.size(); ++i) {
            if (ca_[i].is_zero()) continue;
            for (size_t j = 0; j < o.ca_.size(); ++j)
                r.ca_[i + j] += ca_[i] * o.ca_[j];
        }
        r.normalize();
        return r;
    }
    PolyAQ& operator*=(const PolyAQ& o) { *this = *this * o; return *this; }

    bool operator==(const PolyAQ& o) const { return ca_ == o.ca_; }
    bool operator!=(const PolyAQ& o) const { return !(*this == o); }

    PolyAQ q_shifted(long e) const {
        PolyAQ r = *this;
        for (auto& p : r.ca_) p = p.shifted(e);
        return r;
    }

    Int content() const {
        Int g = 0;
        for (const auto& p : ca_) { g = gcd(g, p.content()); if (g == 1) break; }
        return g;
    }

    // Coefficient of the minimal monomial under (total degree, a-deg, q-deg);
    // the display order's first term.
    Int first_coeff() const {
        bool seen = false;
        long bt = 0, ba = 0, bq = 0;
        Int c = 0;
        for (long i = 0; i <= a_degree(); ++i) {
            const PolyQ& p = ca_[static_cast<size_t>(i)];
            if (p.is_zero()) continue;
            for (long e = p.low(); e <= p.high(); ++e) {
                if (p.coeff(e) == 0) continue;
                long t = i + e;
                if (!seen || t < bt || (t == bt && (i < ba || (i == ba && e < bq)))) {
                    seen = true; bt = t; ba = i; bq = e; c = p.coeff(e);
                }
            }
        }
        return c;
    }

    // Value at q=1 as a polynomial in a (coefficient list, lowest first).
    std::vector<Int> eval_q1() const {
        std::vector<Int> v;
        for (const auto& p : ca_) v.push_back(p.eval_at_one());
        while (!v.empty() && v.back() == 0) v.pop_back();
        return v;
    }
    bool vanishes_at_q1() const { return eval_q1().empty(); }

    PolyAQ div_one_minus_q() const {
        PolyAQ r = *this;
        for (auto& p : r.ca_) p = p.div_one_minus_q();
        r.normalize();
        return r;
    }

    // Exact division (long division in a, exact PolyQ division per step).
    std::optional<PolyAQ> div_exact(const PolyAQ& d) const {
        if (d.is_zero()) throw std::domain_error("PolyAQ: division by zero");
        if (is_zero()) return PolyAQ();
        PolyAQ rem = *this, quot;
        while (!rem.is_zero() && rem.a_degree() >= d.a_degree()) {
            auto qc = rem.a_lead().div_exact(d.a_lead());
            if (!qc) return std::nullopt;
            PolyAQ t;
            t.ca_.assign(static_cast<size_t>(rem.a_degree() - d.a_degree() + 1), PolyQ());
            t.ca_.back() = *qc;
            quot += t;
            rem -= t * d;
        }
        if (!rem.is_zero()) return std::nullopt;
        return quot;
    }

    Rat eval(const Rat& a0, const Rat& q0) const {
        Rat acc = 0;
        for (size_t i = ca_.size(); i-- > 0;) { acc *= a0; acc += ca_[i].eval(q0); }
        return acc;
    }

    // Monomials sorted by total degree, then a-exponent, then q-exponent.
    std::string str() const {
        if (is_zero()) return "0";
        struct Term { long tot, ad, qd; Int c; };
        std::vector<Term> terms;
        for (long i = 0; i <= a_degree(); ++i) {
            const PolyQ& p = ca_[static_cast<size_t>(i)];
            if (p.is_zero()) continue;
            for (long e = p.low(); e <= p.high(); ++e)
                if (p.coeff(e) != 0) terms.push_back({i + e, i, e, p.coeff(e)});
        }
        std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) {
            if (x.tot != y.tot) return x.tot < y.tot;
            if (x.ad != y.ad) return x.ad < y.ad;
            return x.qd < y.qd;
        });
        std::ostringstream os;
        bool first = true;
        for (const auto& t : terms) {
            Int a = abs(t.c);
            if (first) { if (t.c < 0) os << "-"; first = false; }
            else os << (t.c < 0 ? " - " : " + ");
            bool unit = (a == 1) && (t.ad != 0 || t.qd != 0);
            if (!unit) os << a.get_str();
            bool star = !unit;
            if (t.ad != 0) {
                if (star) os << "*";
                os << "a";
                if (t.ad != 1) os << "^" << t.ad;
                star = true;
            }
            if (t.qd != 0) {
                if (star) os << "*";
                os << "q";
                if (t.qd != 1) os << "^" << t.qd;
            }
        }
        return os.str();
    }

private:
    std::vector<PolyQ> ca_;

    void normalize() {
        while (!ca_.empty() && ca_.back().is_zero()) ca_.pop_back();
    }
};

// Rational function in (a, q).  Normalization removes the common integer
// content and the common monomial a^i q^j and gives the denominator a
// positive leading coefficient (highest a-degree, then highest q-degree).
// Equality is decided by cross-multiplication.
class RatAQ {
public:
    RatAQ() : num_(), den_(1) {}
    RatAQ(long c) : num_(c), den_(1) {}
    RatAQ(const PolyAQ& n) : num_(n), den_(1) {}
    RatAQ(const PolyAQ& n, const PolyAQ& d) : num_(n), den_(d) {
        if (den_.is_zero()) throw std::domain_error("RatAQ: zero denominator");
        normalize();
    }

    const PolyAQ& num() const { return num_; }
    const PolyAQ& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RatAQ operator+(const RatAQ& o) const {
        return RatAQ(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    RatAQ operator-(const RatAQ& o) const {
        return RatAQ(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    RatAQ operator*(const RatAQ& o) const { return RatAQ(num_ * o.num_, den_ * o.den_); }
    RatAQ operator/(const RatAQ& o) const {
        if (o.is_zero()) throw std::domain_error("RatAQ: division by zero");
        return RatAQ(num_ * o.den_, den_ * o.num_);
    }
    RatAQ& operator+=(const RatAQ& o) { *this = *this + o; return *this; }

    bool operator==(const RatAQ& o) const { return num_ * o.den_ == o.num_ * den_; }
    bool operator!=(const RatAQ& o) const { return !(*this == o); }

    Rat eval(const Rat& a0, const Rat& q0) const {
        Rat d = den_.eval(a0, q0);
        if (d == 0) throw std::domain_error("RatAQ::eval: pole");
        return num_.eval(a0, q0) / d;
    }

    // Strip matched factors from a small basis -- q^k, (1-q^k), (1-a q^k) --
    // for a compact factored display.  Equality never needs this.
    RatAQ display_reduced() const {
        if (is_zero()) return *this;
        PolyAQ n = num_, d = den_;
        long qmax = std::max(n.q_high(), d.q_high());
        auto strip = [&](const PolyAQ& f) {
            while (true) {
                auto nn = n.div_exact(f);
                if (!nn) return;
                auto dd = d.div_exact(f);
                if (!dd) return;
                n = *nn;
                d = *dd;
            }
        };
        for (long k = qmax; k >= 1; --k) strip(PolyAQ::one_minus_aq(0, k));
        for (long k = qmax; k >= 0; --k) strip(PolyAQ::one_minus_aq(1, k));
        RatAQ r;
        r.num_ = n;
        r.den_ = d;
        r.normalize();
        return r;
    }

    std::string str() const { return num_.str() + " / " + den_.str(); }

private:
    PolyAQ num_, den_;

    void normalize() {
        if (num_.is_zero()) { den_ = PolyAQ(1); return; }
        long qshift = std::min(num_.q_low(), den_.q_low());
        num_ = num_.q_shifted(-qshift);
        den_ = den_.q_shifted(-qshift);
        // common a-power
        auto a_low = [](const PolyAQ& p) {
            for (long i = 0; i <= p.a_degree(); ++i)
                if (!p.a_coeff(i).is_zero()) return i;
            return 0L;
        };
        long ashift = std::min(a_low(num_), a_low(den_));
        if (ashift > 0) {
            PolyAQ am = PolyAQ::monomial(1, ashift, 0);
            num_ = *num_.div_exact(am);
            den_ = *den_.div_exact(am);
        }
        Int g = gcd(num_.content(), den_.content());
        if (den_.first_coeff() < 0) g = -g;
        if (g != 1) {
            num_ = *num_.div_exact(PolyAQ(PolyQ(g)));
            den_ = *den_.div_exact(PolyAQ(PolyQ(g)));
        }
    }
};

}  // namespace ytab
