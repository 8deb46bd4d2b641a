#pragma once

#include <vector>

#include "polyq.hpp"

namespace ytab {

// Truncated integer power series in q: coefficients of q^0..q^D.  All
// operations truncate at the common order D.
class QSeries {
public:
    explicit QSeries(long D) : c_(static_cast<size_t>(D + 1), Int(0)) {
        if (D < 0) throw std::domain_error("QSeries: negative order");
    }
    QSeries(long D, const PolyQ& p) : QSeries(D) {
        if (!p.is_zero() && p.low() < 0)
            throw std::domain_error("QSeries: negative exponents");
        for (long e = 0; e <= order() && e <= (p.is_zero() ? -1 : p.high()); ++e)
            c_[static_cast<size_t>(e)] = p.coeff(e);
    }

    long order() const { return static_cast<long>(c_.size()) - 1; }
    const Int& coeff(long e) const { return c_.at(static_cast<size_t>(e)); }
    Int& coeff(long e) { return c_.at(static_cast<size_t>(e)); }

    QSeries truncated(long D) const {
        QSeries r(D);
        for (long e = 0; e <= D && e <= order(); ++e) r.c_[static_cast<size_t>(e)] = coeff(e);
        return r;
    }

    QSeries operator+(const QSeries& o) const {
        check(o);
        QSeries r = *this;
        for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
        return r;
    }
    QSeries operator-(const QSeries& o) const {
        check(o);
        QSeries r = *this;
        for (size_t i = 0; i < c_.size(); ++i) r.c_[i] -= o.c_[i];
        return r;
    }
    QSeries operator*(const QSeries& o) const {
        check(o);
        QSeries r(order());
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            for (size_t j = 0; i + j < c_.size(); ++j)
                r.c_[i + j] += c_[i] * o.c_[j];
        }
        return r;
    }

    // Multiplicative inverse; requires constant coefficient +-1.
    QSeries inverse() const {
        const Int& c0 = c_[0];
        if (c0 != 1 && c0 != -1)
            throw std::domain_error("QSeries::inverse: constant term not a unit");
        QSeries r(order());
        r.c_[0] = c0;  // 1/c0 == c0 for units
        for (size_t n = 1; n < c_.size(); ++n) {
            Int acc = 0;
            for (size_t k = 1; k <= n; ++k) acc += c_[k] * r.c_[n - k];
            r.c_[n] = -acc * c0;
        }
        return r;
    }

    bool operator==(const QSeries& o) const { return c_ == o.c_; }
    bool operator!=(const QSeries& o) const { return !(*this == o); }

    std::string str() const {
        PolyQ p;
        for (size_t i = 0; i < c_.size(); ++i)
            p += PolyQ::monomial(c_[i], static_cast<long>(i));
        return p.str() + " + O(q^" + std::to_string(order() + 1) + ")";
    }

private:
    std::vector<Int> c_;
    void check(const QSeries& o) const {
        if (o.order() != order()) throw std::domain_error("QSeries: order mismatch");
    }
};

// Series expansion of a rational function to order D.  The denominator must
// have unit constant coefficient and the value must have no pole at q=0.
inline QSeries series_of(const RatQ& f, long D) {
    if (f.is_zero()) return QSeries(D);
    if (f.num().low() < 0)
        throw std::domain_error("series_of: negative q-powers remain");
    QSeries num(D, f.num());
    QSeries den(D, f.den());
    return num * den.inverse();
}

}  // namespace ytab
