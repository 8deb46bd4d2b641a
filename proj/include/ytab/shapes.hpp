#pragma once

#include <optional>
#include <string>
#include <vector>

#include "diagram.hpp"
#include "partition.hpp"

namespace ytab {

// Cells x not in mu such that mu u {x} is a Young diagram, sorted by row.
// Always includes (1, mu_1+1) and (l+1, 1).
inline std::vector<Cell> inner_corners(const Partition& mu) {
    std::vector<Cell> out;
    int n = mu.length();
    for (int i = 1; i <= n + 1; ++i) {
        int prev = (i == 1) ? -1 : mu.part(i - 1);  // -1 = unbounded
        int cur = mu.part(i);
        if (prev == -1 || cur < prev) out.push_back({i, cur + 1});
    }
    return out;
}

// Cells (k, k+lambda_k) with lambda_k <= lambda_{k-1} - 2 (lambda_0 = inf).
// By convention (n+1, n+1) is never included.
inline std::vector<Cell> ne_corners(const StrictPartition& lam) {
    std::vector<Cell> out;
    for (int k = 1; k <= lam.length(); ++k) {
        if (k == 1 || lam.part(k) <= lam.part(k - 1) - 2)
            out.push_back({k, k + lam.part(k)});
    }
    return out;
}

// Cells (i,j) of the shifted diagram with (i+1, j+1) outside.
inline std::vector<Cell> border(const StrictPartition& lam) {
    if (lam.empty()) throw std::domain_error("border: empty shape");
    Diagram d = Diagram::shifted(lam);
    std::vector<Cell> out;
    for (int i = 1; i <= lam.length(); ++i)
        for (int c = d.row_first_col(i); c <= d.row_last_col(i); ++c)
            if (!d.contains({i + 1, c + 1})) out.push_back({i, c});
    return out;
}

// The contraction lambda(x) for x on the border: removes the hook-like
// shaded region through x and reattaches the two remaining pieces.
inline StrictPartition contract(const StrictPartition& lam, const Cell& x) {
    auto b = border(lam);
    if (std::find(b.begin(), b.end(), x) == b.end())
        throw std::domain_error("contract: cell not on the border");
    int n = lam.length();
    Parts out;
    if (x.row == n && x.col == n) {
        for (int t = 1; t <= n - 1; ++t)
            if (lam.part(t) - 1 > 0) out.push_back(lam.part(t) - 1);
    } else {
        int i = x.row, j = x.col;
        for (int t = 1; t <= i - 1; ++t)
            if (lam.part(t) - 2 > 0) out.push_back(lam.part(t) - 2);
        for (int t = i + 1; t <= n; ++t) {
            int v = (lam.part(t) + t - 1 == j) ? lam.part(t) - 1 : lam.part(t);
            if (v > 0) out.push_back(v);
        }
    }
    return StrictPartition(out);
}

struct Classification {
    // straight shapes
    bool balanced = false;
    Rat slope = 0;  // l(lambda)/lambda_1 when balanced
    // shifted shapes
    bool shifted_balanced = false;
    bool trapezoidal = false;

    std::string label(Kind kind) const {
        if (kind == Kind::straight) return balanced ? "balanced" : "none";
        if (shifted_balanced && trapezoidal) return "balanced+trapezoidal";
        if (shifted_balanced) return "balanced";
        if (trapezoidal) return "trapezoidal";
        return "none";
    }
};

// Balanced: every inner corner (i,j) satisfies l(j-1) + w(i-1) = w*l, i.e.
// the top-right corner of the corner's left cell lies on the line from the
// end of row 1 to the end of column 1.
inline bool is_balanced(const Partition& mu, const Rat* required_slope = nullptr) {
    if (mu.empty()) return true;
    long w = mu.width(), l = mu.length();
    if (required_slope && rat(l, w) != *required_slope) return false;
    for (const Cell& c : inner_corners(mu))
        if (l * (c.col - 1) + w * (c.row - 1) != w * l) return false;
    return true;
}

inline Classification classify(const Parts& shape, Kind kind) {
    Classification cls;
    if (kind == Kind::straight) {
        Partition lam(shape);
        cls.balanced = is_balanced(lam);
        if (!lam.empty()) cls.slope = rat(lam.length(), lam.width());
        return cls;
    }
    StrictPartition lam(shape);
    int n = lam.length();
    if (n == 0) return cls;
    // mu = lambda - delta_{n+1} if lambda_n = 1, else lambda - delta_n;
    // shifted-balanced iff mu is a partition, balanced of slope exactly 1
    // (empty mu counts as balanced).
    {
        int dn = (lam.part(n) == 1) ? n + 1 : n;
        std::vector<int> v;
        bool ok = true;
        for (int i = 1; i <= n && ok; ++i) {
            int x = lam.part(i) - (dn - i);
            if (x < 0) ok = false;
            v.push_back(x);
        }
        for (size_t i = 0; ok && i + 1 < v.size(); ++i)
            if (v[i] < v[i + 1]) ok = false;
        if (ok) {
            Parts mu;
            for (int x : v)
                if (x > 0) mu.push_back(x);
            Partition m(mu);
            Rat one = rat(1);
            cls.shifted_balanced = m.empty() || is_balanced(m, &one);
        }
    }
    cls.trapezoidal = true;
    for (int i = 1; i < n; ++i)
        if (lam.part(i) - lam.part(i + 1) != 2) { cls.trapezoidal = false; break; }
    return cls;
}

// The shape families with closed-form expectations.
inline StrictPartition make_trapezoid(int N, int n) {
    if (n < 1 || N - 2 * n + 2 < 1)
        throw std::domain_error("trapezoid: need n >= 1 and N - 2n + 2 >= 1");
    Parts p;
    for (int i = 0; i < n; ++i) p.push_back(N - 2 * i);
    return StrictPartition(p);
}

// delta_e with every cell replaced by an a x b rectangle (straight shape).
inline Partition make_rect_staircase(int d, int a, int b) {
    if (d < 2 || a < 1 || b < 1)
        throw std::domain_error("rect_staircase: need d >= 2, a, b >= 1");
    Parts p;
    for (int i = 1; i <= d - 1; ++i)
        for (int r = 0; r < a; ++r) p.push_back(b * (d - i));
    return Partition(p);
}

// delta_d + delta_e(a^a), the shifted family with E = (d + a(e-1))/4.
inline StrictPartition make_delta_sum(int a, int d, int e) {
    if (a < 1 || d < 1 || e < 1 || d <= a * (e - 1) + 1)
        throw std::domain_error("delta_sum: need a,d,e >= 1 and d > a(e-1)+1");
    Parts block;  // delta_e(a^a)
    for (int i = 1; i <= e - 1; ++i)
        for (int r = 0; r < a; ++r) block.push_back(a * (e - i));
    return StrictPartition(add_parts(delta_parts(d), block));
}

// delta_{n+1} + nu, nu balanced of slope 1 with width = height = k < n.
inline StrictPartition make_balanced_shifted1(int n, const Partition& nu) {
    int k = nu.width();
    Rat one = rat(1);
    if (!nu.empty() && (nu.length() != k || !is_balanced(nu, &one)))
        throw std::domain_error("balanced_shifted1: nu must be balanced with equal height and width");
    if (k >= n) throw std::domain_error("balanced_shifted1: need width(nu) < n");
    return StrictPartition(add_parts(delta_parts(n + 1), nu.parts()));
}

// delta_{n+1} + (n-1-k)^n + nu.
inline StrictPartition make_balanced_shifted2(int n, int k, const Partition& nu) {
    Rat one = rat(1);
    if (!nu.empty() && (nu.width() != k || nu.length() != k || !is_balanced(nu, &one)))
        throw std::domain_error("balanced_shifted2: nu must be balanced with height = width = k");
    if (k < 0 || k >= n) throw std::domain_error("balanced_shifted2: need 0 <= k < n");
    Parts p = add_parts(delta_parts(n + 1), rect_parts(n - 1 - k, n));
    return StrictPartition(add_parts(p, nu.parts()));
}

}  // namespace ytab
