#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <vector>

#include "count.hpp"
#include "partition.hpp"
#include "shapes.hpp"

namespace ytab {

// Number of elements covered by mu in (shifted) Young's lattice; for a
// downward-closed interval this is also the down-degree inside the interval.
inline int down_degree(const Parts& mu, Kind kind) {
    int n = static_cast<int>(mu.size());
    if (n == 0) return 0;
    int d = 0;
    if (kind == Kind::straight) {
        for (int i = 0; i < n; ++i)
            if (i + 1 == n || mu[static_cast<size_t>(i)] > mu[static_cast<size_t>(i + 1)]) ++d;
    } else {
        for (int i = 0; i + 1 < n; ++i)
            if (mu[static_cast<size_t>(i)] > mu[static_cast<size_t>(i + 1)] + 1) ++d;
        ++d;  // the last row is always removable
    }
    return d;
}

// The shapes obtained from mu by deleting one cell.
inline std::vector<Parts> covered_shapes(const Parts& mu, Kind kind) {
    std::vector<Parts> out;
    int n = static_cast<int>(mu.size());
    for (int i = 0; i < n; ++i) {
        int v = mu[static_cast<size_t>(i)] - 1;
        bool ok;
        if (kind == Kind::straight)
            ok = (i + 1 == n) ? true : v >= mu[static_cast<size_t>(i + 1)];
        else
            ok = (i + 1 == n) ? true : v > mu[static_cast<size_t>(i + 1)];
        if (!ok) continue;
        Parts nu = mu;
        nu[static_cast<size_t>(i)] = v;
        if (v == 0) nu.pop_back();
        out.push_back(std::move(nu));
    }
    return out;
}

// The lower interval [empty, lambda]: all sub-shapes with cover lists and
// down-degrees, ordered by (size, lex).
struct IntervalIndex {
    Kind kind;
    Parts lam;
    std::vector<Parts> elems;
    std::vector<std::vector<int>> down;  // indices of covered elements
    std::vector<std::vector<int>> up;    // indices of covering elements
    std::vector<int> ddeg;

    long size() const { return static_cast<long>(elems.size()); }
    int index_of(const Parts& p) const {
        auto it = std::lower_bound(elems.begin(), elems.end(), p, elem_less);
        if (it == elems.end() || *it != p) throw std::domain_error("interval: shape not found");
        return static_cast<int>(it - elems.begin());
    }
    static bool elem_less(const Parts& a, const Parts& b) {
        long sa = parts_sum(a), sb = parts_sum(b);
        if (sa != sb) return sa < sb;
        return a < b;
    }
};

namespace detail {

template <typename F>
void for_each_subshape_impl(const Parts& lam, Kind kind, Parts& cur, size_t row, F&& f) {
    f(const_cast<const Parts&>(cur));
    if (row >= lam.size()) return;
    int hi = lam[row];
    if (!cur.empty()) {
        int cap = kind == Kind::straight ? cur.back() : cur.back() - 1;
        hi = std::min(hi, cap);
    }
    for (int v = 1; v <= hi; ++v) {
        cur.push_back(v);
        for_each_subshape_impl(lam, kind, cur, row + 1, f);
        cur.pop_back();
    }
}

}  // namespace detail

// Visit every sub-shape of lambda exactly once (the empty shape first;
// otherwise unspecified order).
template <typename F>
void for_each_subshape(const Parts& lam, Kind kind, F&& f) {
    Parts cur;
    detail::for_each_subshape_impl(lam, kind, cur, 0, f);
}

inline IntervalIndex enumerate_interval(const Parts& lam, Kind kind) {
    IntervalIndex idx;
    idx.kind = kind;
    idx.lam = lam;
    for_each_subshape(lam, kind, [&](const Parts& mu) { idx.elems.push_back(mu); });
    std::sort(idx.elems.begin(), idx.elems.end(), IntervalIndex::elem_less);
    long m = idx.size();
    idx.down.resize(static_cast<size_t>(m));
    idx.up.resize(static_cast<size_t>(m));
    idx.ddeg.resize(static_cast<size_t>(m));
    for (long i = 0; i < m; ++i) {
        const Parts& mu = idx.elems[static_cast<size_t>(i)];
        for (const Parts& nu : covered_shapes(mu, kind)) {
            int j = idx.index_of(nu);
            idx.down[static_cast<size_t>(i)].push_back(j);
            idx.up[static_cast<size_t>(j)].push_back(static_cast<int>(i));
        }
        idx.ddeg[static_cast<size_t>(i)] = static_cast<int>(idx.down[static_cast<size_t>(i)].size());
    }
    return idx;
}

// Saturated chain counts: down[i] = #chains from the empty shape up to
// elems[i] (equals the SYT count of that shape), up[i] = #chains from
// elems[i] up to lambda.
struct ChainWeights {
    std::vector<Int> down, up;
};

inline ChainWeights chain_weights(const IntervalIndex& idx) {
    ChainWeights w;
    size_t m = static_cast<size_t>(idx.size());
    w.down.assign(m, Int(0));
    w.up.assign(m, Int(0));
    w.down[0] = 1;  // the empty shape comes first in (size, lex) order
    for (size_t i = 1; i < m; ++i)
        for (int j : idx.down[i]) w.down[i] += w.down[static_cast<size_t>(j)];
    w.up[m - 1] = 1;  // lambda comes last
    for (size_t i = m - 1; i-- > 0;)
        for (int j : idx.up[i]) w.up[i] += w.up[static_cast<size_t>(j)];
    return w;
}

// Interval cardinality and total down-degree, accumulated without building
// the index.
struct IntervalSums {
    Int count = 0;
    Int ddeg_sum = 0;
};

inline IntervalSums interval_sums(const Parts& lam, Kind kind) {
    IntervalSums s;
    for_each_subshape(lam, kind, [&](const Parts& mu) {
        s.count += 1;
        s.ddeg_sum += down_degree(mu, kind);
    });
    return s;
}

// R(lambda) and R^{(+1)}(lambda) for a shifted shape.
inline std::pair<Int, Int> r_counts(const StrictPartition& lam) {
    IntervalSums s = interval_sums(lam.parts(), Kind::shifted);
    return {s.count, s.ddeg_sum};
}

// The border decomposition R^{(+1)}(lambda) = sum_{x in B} R(lambda(x)).
inline Int r_plus_via_border(const StrictPartition& lam) {
    Int total = 0;
    for (const Cell& x : border(lam)) {
        StrictPartition mu = contract(lam, x);
        total += interval_sums(mu.parts(), Kind::shifted).count;
    }
    return total;
}

struct TrapezoidCounts {
    Int R;
    Int R_plus;
    Rat E_X;
};

// Closed forms for the trapezoid (N, N-2, ..., N-2n+2):
// R = C(N+1, n), R^{(+1)} = |lambda|/(N+1) C(N+1, n), E(X) = |lambda|/(N+1).
inline TrapezoidCounts trapezoid_closed(int N, int n) {
    if (n < 1 || N - 2 * n + 2 < 1)
        throw std::domain_error("trapezoid_closed: need n >= 1 and N - 2n + 2 >= 1");
    long sz = static_cast<long>(n) * (N - n + 1);
    TrapezoidCounts t;
    t.R = binomial(N + 1, n);
    Rat rp = rat(sz, N + 1) * Rat(t.R);
    t.R_plus = to_int(rp);
    t.E_X = rat(sz, N + 1);
    return t;
}

// Antichain size counts of the cell poset P_lambda (x <= y iff x is weakly
// southeast of y).  Antichains are row-increasing, column-decreasing cell
// chains; counts[k] = number of antichains of size k.
inline std::vector<Int> antichain_size_counts(const Parts& lam, Kind kind) {
    int n = static_cast<int>(lam.size());
    auto first_col = [&](int r) { return kind == Kind::straight ? 1 : r; };
    auto last_col = [&](int r) { return kind == Kind::straight ? lam[static_cast<size_t>(r - 1)]
                                                               : lam[static_cast<size_t>(r - 1)] + r - 1; };
    std::vector<Int> counts(1, Int(1));  // the empty antichain
    // extend[r][c]: start cells scanned row by row; DFS over (row, col) with
    // strictly increasing rows and strictly decreasing columns
    std::function<void(int, int, size_t)> rec = [&](int row, int maxcol, size_t depth) {
        for (int r = row; r <= n; ++r) {
            int lo = first_col(r), hi = std::min(last_col(r), maxcol);
            for (int c = lo; c <= hi; ++c) {
                if (counts.size() <= depth + 1) counts.push_back(Int(0));
                counts[depth + 1] += 1;
                rec(r + 1, c - 1, depth + 1);
            }
        }
    };
    rec(1, n == 0 ? 0 : last_col(1), 0);
    return counts;
}

inline Rat antichain_average(const Parts& lam, Kind kind) {
    auto counts = antichain_size_counts(lam, kind);
    Int total = 0, weighted = 0;
    for (size_t k = 0; k < counts.size(); ++k) {
        total += counts[k];
        weighted += Int(static_cast<long>(k)) * counts[k];
    }
    return rat(weighted, total);
}

}  // namespace ytab
