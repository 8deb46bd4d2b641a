#pragma once

#include <set>
#include <sstream>

#include "count.hpp"
#include "uncrowd.hpp"

namespace ytab {

namespace detail {

inline Tableau sbt_from_callback(const Diagram& d, const std::vector<Cell>& cells,
                                 const std::vector<int>& entries, int dbl, int dbl2) {
    std::map<Cell, std::vector<int>> e;
    for (size_t i = 0; i < cells.size(); ++i) {
        if (static_cast<int>(i) == dbl) e[cells[i]] = {entries[i], dbl2};
        else e[cells[i]] = {entries[i]};
    }
    return Tableau(d, std::move(e));
}

inline Tableau syt_from_callback(const Diagram& d, const std::vector<Cell>& cells,
                                 const std::vector<int>& entries) {
    std::map<Cell, std::vector<int>> e;
    for (size_t i = 0; i < cells.size(); ++i) e[cells[i]] = {entries[i]};
    return Tableau(d, std::move(e));
}

inline std::vector<Tableau> all_sbt(const StrictPartition& lam) {
    Diagram d = Diagram::shifted(lam);
    std::vector<Tableau> out;
    enumerate_sbt(d, [&](const std::vector<Cell>& cells, const std::vector<int>& entries,
                         int dbl, int dbl2) {
        out.push_back(sbt_from_callback(d, cells, entries, dbl, dbl2));
    });
    return out;
}

}  // namespace detail

struct BijectionVerdict {
    bool ok = true;
    std::string detail;
};

// The rightward map is a bijection from {SBT, double cell in column k} onto
// {SBT, double cell in column k+1} u {SYT of the grown shape}, for every
// n <= k <= lambda_1.  Verified by applying the map everywhere and checking
// validity, injectivity and the cardinality identity.
inline BijectionVerdict check_uncrowd_k2(const StrictPartition& lam) {
    BijectionVerdict v;
    int n = lam.length();
    auto sbts = detail::all_sbt(lam);
    for (int k = n; k <= lam.width(); ++k) {
        std::set<std::string> images;
        long in_col = 0, sbt_images = 0, syt_images = 0;
        for (const Tableau& t : sbts) {
            if (t.double_cell().col != k) continue;
            ++in_col;
            Tableau out = uncrowd_right(t);
            if (!out.is_standard()) { v.ok = false; v.detail = "invalid image"; return v; }
            if (!images.insert(out.to_json()).second) {
                v.ok = false;
                v.detail = "not injective at column " + std::to_string(k);
                return v;
            }
            if (out.is_sbt()) {
                if (out.double_cell().col != k + 1) { v.ok = false; v.detail = "wrong column"; return v; }
                ++sbt_images;
            } else {
                ++syt_images;
            }
        }
        // cardinalities: g_k = g_{k+1} + g^{lambda u {(i+1,k+1)}}
        long next_col = 0;
        for (const Tableau& t : sbts)
            if (t.double_cell().col == k + 1) ++next_col;
        if (sbt_images != next_col) {
            v.ok = false;
            v.detail = "image misses SBTs at column " + std::to_string(k);
            return v;
        }
        Int grown = 0;
        for (const Cell& c : ne_corners(lam))
            if (c.col == k + 1) grown = count_syt_shifted_grown(lam, c);
        if (Int(syt_images) != grown) {
            v.ok = false;
            v.detail = "image misses grown SYTs at column " + std::to_string(k);
            return v;
        }
    }
    return v;
}

// The leftward map: {SBT, double in column k, off-diagonal} -> {SBT, double
// in column k-1} bijectively, for 1 <= k <= n.
inline BijectionVerdict check_uncrowd_k1(const StrictPartition& lam) {
    BijectionVerdict v;
    int n = lam.length();
    auto sbts = detail::all_sbt(lam);
    for (int k = 1; k <= n; ++k) {
        std::set<std::string> images;
        long moved = 0;
        for (const Tableau& t : sbts) {
            Cell dc = t.double_cell();
            if (dc.col != k || dc.row == dc.col) continue;
            Tableau out = uncrowd_left(t);
            if (!out.is_sbt() || out.double_cell().col != k - 1) {
                v.ok = false;
                v.detail = "invalid image at column " + std::to_string(k);
                return v;
            }
            if (!images.insert(out.to_json()).second) {
                v.ok = false;
                v.detail = "not injective at column " + std::to_string(k);
                return v;
            }
            ++moved;
        }
        long prev_col = 0;
        for (const Tableau& t : sbts)
            if (t.double_cell().col == k - 1) ++prev_col;
        if (moved != prev_col) {
            v.ok = false;
            v.detail = "cardinality mismatch at column " + std::to_string(k);
            return v;
        }
    }
    return v;
}

// The diagonal map: SYT(lambda u {(i+1,i)}) -> {SBT, double at (i,i) or
// (i+1,i+1)} bijectively, for 1 <= i <= n-1; for i = 0 the image is exactly
// the SBTs with double cell (1,1).
inline BijectionVerdict check_uncrowd_diag(const StrictPartition& lam) {
    BijectionVerdict v;
    int n = lam.length();
    auto sbts = detail::all_sbt(lam);
    auto diag_count = [&](int i) {
        long c = 0;
        for (const Tableau& t : sbts) {
            Cell dc = t.double_cell();
            if (dc.row == i && dc.col == i) ++c;
        }
        return c;
    };
    for (int i = 0; i <= n - 1; ++i) {
        Diagram ext = Diagram::extended(lam, i + 1);
        std::set<std::string> images;
        long total = 0, to_upper = 0, to_lower = 0;
        enumerate_syt(ext, [&](const std::vector<Cell>& cells, const std::vector<int>& entries) {
            Tableau t = detail::syt_from_callback(ext, cells, entries);
            Tableau out = uncrowd_diag(t);
            ++total;
            if (!out.is_sbt()) { v.ok = false; v.detail = "invalid image"; return; }
            Cell dc = out.double_cell();
            if (dc.row == i && dc.col == i) ++to_upper;
            else if (dc.row == i + 1 && dc.col == i + 1) ++to_lower;
            else { v.ok = false; v.detail = "image off the expected diagonal"; return; }
            if (!images.insert(out.to_json()).second) { v.ok = false; v.detail = "not injective"; }
        });
        if (!v.ok) return v;
        long expect = (i == 0 ? 0 : diag_count(i)) + diag_count(i + 1);
        if (total != expect || to_upper != (i == 0 ? 0 : diag_count(i)) ||
            to_lower != diag_count(i + 1)) {
            v.ok = false;
            v.detail = "cardinality mismatch at i=" + std::to_string(i);
            return v;
        }
    }
    return v;
}

}  // namespace ytab
