#pragma once

#include <functional>
#include <map>
#include <vector>

#include "diagram.hpp"

namespace ytab {

namespace detail {

// Flattened cell poset of a diagram: for each cell its left/up predecessor
// and right/down successor indices, -1 when absent.
struct CellPoset {
    std::vector<Cell> cells;
    std::vector<int> left, up, right, down;

    explicit CellPoset(const Diagram& d) : cells(d.cells()) {
        std::map<Cell, int> idx;
        for (size_t i = 0; i < cells.size(); ++i) idx[cells[i]] = static_cast<int>(i);
        auto find = [&](Cell c) {
            auto it = idx.find(c);
            return it == idx.end() ? -1 : it->second;
        };
        for (const Cell& c : cells) {
            left.push_back(find({c.row, c.col - 1}));
            up.push_back(find({c.row - 1, c.col}));
            right.push_back(find({c.row, c.col + 1}));
            down.push_back(find({c.row + 1, c.col}));
        }
    }
    size_t size() const { return cells.size(); }
};

}  // namespace detail

// Linear extensions of the cell poset, counted by backtracking over
// addable cells.  Visits every standard filling when a callback is given;
// entries[i] is the value placed in cells()[i].
inline Int enumerate_syt(
    const Diagram& d,
    const std::function<void(const std::vector<Cell>&, const std::vector<int>&)>& visit = nullptr) {
    detail::CellPoset ps(d);
    size_t total = ps.size();
    std::vector<int> entries(total, 0);
    Int count = 0;
    std::function<void(size_t)> rec = [&](size_t placed) {
        if (placed == total) {
            ++count;
            if (visit) visit(ps.cells, entries);
            return;
        }
        int t = static_cast<int>(placed) + 1;
        for (size_t i = 0; i < total; ++i) {
            if (entries[i] != 0) continue;
            if (ps.left[i] >= 0 && entries[static_cast<size_t>(ps.left[i])] == 0) continue;
            if (ps.up[i] >= 0 && entries[static_cast<size_t>(ps.up[i])] == 0) continue;
            entries[i] = t;
            rec(placed + 1);
            entries[i] = 0;
        }
    };
    rec(0);
    return count;
}

// Refined SBT counts: totals by double-cell column and by diagonal position.
struct SbtRefinement {
    Int total = 0;
    std::map<int, Int> by_column;    // g^lambda_k(+1)
    std::map<int, Int> diagonal;     // g^lambda_{i,i}(+1), shifted shapes only
};

// Exhaustive SBT enumeration: fill entries 1..|cells|+1 in increasing order;
// each value either opens an addable cell or joins a filled cell whose right
// and down neighbours are still empty (at most one such join overall).
// The callback receives (cells, first entry per cell, double-cell index,
// second entry of the double cell).
inline SbtRefinement enumerate_sbt(
    const Diagram& d,
    const std::function<void(const std::vector<Cell>&, const std::vector<int>&, int, int)>&
        visit = nullptr) {
    detail::CellPoset ps(d);
    size_t total = ps.size();
    std::vector<int> entries(total, 0);
    SbtRefinement ref;
    std::function<void(size_t, int, int)> rec = [&](size_t placed, int dbl, int dbl2) {
        if (placed == total + 1) {
            ++ref.total;
            const Cell& c = ps.cells[static_cast<size_t>(dbl)];
            ref.by_column[c.col] += 1;
            if (c.row == c.col) ref.diagonal[c.row] += 1;
            if (visit) visit(ps.cells, entries, dbl, dbl2);
            return;
        }
        int t = static_cast<int>(placed) + 1;
        for (size_t i = 0; i < total; ++i) {
            if (entries[i] != 0) continue;
            if (ps.left[i] >= 0 && entries[static_cast<size_t>(ps.left[i])] == 0) continue;
            if (ps.up[i] >= 0 && entries[static_cast<size_t>(ps.up[i])] == 0) continue;
            entries[i] = t;
            rec(placed + 1, dbl, dbl2);
            entries[i] = 0;
        }
        if (dbl < 0) {
            for (size_t i = 0; i < total; ++i) {
                if (entries[i] == 0) continue;
                if (ps.right[i] >= 0 && entries[static_cast<size_t>(ps.right[i])] != 0) continue;
                if (ps.down[i] >= 0 && entries[static_cast<size_t>(ps.down[i])] != 0) continue;
                rec(placed + 1, static_cast<int>(i), t);
            }
        }
    };
    rec(0, -1, 0);
    return ref;
}

// Semistandard fillings (nonnegative entries, rows weakly increasing,
// columns strictly increasing) with entry sum at most max_sum.
inline void for_each_ssyt_bounded(
    const Diagram& d, long max_sum,
    const std::function<void(const std::vector<Cell>&, const std::vector<int>&, long)>& visit) {
    detail::CellPoset ps(d);
    size_t total = ps.size();
    std::vector<int> val(total, -1);
    std::function<void(size_t, long)> rec = [&](size_t i, long sum) {
        if (i == total) {
            visit(ps.cells, val, sum);
            return;
        }
        int lo = 0;
        if (ps.left[i] >= 0) lo = std::max(lo, val[static_cast<size_t>(ps.left[i])]);
        if (ps.up[i] >= 0) lo = std::max(lo, val[static_cast<size_t>(ps.up[i])] + 1);
        for (int v = lo; sum + v <= max_sum; ++v) {
            val[i] = v;
            rec(i + 1, sum + v);
        }
        val[i] = -1;
    };
    rec(0, 0);
}

}  // namespace ytab
