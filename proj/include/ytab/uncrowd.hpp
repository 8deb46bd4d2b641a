#pragma once

#include "tableau.hpp"

namespace ytab {

// The rightward uncrowding step: for an SBT of shifted shape lambda with
// double cell {a, b} in column k >= n, move b onto the smallest larger entry
// in column k+1; if there is none, append the cell at the bottom of column
// k+1 (an NE corner of lambda) and produce an SYT of the grown shape.
inline Tableau uncrowd_right(const Tableau& t) {
    const Diagram& d = t.diagram();
    if (d.kind() != DiagKind::shifted)
        throw std::domain_error("uncrowd_right: shifted SBT required");
    Cell dc = t.double_cell();
    int n = d.rows();
    if (dc.col < n)
        throw std::domain_error("uncrowd_right: double cell left of column n");
    int b = t.at(dc)[1];
    auto e = t.entries();
    // smallest entry larger than b in column k+1
    Cell target{0, 0};
    int best = 0;
    for (int r = 1; r <= n; ++r) {
        Cell c{r, dc.col + 1};
        auto it = e.find(c);
        if (it == e.end()) continue;
        int v = it->second.front();
        if (v > b && (best == 0 || v < best)) { best = v; target = c; }
    }
    e[dc] = {t.at(dc)[0]};
    if (best != 0) {
        e[target] = {b, best};
        return Tableau(d, std::move(e));
    }
    int i = d.col_length(dc.col + 1);
    Cell fresh{i + 1, dc.col + 1};
    Parts grown = d.shape();
    if (fresh.row > n || fresh.col != fresh.row + d.part(fresh.row))
        throw std::domain_error("uncrowd_right: new cell is not an NE corner");
    grown[static_cast<size_t>(fresh.row - 1)] += 1;
    e[fresh] = {b};
    return Tableau(Diagram::shifted(StrictPartition(grown)), std::move(e));
}

// The leftward uncrowding step, the dual of uncrowd_right: for a double
// cell {a, b} in column k <= n and off the diagonal, move a onto the cell of
// the largest entry below a in column k-1.  (Choosing the largest entry
// below b instead would not be injective: already for shape (3,2,1) two
// SBTs with double cell in column 3 would collide.)
inline Tableau uncrowd_left(const Tableau& t) {
    const Diagram& d = t.diagram();
    if (d.kind() != DiagKind::shifted)
        throw std::domain_error("uncrowd_left: shifted SBT required");
    Cell dc = t.double_cell();
    int n = d.rows();
    if (dc.col > n)
        throw std::domain_error("uncrowd_left: double cell right of column n");
    if (dc.row == dc.col)
        throw std::domain_error("uncrowd_left: double cell on the diagonal");
    int a = t.at(dc)[0], b = t.at(dc)[1];
    auto e = t.entries();
    Cell target{0, 0};
    int best = -1;
    for (int r = 1; r <= n; ++r) {
        Cell c{r, dc.col - 1};
        auto it = e.find(c);
        if (it == e.end()) continue;
        int v = it->second.front();
        if (v < a && v > best) { best = v; target = c; }
    }
    if (best < 0) throw std::logic_error("uncrowd_left: no smaller entry in previous column");
    e[dc] = {b};
    std::vector<int> pair{best, a};
    if (pair[0] > pair[1]) std::swap(pair[0], pair[1]);
    e[target] = pair;
    return Tableau(d, std::move(e));
}

// The diagonal step: an SYT on lambda u {(i+1, i)} maps to the SBT of shape
// lambda obtained by deleting that cell and merging its entry a into (i,i)
// when a < b, or into (i+1,i+1) when a > b, where b sits at (i,i+1).
// For the cell (1,0) the entry always merges into (1,1).
inline Tableau uncrowd_diag(const Tableau& t) {
    const Diagram& d = t.diagram();
    if (d.kind() != DiagKind::extended_shifted)
        throw std::domain_error("uncrowd_diag: extended shifted SYT required");
    Cell extra = *d.extra();
    int i = extra.row - 1;  // extra = (i+1, i)
    int a = t.at(extra).front();
    auto e = t.entries();
    e.erase(extra);
    Cell dest{0, 0};
    if (i == 0) {
        dest = {1, 1};
    } else {
        int b = t.at({i, i + 1}).front();
        dest = a < b ? Cell{i, i} : Cell{i + 1, i + 1};
    }
    std::vector<int> pair{e.at(dest).front(), a};
    if (pair[0] > pair[1]) std::swap(pair[0], pair[1]);
    e[dest] = pair;
    return Tableau(Diagram::shifted(StrictPartition(d.shape())), std::move(e));
}

}  // namespace ytab
