#pragma once

#include <map>
#include <sstream>
#include <vector>

#include "diagram.hpp"

namespace ytab {

// A filling of a diagram by nonempty sorted sets of positive integers.
// SYT: all singletons with entries exactly 1..|cells|.  SBT: exactly one
// doubleton, entries exactly 1..|cells|+1.
class Tableau {
public:
    Tableau(Diagram d, std::map<Cell, std::vector<int>> entries)
        : diag_(std::move(d)), e_(std::move(entries)) {}

    const Diagram& diagram() const { return diag_; }
    const std::map<Cell, std::vector<int>>& entries() const { return e_; }

    const std::vector<int>& at(const Cell& c) const {
        auto it = e_.find(c);
        if (it == e_.end()) throw std::domain_error("Tableau: no such cell");
        return it->second;
    }

    // The unique cell holding two entries; throws if none.
    Cell double_cell() const {
        for (const auto& [c, v] : e_)
            if (v.size() == 2) return c;
        throw std::domain_error("Tableau: no double cell");
    }

    bool is_standard() const {
        long cells = diag_.cell_count();
        long entries = 0;
        std::vector<bool> seen;
        int doubles = 0;
        for (const auto& [c, v] : e_) {
            if (!diag_.contains(c) || v.empty() || v.size() > 2) return false;
            if (v.size() == 2) {
                ++doubles;
                if (v[0] >= v[1]) return false;
            }
            entries += static_cast<long>(v.size());
        }
        if (static_cast<long>(e_.size()) != cells || doubles > 1) return false;
        seen.assign(static_cast<size_t>(entries) + 1, false);
        for (const auto& [c, v] : e_)
            for (int x : v) {
                if (x < 1 || x > entries || seen[static_cast<size_t>(x)]) return false;
                seen[static_cast<size_t>(x)] = true;
            }
        // rows and columns increase in the strong sense max < min
        for (const auto& [c, v] : e_) {
            for (Cell nb : {Cell{c.row, c.col + 1}, Cell{c.row + 1, c.col}}) {
                auto it = e_.find(nb);
                if (it != e_.end() && v.back() >= it->second.front()) return false;
            }
        }
        return true;
    }
    bool is_syt() const {
        if (!is_standard()) return false;
        for (const auto& [c, v] : e_)
            if (v.size() != 1) return false;
        return true;
    }
    bool is_sbt() const {
        if (!is_standard()) return false;
        int doubles = 0;
        for (const auto& [c, v] : e_) doubles += (v.size() == 2);
        return doubles == 1;
    }

    // {"shape":[...], "kind":"shifted", "cells":[{"r":1,"c":2,"e":[5,7]},...]}
    std::string to_json() const {
        std::ostringstream os;
        os << "{\"shape\":[";
        for (int i = 1; i <= diag_.rows(); ++i) {
            if (i > 1) os << ",";
            os << diag_.part(i);
        }
        os << "],\"kind\":\"";
        switch (diag_.kind()) {
            case DiagKind::straight: os << "straight"; break;
            case DiagKind::shifted: os << "shifted"; break;
            case DiagKind::extended_shifted: os << "extended-shifted"; break;
        }
        os << "\",\"cells\":[";
        bool first = true;
        for (const auto& [c, v] : e_) {
            if (!first) os << ",";
            first = false;
            os << "{\"r\":" << c.row << ",\"c\":" << c.col << ",\"e\":[";
            for (size_t i = 0; i < v.size(); ++i) {
                if (i) os << ",";
                os << v[i];
            }
            os << "]}";
        }
        os << "]}";
        return os.str();
    }

    bool operator==(const Tableau& o) const {
        return diag_.kind() == o.diag_.kind() && diag_.shape() == o.diag_.shape() &&
               diag_.extra() == o.diag_.extra() && e_ == o.e_;
    }

private:
    Diagram diag_;
    std::map<Cell, std::vector<int>> e_;
};

// Convenience: build a shifted tableau from rows of entry sets, e.g.
// {{{1},{2,3}},{{4}}} for shape (2,1).
inline Tableau make_tableau(DiagKind kind, const Parts& shape,
                            const std::vector<std::vector<std::vector<int>>>& rows,
                            std::optional<int> extra_row = std::nullopt) {
    Diagram d = kind == DiagKind::straight
                    ? Diagram::straight(Partition(shape))
                    : (extra_row ? Diagram::extended(StrictPartition(shape), *extra_row)
                                 : Diagram::shifted(StrictPartition(shape)));
    std::map<Cell, std::vector<int>> e;
    auto cells = d.cells();
    size_t idx = 0;
    for (int r = 1; r <= d.rows(); ++r) {
        const auto& rowvals = rows.at(static_cast<size_t>(r - 1));
        for (size_t k = 0; k < rowvals.size(); ++k) {
            e[cells.at(idx)] = rowvals[k];
            ++idx;
        }
    }
    if (idx != cells.size()) throw std::domain_error("make_tableau: row sizes do not match shape");
    return Tableau(d, std::move(e));
}

}  // namespace ytab
