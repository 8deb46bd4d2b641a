#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "partition.hpp"

namespace ytab {

struct Cell {
    int row = 0;  // 1-based
    int col = 0;  // 1-based for straight; col 0 occurs only in extended diagrams
    auto operator<=>(const Cell&) const = default;
};

enum class DiagKind { straight, shifted, extended_shifted };

// A Young diagram, a shifted Young diagram, or a shifted Young diagram with
// one extra cell (r, r-1) just below the main diagonal.
class Diagram {
public:
    static Diagram straight(const Partition& p) {
        return Diagram(DiagKind::straight, p.parts(), std::nullopt);
    }
    static Diagram shifted(const StrictPartition& p) {
        return Diagram(DiagKind::shifted, p.parts(), std::nullopt);
    }
    static Diagram extended(const StrictPartition& p, int extra_row) {
        if (extra_row < 1 || extra_row > p.length())
            throw std::domain_error("Diagram: extended cell row out of range");
        return Diagram(DiagKind::extended_shifted, p.parts(),
                       Cell{extra_row, extra_row - 1});
    }

    DiagKind kind() const { return kind_; }
    const Parts& shape() const { return parts_; }
    const std::optional<Cell>& extra() const { return extra_; }
    int rows() const { return static_cast<int>(parts_.size()); }
    int part(int i) const {
        return (i >= 1 && i <= rows()) ? parts_[static_cast<size_t>(i - 1)] : 0;
    }

    // inclusive column range of row r in the base shape
    int row_first_col(int r) const { return kind_ == DiagKind::straight ? 1 : r; }
    int row_last_col(int r) const {
        return kind_ == DiagKind::straight ? part(r) : part(r) + r - 1;
    }

    long cell_count() const {
        return parts_sum(parts_) + (extra_ ? 1 : 0);
    }

    bool contains(const Cell& c) const {
        if (extra_ && c == *extra_) return true;
        if (c.row < 1 || c.row > rows()) return false;
        return c.col >= row_first_col(c.row) && c.col <= row_last_col(c.row);
    }

    // Row-major cell order (the extra cell sits at the start of its row).
    std::vector<Cell> cells() const {
        std::vector<Cell> out;
        out.reserve(static_cast<size_t>(cell_count()));
        for (int r = 1; r <= rows(); ++r) {
            if (extra_ && extra_->row == r) out.push_back(*extra_);
            for (int c = row_first_col(r); c <= row_last_col(r); ++c)
                out.push_back({r, c});
        }
        return out;
    }

    int col_length(int c) const {
        int n = 0;
        for (int r = 1; r <= rows(); ++r)
            if (contains({r, c})) ++n;
        return n;
    }

private:
    Diagram(DiagKind k, Parts p, std::optional<Cell> extra)
        : kind_(k), parts_(std::move(p)), extra_(extra) {}

    DiagKind kind_;
    Parts parts_;
    std::optional<Cell> extra_;
};

}  // namespace ytab
