#pragma once

#include <algorithm>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "rational.hpp"

namespace ytab {

using Parts = std::vector<int>;

inline bool parts_weakly_decreasing(const Parts& p) {
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0) return false;
        if (i + 1 < p.size() && p[i] < p[i + 1]) return false;
    }
    return true;
}

inline bool parts_strictly_decreasing(const Parts& p) {
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0) return false;
        if (i + 1 < p.size() && p[i] <= p[i + 1]) return false;
    }
    return true;
}

inline long parts_sum(const Parts& p) {
    long s = 0;
    for (int x : p) s += x;
    return s;
}

// Weakly decreasing sequence of positive integers.
class Partition {
public:
    Partition() = default;
    explicit Partition(Parts p) : p_(std::move(p)) {
        while (!p_.empty() && p_.back() == 0) p_.pop_back();
        if (!parts_weakly_decreasing(p_))
            throw std::domain_error("Partition: parts must be positive and weakly decreasing");
    }

    const Parts& parts() const { return p_; }
    bool empty() const { return p_.empty(); }
    int length() const { return static_cast<int>(p_.size()); }
    long size() const { return parts_sum(p_); }
    int width() const { return p_.empty() ? 0 : p_[0]; }
    int part(int i) const {  // 1-based, 0 beyond the last row
        return (i >= 1 && i <= length()) ? p_[static_cast<size_t>(i - 1)] : 0;
    }
    // lambda'_j: number of parts >= j (1-based)
    int conj_part(int j) const {
        int c = 0;
        for (int x : p_) { if (x >= j) ++c; else break; }
        return c;
    }
    Partition conjugate() const {
        Parts c;
        for (int j = 1; j <= width(); ++j) c.push_back(conj_part(j));
        return Partition(c);
    }
    // content of the end of row i: lambda_i - i
    long content(int i) const { return part(i) - i; }

    bool contains(const Partition& mu) const {
        if (mu.length() > length()) return false;
        for (int i = 1; i <= mu.length(); ++i)
            if (mu.part(i) > part(i)) return false;
        return true;
    }

    bool operator==(const Partition& o) const { return p_ == o.p_; }

private:
    Parts p_;
};

// Strictly decreasing sequence of positive integers (a shifted shape).
class StrictPartition {
public:
    StrictPartition() = default;
    explicit StrictPartition(Parts p) : p_(std::move(p)) {
        while (!p_.empty() && p_.back() == 0) p_.pop_back();
        if (!parts_strictly_decreasing(p_))
            throw std::domain_error("StrictPartition: parts must be positive and strictly decreasing");
    }

    const Parts& parts() const { return p_; }
    bool empty() const { return p_.empty(); }
    int length() const { return static_cast<int>(p_.size()); }
    long size() const { return parts_sum(p_); }
    int width() const { return p_.empty() ? 0 : p_[0]; }
    int part(int i) const {
        return (i >= 1 && i <= length()) ? p_[static_cast<size_t>(i - 1)] : 0;
    }
    bool contains(const StrictPartition& mu) const {
        if (mu.length() > length()) return false;
        for (int i = 1; i <= mu.length(); ++i)
            if (mu.part(i) > part(i)) return false;
        return true;
    }

    bool operator==(const StrictPartition& o) const { return p_ == o.p_; }

private:
    Parts p_;
};

enum class Kind { straight, shifted };

// Shape strings: comma-separated decreasing positive integers, "" = empty.
inline Parts parse_shape(const std::string& s) {
    Parts p;
    size_t pos = 0;
    while (pos < s.size()) {
        size_t comma = s.find(',', pos);
        std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        size_t used = 0;
        int v;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw std::domain_error("shape parse error at position " + std::to_string(pos) +
                                    ": expected integer");
        }
        if (used != tok.size())
            throw std::domain_error("shape parse error at position " + std::to_string(pos + used) +
                                    ": trailing characters");
        p.push_back(v);
        if (comma == std::string::npos) break;
        pos = comma + 1;
        if (pos == s.size())
            throw std::domain_error("shape parse error at position " + std::to_string(pos) +
                                    ": trailing comma");
    }
    return p;
}

inline std::string format_shape(const Parts& p) {
    std::ostringstream os;
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) os << ",";
        os << p[i];
    }
    return os.str();
}

// Component-wise sum, shorter argument padded with zeros.
inline Parts add_parts(const Parts& a, const Parts& b) {
    Parts r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

// Staircase (n-1, n-2, ..., 1).
inline Parts delta_parts(int n) {
    Parts p;
    for (int i = n - 1; i >= 1; --i) p.push_back(i);
    return p;
}

// Rectangle (a^b): b rows of length a.
inline Parts rect_parts(int a, int b) { return Parts(static_cast<size_t>(b), a); }

// All partitions of n, in ascending lexicographic order of the part vectors.
inline void for_each_partition(long n, const std::function<void(const Parts&)>& f) {
    Parts cur;
    std::vector<Parts> all;
    std::function<void(long, int)> gen = [&](long rem, int maxpart) {
        if (rem == 0) { all.push_back(cur); return; }
        for (int first = static_cast<int>(std::min<long>(rem, maxpart)); first >= 1; --first) {
            cur.push_back(first);
            gen(rem - first, first);
            cur.pop_back();
        }
    };
    gen(n, static_cast<int>(n));
    std::sort(all.begin(), all.end());
    for (const auto& p : all) f(p);
}

// All strict partitions of n, ascending lexicographic order.
inline void for_each_strict_partition(long n, const std::function<void(const Parts&)>& f) {
    Parts cur;
    std::vector<Parts> all;
    std::function<void(long, int)> gen = [&](long rem, int maxpart) {
        if (rem == 0) { all.push_back(cur); return; }
        for (int first = static_cast<int>(std::min<long>(rem, maxpart)); first >= 1; --first) {
            cur.push_back(first);
            gen(rem - first, first - 1);
            cur.pop_back();
        }
    };
    gen(n, static_cast<int>(n));
    std::sort(all.begin(), all.end());
    for (const auto& p : all) f(p);
}

inline void for_each_shape(long n, Kind kind, const std::function<void(const Parts&)>& f) {
    if (kind == Kind::straight) for_each_partition(n, f);
    else for_each_strict_partition(n, f);
}

}  // namespace ytab
