#pragma once

#include <atomic>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "interval.hpp"

namespace ytab {

struct Expectations {
    Rat e_x;  // sum of down-degrees / interval size
    Rat e_y;  // SBT count / ((|lambda|+1) * SYT count)
    bool cde = false;
};

inline Rat expect_x(const Parts& lam, Kind kind) {
    IntervalSums s = interval_sums(lam, kind);
    return rat(s.ddeg_sum, s.count);
}

enum class EyMethod { formula, chains, sbt };

inline Rat expect_y(const Parts& lam, Kind kind, EyMethod method = EyMethod::formula) {
    if (lam.empty()) return Rat(0);
    switch (method) {
        case EyMethod::formula: {
            Int sbt = count_sbt(lam, kind);
            Int syt = count_syt(lam, kind);
            return rat(sbt, (parts_sum(lam) + 1) * syt);
        }
        case EyMethod::chains: {
            IntervalIndex idx = enumerate_interval(lam, kind);
            ChainWeights w = chain_weights(idx);
            Int num = 0, den = 0;
            for (size_t i = 0; i < static_cast<size_t>(idx.size()); ++i) {
                Int cw = w.down[i] * w.up[i];
                num += Int(idx.ddeg[i]) * cw;
                den += cw;
            }
            return rat(num, den);
        }
        case EyMethod::sbt: {
            Diagram d = kind == Kind::straight
                            ? Diagram::straight(Partition(lam))
                            : Diagram::shifted(StrictPartition(lam));
            Int sbt = enumerate_sbt(d).total;
            Int syt = enumerate_syt(d);
            return rat(sbt, (parts_sum(lam) + 1) * syt);
        }
    }
    throw std::logic_error("expect_y: unknown method");
}

inline Expectations is_cde(const Parts& lam, Kind kind,
                           EyMethod method = EyMethod::formula) {
    Expectations e;
    e.e_x = expect_x(lam, kind);
    e.e_y = expect_y(lam, kind, method);
    e.cde = (e.e_x == e.e_y);
    return e;
}

struct ClosedForm {
    Rat value;
    std::string theorem;  // which product formula fired
};

// The closed-form expectations for the theorem families:
// straight balanced of slope m: lambda_1 / (1 + 1/m) = w*l/(w+l);
// shifted balanced: (lambda_1 + 1)/4; trapezoidal: |lambda|/(lambda_1 + 1).
inline std::optional<ClosedForm> closed_form(const Parts& lam, Kind kind) {
    if (lam.empty()) return std::nullopt;
    Classification cls = classify(lam, kind);
    long w = lam[0];
    if (kind == Kind::straight) {
        if (!cls.balanced) return std::nullopt;
        long l = static_cast<long>(lam.size());
        return ClosedForm{rat(w * l, w + l), "balanced"};
    }
    if (cls.shifted_balanced && cls.trapezoidal)
        return ClosedForm{rat(w + 1, 4), "shifted-balanced+trapezoidal"};
    if (cls.shifted_balanced) return ClosedForm{rat(w + 1, 4), "shifted-balanced"};
    if (cls.trapezoidal) return ClosedForm{rat(parts_sum(lam), w + 1), "trapezoidal"};
    return std::nullopt;
}

struct ScanRow {
    long size = 0;
    Parts shape;
    Rat e_x, e_y;
    bool cde = false;
    std::string classification;
    bool conjecture_ok = false;
};

// Exhaustive conjecture scan over all shapes of size 1..max_size:
// CDE <=> balanced (straight), CDE <=> balanced or trapezoidal (shifted).
// Shapes are processed in (size, lex) order and results are merged in input
// order, so the report does not depend on the worker count.
inline std::vector<ScanRow> scan(long max_size, Kind kind, int jobs = 1) {
    std::vector<Parts> shapes;
    for (long n = 1; n <= max_size; ++n)
        for_each_shape(n, kind, [&](const Parts& p) { shapes.push_back(p); });
    std::vector<ScanRow> rows(shapes.size());
    auto work = [&](size_t i) {
        const Parts& p = shapes[i];
        ScanRow& r = rows[i];
        r.size = parts_sum(p);
        r.shape = p;
        r.e_x = expect_x(p, kind);
        r.e_y = expect_y(p, kind, EyMethod::formula);
        r.cde = (r.e_x == r.e_y);
        Classification cls = classify(p, kind);
        r.classification = cls.label(kind);
        bool predicted = kind == Kind::straight ? cls.balanced
                                                : (cls.shifted_balanced || cls.trapezoidal);
        r.conjecture_ok = (r.cde == predicted);
        if (!r.conjecture_ok)
            std::cerr << "scan: counterexample at " << format_shape(p) << "\n";
    };
    if (jobs <= 1) {
        for (size_t i = 0; i < shapes.size(); ++i) work(i);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t)
            pool.emplace_back([&] {
                for (size_t i = next.fetch_add(1); i < shapes.size(); i = next.fetch_add(1))
                    work(i);
            });
        for (auto& th : pool) th.join();
    }
    return rows;
}

}  // namespace ytab
