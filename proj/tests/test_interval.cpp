#include "catch_amalgamated.hpp"
#include "ytab/interval.hpp"

using namespace ytab;

TEST_CASE("interval enumeration sizes") {
    CHECK(enumerate_interval({4, 2}, Kind::shifted).size() == 10);
    CHECK(enumerate_interval({1}, Kind::shifted).size() == 2);
    auto idx = enumerate_interval({2, 1}, Kind::straight);
    CHECK(idx.size() == 5);
    std::vector<int> dd = idx.ddeg;
    std::sort(dd.begin(), dd.end());
    CHECK(dd == std::vector<int>{0, 1, 1, 1, 2});
}

TEST_CASE("chain weights") {
    auto idx = enumerate_interval({3, 1}, Kind::shifted);
    auto w = chain_weights(idx);
    Int total = 0;
    for (size_t i = 0; i < static_cast<size_t>(idx.size()); ++i)
        total += w.down[i] * w.up[i];
    CHECK(total == 10);  // (|lambda|+1) * g^{(3,1)}
    auto idx2 = enumerate_interval({2, 1}, Kind::straight);
    auto w2 = chain_weights(idx2);
    CHECK(w2.down.back() == 2);  // maximal chains = f^{(2,1)}
    auto idx3 = enumerate_interval({1}, Kind::shifted);
    auto w3 = chain_weights(idx3);
    CHECK(w3.down.back() == 1);
}

TEST_CASE("c_down equals the SYT count throughout the interval") {
    for (const Parts& lam : {Parts{4, 2, 1}, Parts{3, 3}, Parts{5, 2}}) {
        auto idx = enumerate_interval(lam, Kind::straight);
        auto w = chain_weights(idx);
        for (size_t i = 0; i < static_cast<size_t>(idx.size()); ++i)
            REQUIRE(w.down[i] == count_syt_straight(Partition(idx.elems[i])));
    }
    for (const Parts& lam : {Parts{5, 3, 1}, Parts{6, 2}}) {
        auto idx = enumerate_interval(lam, Kind::shifted);
        auto w = chain_weights(idx);
        for (size_t i = 0; i < static_cast<size_t>(idx.size()); ++i)
            REQUIRE(w.down[i] == count_syt_shifted(StrictPartition(idx.elems[i])));
    }
}

TEST_CASE("chain-weight identity") {
    for (long n = 1; n <= 10; ++n) {
        for_each_partition(n, [&](const Parts& p) {
            auto idx = enumerate_interval(p, Kind::straight);
            auto w = chain_weights(idx);
            Int total = 0;
            for (size_t i = 0; i < static_cast<size_t>(idx.size()); ++i)
                total += w.down[i] * w.up[i];
            REQUIRE(total == Int(n + 1) * w.down.back());
        });
    }
}

TEST_CASE("r_counts on known shapes") {
    auto [r42, rp42] = r_counts(StrictPartition({4, 2}));
    CHECK(r42 == 10);
    CHECK(rp42 == 12);
    auto [r1, rp1] = r_counts(StrictPartition({1}));
    CHECK(r1 == 2);
    CHECK(rp1 == 1);
    auto [r31, rp31] = r_counts(StrictPartition({3, 1}));
    CHECK(r31 == 6);
    CHECK(rp31 == 6);
}

TEST_CASE("border decomposition of R^{(+1)}") {
    CHECK(r_plus_via_border(StrictPartition({4, 2})) == 12);
    CHECK(r_plus_via_border(StrictPartition({1})) == 1);
    CHECK(r_plus_via_border(StrictPartition({3, 1})) == 6);
    for (long n = 1; n <= 16; ++n) {
        for_each_strict_partition(n, [&](const Parts& p) {
            StrictPartition lam(p);
            REQUIRE(r_plus_via_border(lam) == r_counts(lam).second);
        });
    }
}

TEST_CASE("trapezoid closed forms") {
    auto t = trapezoid_closed(4, 2);
    CHECK(t.R == 10);
    CHECK(t.R_plus == 12);
    CHECK(t.E_X == rat(6, 5));
    auto t11 = trapezoid_closed(1, 1);
    CHECK(t11.R == 2);
    CHECK(t11.R_plus == 1);
    CHECK(t11.E_X == rat(1, 2));
    auto t32 = trapezoid_closed(3, 2);
    CHECK(t32.R == 6);
    CHECK(t32.R_plus == 6);
    CHECK(t32.E_X == rat(1));
    for (int N = 1; N <= 12; ++N)
        for (int n = 1; 2 * n <= N + 1; ++n) {
            auto closed = trapezoid_closed(N, n);
            auto [r, rp] = r_counts(make_trapezoid(N, n));
            REQUIRE(closed.R == r);
            REQUIRE(closed.R_plus == rp);
        }
}

TEST_CASE("antichain averages") {
    CHECK(antichain_average({1}, Kind::shifted) == rat(1, 2));
    CHECK(antichain_average({2, 2}, Kind::straight) == rat(1));
    CHECK(antichain_average({4, 2}, Kind::shifted) == rat(6, 5));
    // size counts of the trapezoid match the rectangle (Stembridge)
    auto trap = antichain_size_counts({4, 2}, Kind::shifted);
    auto rect = antichain_size_counts({3, 3}, Kind::straight);
    CHECK(trap == rect);
    REQUIRE(trap.size() == 3);
    CHECK(trap[0] == 1);
    CHECK(trap[1] == 6);
    CHECK(trap[2] == 3);
}

TEST_CASE("antichain average equals E(X) on shifted intervals") {
    for (long n = 1; n <= 12; ++n) {
        for_each_strict_partition(n, [&](const Parts& p) {
            StrictPartition lam(p);
            auto [r, rp] = r_counts(lam);
            REQUIRE(antichain_average(p, Kind::shifted) == rat(rp, r));
        });
    }
}
