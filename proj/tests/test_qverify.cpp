#include "catch_amalgamated.hpp"
#include "ytab/qverify.hpp"

using namespace ytab;

TEST_CASE("alternant identity on small shapes") {
    CHECK(check_alternant(StrictPartition({2, 1}), {1}, 6).equal);
    CHECK(check_alternant(StrictPartition({2}), {}, 4).equal);
    // repeated diagonal values: both sides vanish
    auto v = check_alternant(StrictPartition({3, 2}), {2, 2}, 8);
    CHECK(v.equal);
    CHECK(v.rhs == QSeries(8));
}

TEST_CASE("alternant identity across nu for strict shapes") {
    long D = 12;
    for (long n = 1; n <= 7; ++n) {
        for_each_strict_partition(n, [&](const Parts& p) {
            StrictPartition lam(p);
            int rows = lam.length();
            // all nu with at most `rows` parts and |nu| <= 5
            std::vector<int> nu;
            std::function<void(int, int, int)> rec = [&](int i, int prev, int rem) {
                Parts nup(nu.begin(), nu.end());
                while (!nup.empty() && nup.back() == 0) nup.pop_back();
                REQUIRE(check_alternant(lam, nup, D).equal);
                if (i >= rows) return;
                for (int v = 1; v <= std::min(prev, rem); ++v) {
                    nu.push_back(v);
                    rec(i + 1, v, rem - v);
                    nu.pop_back();
                }
            };
            rec(0, 5, 5);
        });
    }
}

TEST_CASE("generating-function lemma for alternants") {
    for (long n = 1; n <= 8; ++n) {
        for_each_strict_partition(n, [&](const Parts& p) {
            REQUIRE(check_gf_lemma(StrictPartition(p), 16).equal);
        });
    }
}

TEST_CASE("integral formula for shifted SYT counts") {
    auto v31 = check_ssyt_int(StrictPartition({3, 1}));
    CHECK(v31.equal);
    CHECK(v31.rhs == 2);
    auto v2 = check_ssyt_int(StrictPartition({2}));
    CHECK(v2.equal);
    CHECK(v2.rhs == 1);
    for (long n = 1; n <= 10; ++n) {
        for_each_strict_partition(n, [&](const Parts& p) {
            REQUIRE(check_ssyt_int(StrictPartition(p)).equal);
        });
    }
}

TEST_CASE("integral formula for extended diagrams") {
    REQUIRE(check_ssyt_int2(StrictPartition({3, 1}), 1).equal);
    for (long n = 1; n <= 9; ++n) {
        for_each_strict_partition(n, [&](const Parts& p) {
            StrictPartition lam(p);
            for (int i = 1; i <= lam.length(); ++i)
                REQUIRE(check_ssyt_int2(lam, i).equal);
        });
    }
}

TEST_CASE("the q->1 limit recovers SYT counts from SSYT series") {
    for (long n = 1; n <= 10; ++n) {
        for_each_strict_partition(n, [&](const Parts& p) {
            REQUIRE(check_syt_ssyt(StrictPartition(p)).equal);
        });
    }
}
