#include "catch_amalgamated.hpp"
#include "ytab/count.hpp"
#include "ytab/enumerate.hpp"
#include "ytab/tableau.hpp"

using namespace ytab;

TEST_CASE("hook-length formula on known values") {
    CHECK(count_syt_straight(Partition({4, 3, 1})) == 70);
    CHECK(count_syt_straight(Partition({1})) == 1);
    CHECK(count_syt_straight(Partition(Parts{})) == 1);
    CHECK(count_syt_straight(Partition({2, 2})) == 2);
}

TEST_CASE("Thrall's formula on known values") {
    CHECK(count_syt_shifted(StrictPartition({4, 3, 1})) == 12);
    CHECK(count_syt_shifted(StrictPartition({2, 1})) == 1);
    CHECK(count_syt_shifted(StrictPartition({3, 1})) == 2);
}

TEST_CASE("enumeration agrees with the hook formulas, straight, up to 12") {
    for (long n = 1; n <= 12; ++n) {
        for_each_partition(n, [&](const Parts& p) {
            Partition lam(p);
            Int formula = count_syt_straight(lam);
            Int enumerated = enumerate_syt(Diagram::straight(lam));
            REQUIRE(formula == enumerated);
        });
    }
}

TEST_CASE("enumeration agrees with Thrall, shifted, up to 12") {
    for (long n = 1; n <= 12; ++n) {
        for_each_strict_partition(n, [&](const Parts& p) {
            StrictPartition lam(p);
            REQUIRE(count_syt_shifted(lam) == enumerate_syt(Diagram::shifted(lam)));
        });
    }
}

TEST_CASE("SBT enumeration on tiny shapes") {
    CHECK(enumerate_sbt(Diagram::straight(Partition({2, 1}))).total == 8);
    CHECK(enumerate_sbt(Diagram::shifted(StrictPartition({2}))).total == 2);
    CHECK(enumerate_sbt(Diagram::straight(Partition({1}))).total == 1);
}

TEST_CASE("straight SBT corner sum formula") {
    CHECK(count_sbt_straight(Partition({2, 1})) == 8);
    CHECK(count_sbt_straight(Partition({2})) == 2);
    CHECK(count_sbt_straight(Partition({1})) == 1);
    for (long n = 1; n <= 10; ++n) {
        for_each_partition(n, [&](const Parts& p) {
            Partition lam(p);
            Int enumerated = enumerate_sbt(Diagram::straight(lam)).total;
            REQUIRE(count_sbt_straight(lam) == enumerated);
            REQUIRE(count_sbt_straight_product(lam) == enumerated);
        });
    }
}

TEST_CASE("shifted SBT closed forms") {
    CHECK(count_sbt_shifted(StrictPartition({2})) == 2);
    // E(Y) for the trapezoid (4,2) is 6/5
    Int g42 = count_syt_shifted(StrictPartition({4, 2}));
    Int s42 = count_sbt_shifted(StrictPartition({4, 2}));
    CHECK(rat(s42, 7 * g42) == rat(6, 5));
    // E(Y) = 1 on the 6-element interval of (3,1)
    Int g31 = count_syt_shifted(StrictPartition({3, 1}));
    Int s31 = count_sbt_shifted(StrictPartition({3, 1}));
    CHECK(rat(s31, 5 * g31) == rat(1));
    for (long n = 1; n <= 12; ++n) {
        for_each_strict_partition(n, [&](const Parts& p) {
            StrictPartition lam(p);
            Int enumerated = enumerate_sbt(Diagram::shifted(lam)).total;
            REQUIRE(count_sbt_shifted(lam, SbtShiftedMethod::product) == enumerated);
            REQUIRE(count_sbt_shifted(lam, SbtShiftedMethod::ne_sum) == enumerated);
        });
    }
}

TEST_CASE("refined counts match enumeration") {
    StrictPartition two({2});
    SbtRefinement viaLemmas = sbt_refined_shifted(two);
    CHECK(viaLemmas.by_column[1] == 1);
    CHECK(viaLemmas.by_column[2] == 1);
    for (long n = 1; n <= 10; ++n) {
        for_each_strict_partition(n, [&](const Parts& p) {
            StrictPartition lam(p);
            SbtRefinement direct = enumerate_sbt(Diagram::shifted(lam));
            SbtRefinement lemmas = sbt_refined_shifted(lam);
            REQUIRE(direct.total == lemmas.total);
            for (int k = 1; k <= lam.width(); ++k) {
                Int d = direct.by_column.count(k) ? direct.by_column[k] : Int(0);
                Int l = lemmas.by_column.count(k) ? lemmas.by_column[k] : Int(0);
                REQUIRE(d == l);
            }
            // diagonal refinement
            for (int i = 1; i <= lam.length(); ++i) {
                Int d = direct.diagonal.count(i) ? direct.diagonal[i] : Int(0);
                Int l = lemmas.diagonal.count(i) ? lemmas.diagonal[i] : Int(0);
                REQUIRE(d == l);
            }
        });
    }
}

TEST_CASE("g_{1,1} equals the (1,0)-extended SYT count") {
    StrictPartition lam({3, 1});
    SbtRefinement direct = enumerate_sbt(Diagram::shifted(lam));
    CHECK(direct.diagonal[1] == enumerate_syt(Diagram::extended(lam, 1)));
}

TEST_CASE("extended diagram enumeration decomposes by Lemma (i,i+1)") {
    StrictPartition lam({2, 1});
    SbtRefinement ref = enumerate_sbt(Diagram::shifted(lam));
    Int lhs = enumerate_syt(Diagram::extended(lam, 2));
    Int d1 = ref.diagonal.count(1) ? ref.diagonal[1] : Int(0);
    Int d2 = ref.diagonal.count(2) ? ref.diagonal[2] : Int(0);
    CHECK(lhs == d1 + d2);
}

TEST_CASE("tableau JSON serialization") {
    Tableau t = make_tableau(DiagKind::shifted, {2}, {{{1}, {2, 3}}});
    CHECK(t.is_sbt());
    CHECK(t.to_json() ==
          "{\"shape\":[2],\"kind\":\"shifted\",\"cells\":"
          "[{\"r\":1,\"c\":1,\"e\":[1]},{\"r\":1,\"c\":2,\"e\":[2,3]}]}");
    Tableau s = make_tableau(DiagKind::straight, {2, 1}, {{{1}, {2}}, {{3}}});
    CHECK(s.is_syt());
    CHECK_FALSE(s.is_sbt());
}

TEST_CASE("tableau validity rejects bad fillings") {
    // row condition violated: max of double cell not below right neighbour
    Tableau bad = make_tableau(DiagKind::shifted, {2}, {{{1, 3}, {2}}});
    CHECK_FALSE(bad.is_standard());
    // two doubles
    Tableau bad2 = make_tableau(DiagKind::straight, {2}, {{{1, 2}, {3, 4}}});
    CHECK_FALSE(bad2.is_standard());
}
