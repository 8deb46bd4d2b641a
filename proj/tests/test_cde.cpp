#include "catch_amalgamated.hpp"
#include "ytab/cde.hpp"

using namespace ytab;

TEST_CASE("E(X) on known intervals") {
    CHECK(expect_x({2, 2}, Kind::straight) == rat(1));
    CHECK(expect_x({4, 2}, Kind::shifted) == rat(6, 5));
    CHECK(expect_x({3, 1}, Kind::shifted) == rat(1));
}

TEST_CASE("E(Y) methods agree") {
    CHECK(expect_y({2, 1}, Kind::straight) == rat(1));
    CHECK(expect_y({4, 2}, Kind::shifted) == rat(6, 5));
    CHECK(expect_y({2, 1}, Kind::shifted) == rat(3, 4));
    for (long n = 1; n <= 10; ++n) {
        for_each_strict_partition(n, [&](const Parts& p) {
            Rat f = expect_y(p, Kind::shifted, EyMethod::formula);
            REQUIRE(f == expect_y(p, Kind::shifted, EyMethod::chains));
            REQUIRE(f == expect_y(p, Kind::shifted, EyMethod::sbt));
        });
        for_each_partition(n, [&](const Parts& p) {
            Rat f = expect_y(p, Kind::straight, EyMethod::formula);
            REQUIRE(f == expect_y(p, Kind::straight, EyMethod::chains));
        });
    }
}

TEST_CASE("CDE predicate on known shapes") {
    auto e = is_cde({4, 3, 1}, Kind::shifted);
    CHECK_FALSE(e.cde);
    auto e2 = is_cde({3, 1}, Kind::shifted);
    CHECK(e2.cde);
    CHECK(e2.e_x == rat(1));
    auto e3 = is_cde({2, 2}, Kind::straight);
    CHECK(e3.cde);
    CHECK(e3.e_x == rat(1));
}

TEST_CASE("closed forms match direct computation") {
    auto cf = closed_form({3, 1}, Kind::shifted);
    REQUIRE(cf);
    CHECK(cf->value == rat(1));
    auto cf2 = closed_form({4, 2}, Kind::shifted);
    REQUIRE(cf2);
    CHECK(cf2->value == rat(6, 5));
    CHECK(cf2->theorem == "trapezoidal");
    auto cf3 = closed_form({2, 1}, Kind::shifted);
    REQUIRE(cf3);
    CHECK(cf3->value == rat(3, 4));
    CHECK_FALSE(closed_form({4, 3, 1}, Kind::shifted).has_value());
    // rectangles: ab/(a+b)
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b) {
            auto cf4 = closed_form(rect_parts(a, b), Kind::straight);
            REQUIRE(cf4);
            CHECK(cf4->value == rat(static_cast<long>(a) * b, a + b));
            CHECK(cf4->value == expect_x(rect_parts(a, b), Kind::straight));
        }
}

TEST_CASE("theorem families reproduce") {
    // shifted-balanced shapes: E(X) = E(Y) = (lambda_1 + 1)/4
    for (long n = 1; n <= 12; ++n) {
        for_each_strict_partition(n, [&](const Parts& p) {
            if (!classify(p, Kind::shifted).shifted_balanced) return;
            Rat expect = rat(p[0] + 1, 4);
            REQUIRE(expect_x(p, Kind::shifted) == expect);
            REQUIRE(expect_y(p, Kind::shifted) == expect);
        });
    }
    // delta-sum family: E(Y) = (d + a(e-1))/4
    for (int a = 1; a <= 2; ++a)
        for (int e = 1; e <= 3; ++e)
            for (int d = a * (e - 1) + 2; d <= 7; ++d) {
                StrictPartition lam = make_delta_sum(a, d, e);
                REQUIRE(expect_y(lam.parts(), Kind::shifted) == rat(d + a * (e - 1), 4));
            }
    // trapezoids: |lambda|/(N+1)
    for (int N = 1; N <= 10; ++N)
        for (int n = 1; 2 * n <= N + 1; ++n) {
            StrictPartition lam = make_trapezoid(N, n);
            Rat expect = rat(lam.size(), N + 1);
            REQUIRE(expect_x(lam.parts(), Kind::shifted) == expect);
            REQUIRE(expect_y(lam.parts(), Kind::shifted) == expect);
        }
    // straight balanced of slope m: lambda_1/(1 + 1/m) = w*l/(w+l)
    for (long n = 1; n <= 16; ++n) {
        for_each_partition(n, [&](const Parts& p) {
            if (!classify(p, Kind::straight).balanced) return;
            long w = p[0], l = static_cast<long>(p.size());
            Rat expect = rat(w * l, w + l);
            REQUIRE(expect_x(p, Kind::straight) == expect);
            REQUIRE(expect_y(p, Kind::straight) == expect);
        });
    }
}

TEST_CASE("scan finds no counterexamples at small sizes") {
    for (Kind kind : {Kind::straight, Kind::shifted}) {
        auto rows = scan(9, kind, 1);
        for (const auto& r : rows) REQUIRE(r.conjecture_ok);
    }
    auto rows = scan(1, Kind::shifted, 1);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].cde);
    CHECK(rows[0].classification == "balanced+trapezoidal");
}

TEST_CASE("scan output is independent of the worker count") {
    auto a = scan(8, Kind::shifted, 1);
    auto b = scan(8, Kind::shifted, 4);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].shape == b[i].shape);
        CHECK(a[i].e_x == b[i].e_x);
        CHECK(a[i].e_y == b[i].e_y);
        CHECK(a[i].classification == b[i].classification);
    }
}

TEST_CASE("scan order is by size then lex") {
    auto rows = scan(3, Kind::straight, 1);
    std::vector<Parts> shapes;
    for (const auto& r : rows) shapes.push_back(r.shape);
    std::vector<Parts> expect = {{1}, {1, 1}, {2}, {1, 1, 1}, {2, 1}, {3}};
    CHECK(shapes == expect);
}
