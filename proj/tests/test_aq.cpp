#include "catch_amalgamated.hpp"
#include "ytab/aq.hpp"
#include "ytab/cde.hpp"

using namespace ytab;

namespace {

PolyAQ pq(const PolyQ& p) { return PolyAQ(p); }

// weight-list sum written as explicit W-term multiplicities
RatAQ weight_list(long shift, const std::vector<std::pair<long, long>>& coeff_arg) {
    std::vector<long> ms;
    for (auto [c, m] : coeff_arg)
        for (long i = 0; i < c; ++i) ms.push_back(m);
    return aq_weight_sum(shift, ms);
}

}  // namespace

TEST_CASE("a;q-weight and number basics") {
    CHECK(aq_weight(0, 0) == RatAQ(1));
    // W_{a;q}(1) = (1 - a q^3)/((1 - a q) q)
    CHECK(aq_weight(1, 0) ==
          RatAQ(PolyAQ::one_minus_aq(1, 3),
                PolyAQ::one_minus_aq(1, 1) * PolyAQ::monomial(1, 0, 1)));
    // weights telescope: W(0)+W(1)+W(2) = [3]
    RatAQ sum = aq_weight_sum(0, {0, 1, 2});
    CHECK(sum == aq_number(3, 0));
    CHECK(aq_number(1, 5) == RatAQ(1));
    // [4]_{a q^3; q} = (1-q^4)(1-a q^7)/((1-q)(1-a q^4)) q^{-3}
    CHECK(aq_number(4, 3) ==
          RatAQ(pq(PolyQ::one_minus_q_pow(4)) * PolyAQ::one_minus_aq(1, 7),
                pq(PolyQ::one_minus_q_pow(1)) * PolyAQ::one_minus_aq(1, 4) *
                    PolyAQ::monomial(1, 0, 3)));
}

TEST_CASE("cover weights") {
    AqParams p1 = AqParams::of(Partition({1}));
    CHECK(cover_weight({1}, 1, p1) == RatAQ(1));
    AqParams p42 = AqParams::of(Partition({4, 2}));
    CHECK(p42.d == 2);
    CHECK(cover_weight({1}, 1, p42) == RatAQ(1));
    // (w(s-1) + l(|x|-1))/d = (4 + 2*2)/2 = 4 for x=(2,1), s=2
    CHECK(cover_weight({2, 1}, 2, p42) == aq_weight(4, 3));
    CHECK_THROWS_AS(cover_weight({2, 2}, 1, p42), std::domain_error);
}

TEST_CASE("down-degree weights of the empty and one-cell shapes") {
    AqParams p = AqParams::of(Partition({3, 1}));
    CHECK(aq_down_degree({}, p).is_zero());
    CHECK(aq_down_degree({1}, p) == RatAQ(1));
}

TEST_CASE("the one-cell interval") {
    Partition lam({1});
    // R((1) | a;q) = (1+q)(1 - a q^3)/(q (1 - a q^2))
    RatAQ expect(pq(PolyQ(1) + PolyQ::q_pow(1)) * PolyAQ::one_minus_aq(1, 3),
                 PolyAQ::one_minus_aq(1, 2) * PolyAQ::monomial(1, 0, 1));
    CHECK(aq_generating(lam) == expect);
    CHECK(aq_expect(lam) == conjecture_product(lam, 1));
    CHECK(aq_expect(lam) == conjecture_product(lam, 2));
}

TEST_CASE("the (4,2) interval in closed form") {
    Partition lam({4, 2});
    PolyAQ P = pq(PolyQ(1) + PolyQ::q_pow(1) + PolyQ::q_pow(2) + PolyQ::q_pow(4)) -
               PolyAQ::monomial(1, 1, 11) - PolyAQ::monomial(1, 1, 13) -
               PolyAQ::monomial(1, 1, 14) - PolyAQ::monomial(1, 1, 15);
    // weight multiset of the total down-degree
    RatAQ ddeg = aq_ddeg_total(lam);
    CHECK(ddeg == weight_list(3, {{1, 0}, {1, 1}, {2, 2}, {3, 3}, {3, 4}, {3, 5}, {2, 6}, {1, 7}}));
    // its factored rational form
    RatAQ ddeg_display(pq(PolyQ::one_minus_q_pow(4)) * P,
                       pq(PolyQ::one_minus_q_pow(1)) * PolyAQ::one_minus_aq(1, 4) *
                           PolyAQ::monomial(1, 0, 7));
    CHECK(ddeg == ddeg_display);
    // weight multiset and factored form of R
    RatAQ gen = aq_generating(lam);
    CHECK(gen == weight_list(4, {{1, 0}, {1, 1}, {2, 2}, {2, 3}, {3, 4}, {2, 5}, {1, 6}}));
    RatAQ gen_display(pq(PolyQ::one_minus_q_pow(3)) * P,
                      pq(PolyQ::one_minus_q_pow(1)) * PolyAQ::one_minus_aq(1, 5) *
                          PolyAQ::monomial(1, 0, 6));
    CHECK(gen == gen_display);
    // the final product (1-q^4)(1-aq^5)/((1-q^3)(1-aq^4)) q^{-1}
    RatAQ expect_display(pq(PolyQ::one_minus_q_pow(4)) * PolyAQ::one_minus_aq(1, 5),
                         pq(PolyQ::one_minus_q_pow(3)) * PolyAQ::one_minus_aq(1, 4) *
                             PolyAQ::monomial(1, 0, 1));
    CHECK(aq_expect(lam) == expect_display);
    CHECK(aq_expect(lam) == aq_number(4, 3) / aq_number(3, 4));
    CHECK(verify_conjecture(lam).equal);
}

TEST_CASE("the conjugate pair (2,2,1,1) gives the same expectation") {
    Partition lam({2, 2, 1, 1});
    CHECK(aq_expect(lam) == aq_expect(Partition({4, 2})));
    CHECK(verify_conjecture(lam).equal);
}

TEST_CASE("the staircase (3,2,1) in closed form") {
    Partition lam({3, 2, 1});
    RatAQ expect_display(pq(PolyQ::one_minus_q_pow(3)) * PolyAQ::one_minus_aq(1, 4),
                         pq(PolyQ::one_minus_q_pow(2)) * PolyAQ::one_minus_aq(1, 3) *
                             PolyAQ::monomial(1, 0, 1));
    CHECK(aq_expect(lam) == expect_display);
    CHECK(aq_expect(lam) == aq_number(3, 2) / aq_number(2, 3));
    CHECK(verify_conjecture(lam).equal);
}

TEST_CASE("the two product forms agree for all small (w,l)") {
    for (int w = 1; w <= 5; ++w)
        for (int l = 1; l <= 5; ++l) {
            Partition rect(rect_parts(w, l));
            CHECK(conjecture_product(rect, 1) == conjecture_product(rect, 2));
        }
}

TEST_CASE("rectangle generating function closed form") {
    for (int w = 1; w <= 4; ++w)
        for (int l = 1; l <= 4; ++l)
            REQUIRE(aq_generating(Partition(rect_parts(w, l))) ==
                    aq_rectangle_generating(w, l));
}

TEST_CASE("conjecture verified for balanced shapes, observed beyond") {
    long verified = 0;
    for (long n = 1; n <= 12; ++n) {
        for_each_partition(n, [&](const Parts& p) {
            if (!classify(p, Kind::straight).balanced) return;
            AqVerdict v = verify_conjecture(Partition(p));
            REQUIRE(v.equal);
            REQUIRE(v.variants_equal);
            REQUIRE(v.conjugate_equal);
            ++verified;
        });
    }
    CHECK(verified > 20);
    // a non-balanced shape where the product formula fails; recorded, not asserted
    AqVerdict v = verify_conjecture(Partition({3, 1}));
    CHECK_FALSE(v.equal);
}

TEST_CASE("q->1 specialization recovers E(X)") {
    for (long n = 1; n <= 10; ++n) {
        for_each_partition(n, [&](const Parts& p) {
            Partition lam(p);
            Rat ex = expect_x(p, Kind::straight);
            REQUIRE(aq_q1_equals(aq_expect(lam), ex));
        });
    }
}

TEST_CASE("leading a-coefficients recover the plain q-weight expectation") {
    for (long n = 1; n <= 12; ++n) {
        for_each_partition(n, [&](const Parts& p) {
            REQUIRE(aq_leading_matches_qweight(Partition(p)));
        });
    }
}

TEST_CASE("a -> infinity reduces the a;q-number to the q-number") {
    for (long n = 1; n <= 6; ++n)
        for (long s = 0; s <= 3; ++s) {
            RatAQ v = aq_number(n, s);
            const PolyQ& ln = v.num().a_lead();
            const PolyQ& ld = v.den().a_lead();
            // [n]_q = (1-q^n)/(1-q)
            CHECK(ln * PolyQ::one_minus_q_pow(1) == ld * PolyQ::one_minus_q_pow(n));
        }
}
