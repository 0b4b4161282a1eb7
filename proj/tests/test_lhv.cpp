#include <catch2/catch_amalgamated.hpp>

#include "qmagic/lhv.hpp"

using namespace qmagic;

TEST_CASE("lhv_value direct counts") {
    SECTION("p=3 all-zero strategy scores 5") {
        LhvStrategy s{{0, 0, 0}, {0, 0, 0}};
        CHECK(lhv_value(s, 3) == 5);  // x=0 row plus y=0 column minus overlap
    }
    SECTION("p=2 optimum is 3 of 4, by exhaustive 16-case check") {
        std::int64_t best = -1;
        for (int a0 = 0; a0 < 2; ++a0)
            for (int a1 = 0; a1 < 2; ++a1)
                for (int b0 = 0; b0 < 2; ++b0)
                    for (int b1 = 0; b1 < 2; ++b1)
                        best = std::max(best, lhv_value({{a0, a1}, {b0, b1}}, 2));
        CHECK(best == 3);
    }
    SECTION("length mismatch raises") {
        CHECK_THROWS_AS(lhv_value({{0, 0}, {0, 0, 0}}, 3), DimensionMismatch);
    }
}

TEST_CASE("exhaustive maxima match the published values") {
    const LhvResult r3 = lhv_exact(3);
    CHECK(r3.value == 6);
    CHECK(r3.exact);
    CHECK(lhv_value(r3.strategy, 3) == 6);

    const LhvResult r5 = lhv_exact(5);
    CHECK(r5.value == 12);
    CHECK(lhv_value(r5.strategy, 5) == 12);

    const LhvResult r7 = lhv_exact(7);
    CHECK(r7.value == 19);
    CHECK(lhv_value(r7.strategy, 7) == 19);

    CHECK_THROWS_AS(lhv_exact(11), BudgetExceeded);
}

TEST_CASE("shift symmetry leaves the value unchanged") {
    for (std::int64_t p : {3, 5, 7}) {
        const LhvResult r = lhv_exact(p);
        for (std::int64_t t = 0; t < p; ++t) {
            LhvStrategy shifted = r.strategy;
            for (auto& a : shifted.alice) a = (a + t) % p;
            for (auto& b : shifted.bob) b = ((b - t) % p + p) % p;
            CHECK(lhv_value(shifted, p) == r.value);
        }
    }
}

TEST_CASE("search results") {
    SECTION("never exceeds the exact maximum where both run") {
        for (std::int64_t p : {3, 5, 7}) {
            const LhvResult ex = lhv_exact(p);
            const LhvResult se = lhv_search(p, 25, 0);
            CHECK(se.value <= ex.value);
            CHECK(!se.exact);
            CHECK(lhv_value(se.strategy, p) == se.value);
        }
    }
    SECTION("reaches the published lower bounds at p=11 and p=13") {
        const LhvResult r11 = lhv_search(11, 200, 0);
        CHECK(r11.value >= 37);
        CHECK(lhv_value(r11.strategy, 11) == r11.value);

        const LhvResult r13 = lhv_search(13, 200, 0);
        CHECK(r13.value >= 47);
        CHECK(lhv_value(r13.strategy, 13) == r13.value);
    }
    SECTION("deterministic under the seed") {
        const LhvResult a = lhv_search(11, 20, 42);
        const LhvResult b = lhv_search(11, 20, 42);
        CHECK(a.value == b.value);
        CHECK(a.strategy.alice == b.strategy.alice);
        CHECK(a.strategy.bob == b.strategy.bob);
    }
}

TEST_CASE("quantum advantage disappears at p=11") {
    // best-found LHV (>= 37) exceeds lambda_max(B) = 34.6464
    const LhvResult r11 = lhv_search(11, 200, 0);
    CHECK(r11.value >= 37);
    CHECK(double(r11.value) > 34.6464);
}
