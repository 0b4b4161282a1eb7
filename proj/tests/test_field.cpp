#include <catch2/catch_amalgamated.hpp>

#include "qmagic/field.hpp"

using namespace qmagic;

TEST_CASE("inverse by extended Euclid") {
    CHECK(inv(Fp(2, 5)).value() == 3);
    CHECK(inv(Fp(12, 7)).value() == 3);  // 12 = 5 mod 7, 5*3 = 15 = 1
    CHECK(inv(Fp(1, 7)).value() == 1);
    CHECK(inv(Fp(1, 97)).value() == 1);
    CHECK_THROWS_AS(inv(Fp(0, 5)), InversionOfZero);
}

TEST_CASE("inverse involution and product, all residues") {
    for (std::int64_t p : {3, 5, 7, 11, 13}) {
        for (std::int64_t x = 1; x < p; ++x) {
            const Fp fx(x, p);
            CHECK(inv(inv(fx)) == fx);
            CHECK((fx * inv(fx)).value() == 1);
        }
    }
}

TEST_CASE("negative literals normalize") {
    CHECK(Fp(-1, 5).value() == 4);
    CHECK(fp_ratio(-1, 12, 5).value() == 2);  // -1/12 = -1/2 = -3 = 2 mod 5
    CHECK(fp_ratio(-1, 8, 5).value() == 3);
    CHECK((-Fp(0, 7)).value() == 0);
}

TEST_CASE("modulus is primality-checked") {
    CHECK_THROWS_AS(Fp(1, 4), UnsupportedDimension);
    CHECK_THROWS_AS(Fp(1, 1), UnsupportedDimension);
    CHECK_THROWS_AS(Fp(1, 1009), UnsupportedDimension);  // beyond design limit
    CHECK_THROWS_AS(Fp(2, 5) + Fp(2, 7), ModulusMismatch);
}

TEST_CASE("eval_cubic examples") {
    CHECK(eval_cubic(Fp(1, 5), Fp(0, 5), Fp(0, 5), Fp(2, 5)).value() == 3);
    for (std::int64_t k = 0; k < 7; ++k)
        CHECK(eval_cubic(Fp(0, 7), Fp(0, 7), Fp(0, 7), Fp(k, 7)).value() == 0);
    CHECK(eval_cubic(Fp(1, 7), Fp(1, 7), Fp(1, 7), Fp(3, 7)).value() == 4);
}

namespace {
// multiplication as repeated addition mod p
std::int64_t addmul(std::int64_t u, std::int64_t v, std::int64_t p) {
    std::int64_t acc = 0;
    for (std::int64_t i = 0; i < v; ++i) acc = (acc + u) % p;
    return acc;
}
}  // namespace

TEST_CASE("eval_cubic matches repeated-addition oracle") {
    for (std::int64_t p : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31}) {
        for (std::int64_t a = 0; a < p; a += 2)
            for (std::int64_t k = 0; k < p; ++k) {
                const std::int64_t b = (a + 1) % p, c = (a + 2) % p;
                const std::int64_t k2 = addmul(k, k, p);
                const std::int64_t k3 = addmul(k2, k, p);
                const std::int64_t want =
                    (addmul(a, k3, p) + addmul(b, k2, p) + addmul(c, k, p)) % p;
                CHECK(eval_cubic(Fp(a, p), Fp(b, p), Fp(c, p), Fp(k, p)).value() == want);
            }
    }
}

TEST_CASE("cubic residue classes") {
    SECTION("p = 7 from the published partition") {
        const auto cl = cubic_residue_classes(7);
        REQUIRE(cl.size() == 3);
        CHECK(cl[0] == std::vector<std::int64_t>{1, 6});
        CHECK(cl[1] == std::vector<std::int64_t>{2, 5});
        CHECK(cl[2] == std::vector<std::int64_t>{3, 4});
    }
    SECTION("p = 5: cubing is a bijection") {
        const auto cl = cubic_residue_classes(5);
        REQUIRE(cl.size() == 1);
        CHECK(cl[0] == std::vector<std::int64_t>{1, 2, 3, 4});
    }
    SECTION("p = 13 against direct enumeration") {
        const auto cl = cubic_residue_classes(13);
        REQUIRE(cl.size() == 3);
        CHECK(cl[0] == std::vector<std::int64_t>{1, 5, 8, 12});
        CHECK(cl[1] == std::vector<std::int64_t>{2, 3, 10, 11});
        CHECK(cl[2] == std::vector<std::int64_t>{4, 6, 7, 9});
    }
    SECTION("rejects p <= 3") {
        CHECK_THROWS_AS(cubic_residue_classes(3), UnsupportedDimension);
        CHECK_THROWS_AS(cubic_residue_classes(2), UnsupportedDimension);
    }
}

TEST_CASE("class partition covers Z_p* once and is closed under cube multiplication") {
    for (std::int64_t p : {5, 7, 11, 13, 19, 31}) {
        const auto cl = cubic_residue_classes(p);
        std::vector<int> seen(p, 0);
        for (const auto& c : cl)
            for (std::int64_t m : c) ++seen[m];
        for (std::int64_t a = 1; a < p; ++a) CHECK(seen[a] == 1);
        CHECK(seen[0] == 0);

        for (std::int64_t r : cl[0])  // cubic residues
            for (const auto& c : cl)
                for (std::int64_t m : c)
                    CHECK(cubic_class_of(m * r % p, p) == cubic_class_of(m, p));
    }
}
