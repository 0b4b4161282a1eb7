#include <catch2/catch_amalgamated.hpp>

#include "qmagic/linalg.hpp"
#include "qmagic/weyl.hpp"

using namespace qmagic;
using Catch::Matchers::WithinAbs;

TEST_CASE("displacement basics") {
    for (std::int64_t p : {3, 5, 7}) {
        CHECK(max_abs(displacement(0, 0, p) - Mat::identity(p)) < 1e-15);
    }
    // (1|0) at p=3 is the bare cyclic shift
    const Mat x3 = displacement(1, 0, 3);
    Vec e0{1, 0, 0};
    const Vec shifted = x3 * e0;
    CHECK_THAT(std::abs(shifted[1] - Complex{1, 0}), WithinAbs(0, 1e-15));

    CHECK_THROWS_AS(displacement(1, 1, 2), UnsupportedDimension);
    CHECK_THROWS_AS(displacement(1, 1, 9), UnsupportedDimension);
}

TEST_CASE("displacement power identity D^n = D_(nx|nz)") {
    for (std::int64_t p : {3, 5, 7}) {
        for (std::int64_t x = 0; x < p; ++x)
            for (std::int64_t z = 0; z < p; ++z) {
                const Mat d = displacement(x, z, p);
                Mat dn = Mat::identity(p);
                for (std::int64_t n = 0; n < p; ++n) {
                    CHECK(max_abs(dn - displacement(n * x % p, n * z % p, p)) < 1e-10);
                    dn = dn * d;
                }
            }
    }
    // spec case: (1|2)^3 at p=5 equals D_(3|1)
    CHECK(max_abs(matrix_power(displacement(1, 2, 5), 3) - displacement(3, 6 % 5, 5)) < 1e-12);
}

TEST_CASE("every displacement is unitary") {
    for (std::int64_t p : {3, 5, 7, 11}) {
        for (std::int64_t x = 0; x < p; ++x)
            for (std::int64_t z = 0; z < p; ++z)
                CHECK(is_unitary(displacement(x, z, p), 1e-10));
    }
}

TEST_CASE("mub kets") {
    SECTION("B=0, V=0 is |+>") {
        for (std::int64_t p : {3, 7}) {
            const Vec plus = mub_ket(MubLabel::finite(0), 0, p);
            for (const Complex& a : plus)
                CHECK_THAT(std::abs(a - Complex{1.0 / std::sqrt(double(p)), 0}), WithinAbs(0, 1e-14));
        }
    }
    SECTION("infinity basis is computational") {
        const Vec e2 = mub_ket(MubLabel::computational(), 2, 5);
        CHECK(e2[2] == Complex{1, 0});
        CHECK_THAT(norm(e2), WithinAbs(1.0, 1e-15));
    }
    SECTION("unbiasedness |<psi_0^0|psi_1^V>|^2 = 1/3 at p=3") {
        const Vec a = mub_ket(MubLabel::finite(0), 0, 3);
        for (std::int64_t v = 0; v < 3; ++v) {
            const Vec b = mub_ket(MubLabel::finite(1), v, 3);
            CHECK_THAT(std::norm(dot(a, b)), WithinAbs(1.0 / 3, 1e-12));
        }
    }
    SECTION("D_(1|B) eigenrelation with unimodular eigenvalue, p=5, B=2, V=3") {
        const Vec k = mub_ket(MubLabel::finite(2), 3, 5);
        const Vec dk = displacement(1, 2, 5) * k;
        const Complex ev = dot(k, dk);
        CHECK_THAT(std::abs(ev), WithinAbs(1.0, 1e-12));
        Vec resid = dk;
        for (std::size_t i = 0; i < resid.size(); ++i) resid[i] -= ev * k[i];
        CHECK(norm(resid) < 1e-12);
    }
}

TEST_CASE("complete unbiasedness sweep") {
    for (std::int64_t p : {3, 5, 7}) {
        const auto bases = all_bases(p);
        for (std::size_t i = 0; i < bases.size(); ++i)
            for (std::size_t j = i; j < bases.size(); ++j)
                for (std::int64_t v1 = 0; v1 < p; ++v1)
                    for (std::int64_t v2 = 0; v2 < p; ++v2) {
                        const double ov = std::norm(
                            dot(mub_ket(bases[i], v1, p), mub_ket(bases[j], v2, p)));
                        if (i == j)
                            CHECK_THAT(ov, WithinAbs(v1 == v2 ? 1.0 : 0.0, 1e-10));
                        else
                            CHECK_THAT(ov, WithinAbs(1.0 / p, 1e-10));
                    }
    }
    // sampled checks at the largest supported prime
    const std::int64_t p = 31;
    for (std::int64_t b = 0; b < p; b += 7)
        for (std::int64_t v = 0; v < p; v += 5) {
            const double ov = std::norm(dot(mub_ket(MubLabel::finite(b), v, p),
                                            mub_ket(MubLabel::finite((b + 3) % p), (v + 1) % p, p)));
            CHECK_THAT(ov, WithinAbs(1.0 / p, 1e-10));
        }
}

TEST_CASE("projectors: rank-1, Hermitian, idempotent, complete") {
    for (std::int64_t p : {5, 7}) {
        for (std::int64_t b = 0; b < p; ++b) {
            Mat sum(p, p);
            for (std::int64_t v = 0; v < p; ++v) {
                const Mat pr = mub_projector(MubLabel::finite(b), v, p);
                CHECK_THAT(std::abs(pr.trace() - Complex{1, 0}), WithinAbs(0, 1e-10));
                CHECK(is_hermitian(pr, 1e-10));
                CHECK(max_abs(pr * pr - pr) < 1e-10);
                sum += pr;
            }
            CHECK(max_abs(sum - Mat::identity(p)) < 1e-9);
        }
    }
    // projector(0,0) = |+><+| at p=3
    const Mat pp = mub_projector(MubLabel::finite(0), 0, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK_THAT(std::abs(pp(i, j) - Complex{1.0 / 3, 0}), WithinAbs(0, 1e-12));
}

TEST_CASE("ket/projector conventions agree with the group-average formula") {
    CHECK(mub_v_label_sign() == 1);
    for (std::int64_t p : {5, 7}) {
        for (std::int64_t b = 0; b < p; ++b)
            for (std::int64_t v = 0; v < p; ++v) {
                const Mat lhs = mub_projector(MubLabel::finite(b), v, p);
                const Mat rhs =
                    mub_projector_group_average(b, mub_v_label_sign() * v, p);
                CHECK(max_abs(lhs - rhs) < 1e-10);
            }
    }
}

TEST_CASE("csum permutation") {
    const std::int64_t p = 3;
    const Mat c = csum(p);
    Vec in(p * p, Complex{0, 0});
    in[1 * p + 2] = 1;  // |1,2>
    const Vec out = c * in;
    CHECK_THAT(std::abs(out[1 * p + 0] - Complex{1, 0}), WithinAbs(0, 1e-15));  // |1,0>

    for (std::int64_t k = 0; k < p; ++k) {
        Vec v(p * p, Complex{0, 0});
        v[0 * p + k] = 1;
        const Vec o = csum(p) * v;
        CHECK_THAT(std::abs(o[0 * p + k] - Complex{1, 0}), WithinAbs(0, 1e-15));
    }
}

TEST_CASE("csum conjugation identity on two-qudit displacements") {
    // CSUM^dag D_(1,1|x,s-x)^n CSUM = D_(1,0|s,s-x)^n
    const std::int64_t p = 5;
    const Mat c = csum(p);
    for (std::int64_t x : {0, 1, 3})
        for (std::int64_t s : {0, 2, 4})
            for (std::int64_t n : {1, 2}) {
                const Mat lhs = c.dagger() *
                                matrix_power(displacement2(1, 1, x, (s - x + p) % p, p), n) * c;
                const Mat rhs = matrix_power(displacement2(1, 0, s, (s - x + p) % p, p), n);
                CHECK(max_abs(lhs - rhs) < 1e-10);
            }
}
