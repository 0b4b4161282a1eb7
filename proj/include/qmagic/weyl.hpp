#pragma once

// Weyl-Heisenberg displacement operators D_(x|z) = w^{xz/2} X^x Z^z for odd
// prime p, the p+1 mutually unbiased stabilizer bases, and the CSUM gate.
// p = 2 is excluded here: the phase exponent xz/2 needs 2^{-1} mod p, and the
// qubit special cases live in the bell/magic modules.

#include <cstdint>
#include <numbers>

#include "qmagic/errors.hpp"
#include "qmagic/field.hpp"
#include "qmagic/linalg.hpp"

namespace qmagic {

// exp(2 pi i m / p), with m reduced mod p first so large exponents cannot
// accumulate argument error.
inline Complex root_of_unity(std::int64_t m, std::int64_t p) {
    m %= p;
    if (m < 0) m += p;
    const double arg = 2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(p);
    return Complex{std::cos(arg), std::sin(arg)};
}

inline void require_odd_prime(std::int64_t p, const char* who) {
    if (!is_prime(p) || p == 2)
        throw UnsupportedDimension(std::string(who) + ": need an odd prime, got " +
                                   std::to_string(p));
}

struct PauliIndex {
    Fp x, z;
    PauliIndex(Fp x, Fp z) : x(x), z(z) {
        if (x.modulus() != z.modulus())
            throw ModulusMismatch("PauliIndex: x and z have different moduli");
    }
};

// Basis label B in Z_p plus the infinity label for the computational basis.
struct MubLabel {
    static MubLabel computational() { return MubLabel{true, 0}; }
    static MubLabel finite(std::int64_t b) { return MubLabel{false, b}; }

    bool is_computational;
    std::int64_t b;  // meaningful only when !is_computational

    friend bool operator==(const MubLabel& l, const MubLabel& r) {
        return l.is_computational == r.is_computational &&
               (l.is_computational || l.b == r.b);
    }
};

struct MubVectorRef {
    MubLabel basis;
    std::int64_t v;
};

inline Mat displacement(const PauliIndex& idx, std::int64_t p) {
    require_odd_prime(p, "displacement");
    const std::int64_t x = Fp(idx.x.value(), p).value();
    const std::int64_t z = Fp(idx.z.value(), p).value();
    const Complex phase = root_of_unity(inv_mod(2, p) * x * z, p);
    Mat d(p, p);
    for (std::int64_t k = 0; k < p; ++k)
        d((k + x) % p, k) = phase * root_of_unity(k * z, p);
    return d;
}

inline Mat displacement(std::int64_t x, std::int64_t z, std::int64_t p) {
    return displacement(PauliIndex{Fp(x, p), Fp(z, p)}, p);
}

// Two-qudit displacement in symplectic notation, D_(x1,x2|z1,z2).
inline Mat displacement2(std::int64_t x1, std::int64_t x2, std::int64_t z1, std::int64_t z2,
                         std::int64_t p) {
    return kron(displacement(x1, z1, p), displacement(x2, z2, p));
}

// |psi_B^V> = p^{-1/2} sum_k w^{B k^2/2 - V k} |k>; the infinity basis is the
// computational one.
inline Vec mub_ket(const MubVectorRef& ref, std::int64_t p) {
    require_odd_prime(p, "mub_ket");
    const std::int64_t v = Fp(ref.v, p).value();
    Vec ket(p, Complex{0, 0});
    if (ref.basis.is_computational) {
        ket[v] = 1.0;
        return ket;
    }
    const std::int64_t b = Fp(ref.basis.b, p).value();
    const std::int64_t half = inv_mod(2, p);
    const double scale = 1.0 / std::sqrt(static_cast<double>(p));
    for (std::int64_t k = 0; k < p; ++k)
        ket[k] = scale * root_of_unity(half * b * k * k - v * k, p);
    return ket;
}

inline Vec mub_ket(MubLabel basis, std::int64_t v, std::int64_t p) {
    return mub_ket(MubVectorRef{basis, v}, p);
}

// Group-average form of the projector: (1/p) sum_j w^{-jV} D_(1|B)^j.
inline Mat mub_projector_group_average(std::int64_t b, std::int64_t v, std::int64_t p) {
    require_odd_prime(p, "mub_projector_group_average");
    const Mat d = displacement(1, b, p);
    Mat dj = Mat::identity(p);
    Mat sum(p, p);
    for (std::int64_t j = 0; j < p; ++j) {
        sum += root_of_unity(-j * v, p) * dj;
        dj = dj * d;
    }
    return sum * Complex{1.0 / static_cast<double>(p), 0};
}

// The defining-ket formula and the group-average formula could in principle
// label eigenvectors with opposite signs of V. Resolve the convention once by
// direct test at p = 5; +1 means the labels agree as written.
inline int mub_v_label_sign() {
    static const int sign = [] {
        const std::int64_t p = 5;
        for (std::int64_t b = 0; b < p; ++b)
            for (std::int64_t v = 0; v < p; ++v) {
                const Mat po = outer(mub_ket(MubLabel::finite(b), v, p),
                                     mub_ket(MubLabel::finite(b), v, p));
                if (max_abs(po - mub_projector_group_average(b, v, p)) > 1e-10) {
                    if (max_abs(po - mub_projector_group_average(b, -v, p)) > 1e-10)
                        throw TheoremViolation(
                            "mub_v_label_sign: neither V convention matches at p=5");
                    return -1;
                }
            }
        return 1;
    }();
    return sign;
}

inline Mat mub_projector(const MubVectorRef& ref, std::int64_t p) {
    const Vec k = mub_ket(ref, p);
    return outer(k, k);
}

inline Mat mub_projector(MubLabel basis, std::int64_t v, std::int64_t p) {
    return mub_projector(MubVectorRef{basis, v}, p);
}

// All p+1 basis labels: computational first, then B = 0..p-1.
inline std::vector<MubLabel> all_bases(std::int64_t p) {
    std::vector<MubLabel> out{MubLabel::computational()};
    for (std::int64_t b = 0; b < p; ++b) out.push_back(MubLabel::finite(b));
    return out;
}

inline std::vector<MubLabel> finite_bases(std::int64_t p) {
    std::vector<MubLabel> out;
    for (std::int64_t b = 0; b < p; ++b) out.push_back(MubLabel::finite(b));
    return out;
}

// Generalized CNOT: |j,k> -> |j, k+j>.
inline Mat csum(std::int64_t p) {
    require_odd_prime(p, "csum");
    Mat c(p * p, p * p);
    for (std::int64_t j = 0; j < p; ++j)
        for (std::int64_t k = 0; k < p; ++k)
            c(j * p + (k + j) % p, j * p + k) = 1.0;
    return c;
}

}  // namespace qmagic
