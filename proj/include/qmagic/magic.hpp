#pragma once

// Magic states |f_{a,b,c}>, the diagonal magic gates M_{a,b,c}, Jamiolkowski
// states, and the magic-fixing Clifford C_{a,b,c} = M X M^dag. For p > 3 the
// amplitudes are w^{a k^3 + b k^2 + c k}/sqrt(p); p = 2 and p = 3 use eighth
// and ninth roots of unity respectively.

#include <cstdint>
#include <utility>

#include "qmagic/errors.hpp"
#include "qmagic/field.hpp"
#include "qmagic/linalg.hpp"
#include "qmagic/weyl.hpp"

namespace qmagic {

struct MagicParams {
    MagicParams(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t p)
        : a(Fp(a, p)), b(Fp(b, p)), c(Fp(c, p)), p(p) {
        if (this->a.value() == 0)
            throw InvalidMagicParams("MagicParams: a must be nonzero in Z_p*");
    }
    MagicParams(Fp a, Fp b, Fp c) : a(a), b(b), c(c), p(a.modulus()) {
        if (a.modulus() != b.modulus() || a.modulus() != c.modulus())
            throw ModulusMismatch("MagicParams: mixed moduli");
        if (a.value() == 0)
            throw InvalidMagicParams("MagicParams: a must be nonzero in Z_p*");
    }

    Fp a, b, c;
    std::int64_t p;
};

namespace detail {
inline Complex unit_phase(std::int64_t m, std::int64_t order) {
    m %= order;
    if (m < 0) m += order;
    const double arg = 2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(order);
    return Complex{std::cos(arg), std::sin(arg)};
}
}  // namespace detail

inline Vec magic_state(const MagicParams& mp) {
    const std::int64_t p = mp.p;
    const std::int64_t a = mp.a.value(), b = mp.b.value(), c = mp.c.value();
    const double scale = 1.0 / std::sqrt(static_cast<double>(p));
    Vec f(p);
    if (p == 2) {
        f[0] = scale;
        f[1] = scale * detail::unit_phase(a + 2 * b + 4 * c, 8);  // gamma = e^{2 pi i/8}
    } else if (p == 3) {
        f[0] = scale;
        f[1] = scale * detail::unit_phase(2 * a + 6 * b + 3 * c, 9);  // xi = e^{2 pi i/9}
        f[2] = scale * detail::unit_phase(a + 6 * b + 6 * c, 9);
    } else {
        for (std::int64_t k = 0; k < p; ++k)
            f[k] = scale * root_of_unity(eval_cubic(mp.a, mp.b, mp.c, Fp(k, p)).value(), p);
    }
    return f;
}

inline Vec magic_state(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t p) {
    return magic_state(MagicParams(a, b, c, p));
}

// Diagonal unitary with M|+> = |f_{a,b,c}>.
inline Mat magic_gate(const MagicParams& mp) {
    const Vec f = magic_state(mp);
    const double root_p = std::sqrt(static_cast<double>(mp.p));
    Mat m(mp.p, mp.p);
    for (std::int64_t k = 0; k < mp.p; ++k) m(k, k) = f[k] * root_p;
    return m;
}

// |J_{a,b,c}> = (I x M)|Phi>, nonzero only on |jj> with the magic amplitudes.
inline Vec jamiolkowski(const MagicParams& mp) {
    const Vec f = magic_state(mp);
    Vec j(mp.p * mp.p, Complex{0, 0});
    for (std::int64_t k = 0; k < mp.p; ++k) j[k * mp.p + k] = f[k];
    return j;
}

// C_{a,b,c} = M X M^dag; fixes |f_{a,b,c}> and conjugates Paulis to Paulis.
inline Mat magic_clifford(const MagicParams& mp) {
    require_odd_prime(mp.p, "magic_clifford");
    const Mat m = magic_gate(mp);
    Mat x(mp.p, mp.p);
    for (std::int64_t k = 0; k < mp.p; ++k) x((k + 1) % mp.p, k) = 1.0;
    return m * x * m.dagger();
}

// Make the first nonzero amplitude real positive. Used only for display and
// serialization; equality checks elsewhere go through projectors.
inline Vec canonical_phase(Vec v) {
    for (const Complex& x : v) {
        if (std::abs(x) > 1e-12) {
            const Complex ph = x / std::abs(x);
            for (Complex& y : v) y /= ph;
            return v;
        }
    }
    return v;
}

// D_(x|z)|f_{a,0,0}> is |f_{a,b,c}> up to phase with b = -3ax, c = z + 3ax^2.
// The algebra is easy to get wrong by a sign, so the result is verified
// numerically (phase-insensitively) before being returned.
inline std::pair<Fp, Fp> params_from_displacement(Fp a, Fp x, Fp z) {
    const std::int64_t p = a.modulus();
    if (!is_prime(p) || p <= 3)
        throw UnsupportedDimension("params_from_displacement: need p > 3");
    const Fp three(3, p);
    const Fp b = -(three * a * x);
    const Fp c = z + three * a * x * x;

    const Vec lhs = displacement(PauliIndex{x, z}, p) * magic_state(MagicParams(a, Fp(0, p), Fp(0, p)));
    const Vec rhs = magic_state(MagicParams(a, b, c));
    if (std::abs(std::abs(dot(rhs, lhs)) - 1.0) > 1e-9)
        throw TheoremViolation("params_from_displacement: displaced state does not match f_{a,b,c}");
    return {b, c};
}

}  // namespace qmagic
