#pragma once

// Numerical verification of the MUB-balancedness of magic states and the
// diagonalization of S by the f_{-1/12,-1/8,c} family, the MUB-cycler orbit,
// and Sato-Tate statistics of the cubic exponential sums. Verification
// failures raise TheoremViolation with the offending indices rather than
// returning booleans.

#include <cstdint>
#include <optional>
#include <vector>

#include "qmagic/bell.hpp"
#include "qmagic/entropy.hpp"
#include "qmagic/errors.hpp"
#include "qmagic/field.hpp"
#include "qmagic/linalg.hpp"
#include "qmagic/magic.hpp"
#include "qmagic/weyl.hpp"

namespace qmagic {

// T_{a,b,c} = (1/p) |sum_k w^{a k^3 + b k^2 + c k}|.
inline double t_value(Fp a, Fp b, Fp c) {
    const std::int64_t p = a.modulus();
    if (!is_prime(p) || p <= 3) throw UnsupportedDimension("t_value: need prime p > 3");
    Complex acc{0, 0};
    for (std::int64_t k = 0; k < p; ++k)
        acc += root_of_unity(eval_cubic(a, b, c, Fp(k, p)).value(), p);
    return std::abs(acc) / static_cast<double>(p);
}

inline double t_value(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t p) {
    return t_value(Fp(a, p), Fp(b, p), Fp(c, p));
}

// The offset map Delta(B) = (1/12a)(B^2 - 4Bb) along which probabilities are
// permuted between bases: c_{V,0} = c_{V+Delta(B),B} for every V, B.
struct BalancePermutation {
    std::int64_t p = 0, a = 0, b = 0;
    std::vector<std::int64_t> offsets;  // Delta(B) for B = 0..p-1
};

// Builds the offset map and verifies it against mub_table(|f_{a,b,c}>).
inline BalancePermutation balanced_permutation(Fp a, Fp b, std::int64_t p, Fp c,
                                               double tol = 1e-10) {
    if (!is_prime(p) || p <= 3)
        throw UnsupportedDimension("balanced_permutation: offset formula needs p > 3");
    BalancePermutation perm;
    perm.p = p;
    perm.a = a.value();
    perm.b = b.value();
    const Fp coeff = inv(Fp(12, p) * a);
    for (std::int64_t bb = 0; bb < p; ++bb) {
        const Fp fb(bb, p);
        perm.offsets.push_back((coeff * (fb * fb - Fp(4, p) * fb * b)).value());
    }

    const MubTable table = mub_table(magic_state(MagicParams(a, b, c)), p);
    for (std::int64_t bb = 0; bb < p; ++bb)
        for (std::int64_t v = 0; v < p; ++v) {
            const double lhs = table.columns[1][v];  // basis B = 0
            const double rhs = table.columns[1 + bb][(v + perm.offsets[bb]) % p];
            if (std::abs(lhs - rhs) > tol)
                throw TheoremViolation(
                    "balanced_permutation: offset fails at (B,V) = (" + std::to_string(bb) +
                    "," + std::to_string(v) + "), |lhs-rhs| = " + std::to_string(std::abs(lhs - rhs)));
        }
    return perm;
}

// p = 3 fallback: no offset formula (1/12 is ill-defined), so check that the
// finite-basis columns are permutations of one another directly.
inline void verify_qutrit_balancedness(const MagicParams& mp, double tol = 1e-9) {
    if (mp.p != 3) throw UnsupportedDimension("verify_qutrit_balancedness: p must be 3");
    const MubTable table = mub_table(magic_state(mp), 3);
    std::vector<double> ref = table.columns[1];
    std::sort(ref.begin(), ref.end());
    for (std::int64_t b = 1; b < 3; ++b) {
        std::vector<double> col = table.columns[1 + b];
        std::sort(col.begin(), col.end());
        for (std::size_t i = 0; i < col.size(); ++i)
            if (std::abs(col[i] - ref[i]) > tol)
                throw TheoremViolation("verify_qutrit_balancedness: column B=" +
                                       std::to_string(b) + " is not a permutation of B=0");
    }
}

// Diagonalizes S in the magic basis U = [|f_{-1/12,-1/8,c}>]_c and checks the
// claim numerically: U^dag S U must be diagonal and its maximum must equal
// p |<+|f_{-1/12,-1/8,c*}>|^2 for the maximizing column c*.
inline EigenResult diagonalize_s(std::int64_t p) {
    if (!is_prime(p) || p <= 3)
        throw UnsupportedDimension("diagonalize_s: magic eigenbasis needs p > 3");
    const Fp a = fp_ratio(-1, 12, p), b = fp_ratio(-1, 8, p);
    Mat u(p, p);
    std::vector<Vec> cols;
    for (std::int64_t c = 0; c < p; ++c) {
        const Vec f = magic_state(MagicParams(a, b, Fp(c, p)));
        cols.push_back(f);
        for (std::int64_t i = 0; i < p; ++i) u(i, c) = f[i];
    }
    const Mat d = u.dagger() * s_operator(p) * u;

    double off = 0;
    for (std::int64_t i = 0; i < p; ++i)
        for (std::int64_t j = 0; j < p; ++j)
            if (i != j) off += std::norm(d(i, j));
    off = std::sqrt(off);
    if (off > 1e-9)
        throw TheoremViolation("diagonalize_s: off-diagonal mass " + std::to_string(off));

    std::vector<double> diag(p);
    for (std::int64_t i = 0; i < p; ++i) diag[i] = std::real(d(i, i));

    const Vec plus(p, Complex{1.0 / std::sqrt(static_cast<double>(p)), 0});
    double overlap_max = 0;
    std::size_t best_c = 0;
    for (std::int64_t c = 0; c < p; ++c) {
        const double ov = p * std::norm(dot(plus, cols[c]));
        if (ov > overlap_max) {
            overlap_max = ov;
            best_c = c;
        }
    }
    const double diag_max = *std::max_element(diag.begin(), diag.end());
    if (std::abs(diag_max - overlap_max) > 1e-9 ||
        std::abs(diag[best_c] - diag_max) > 1e-9)
        throw TheoremViolation("diagonalize_s: max diagonal does not match p|<+|f>|^2");

    EigenResult res;
    std::vector<std::size_t> order(p);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return diag[i] < diag[j]; });
    res.eigenvectors = Mat(p, p);
    for (std::int64_t k = 0; k < p; ++k) {
        res.eigenvalues.push_back(diag[order[k]]);
        for (std::int64_t i = 0; i < p; ++i) res.eigenvectors(i, k) = u(i, order[k]);
    }
    return res;
}

struct OrbitStep {
    MubLabel basis;
    std::int64_t v = 0;
};

// Repeatedly applies C = C_{-1/12,-1/8,c} to |psi_0^0> and identifies each
// image as an MUB vector. The sequence must match the closed form
// B_r = -r/2, V_r = (r/2)(1-r)/2 and never touch the computational basis.
inline std::vector<OrbitStep> cycler_orbit(Fp c, std::int64_t p) {
    if (!is_prime(p) || p <= 3)
        throw UnsupportedDimension("cycler_orbit: needs p > 3");
    const Fp a = fp_ratio(-1, 12, p), b = fp_ratio(-1, 8, p);
    const Mat cl = magic_clifford(MagicParams(a, b, c));
    const Fp half = inv(Fp(2, p));

    std::vector<OrbitStep> orbit;
    Vec state = mub_ket(MubLabel::finite(0), 0, p);
    for (std::int64_t r = 0; r < p; ++r) {
        std::optional<OrbitStep> found;
        for (const MubLabel& basis : all_bases(p))
            for (std::int64_t v = 0; v < p; ++v)
                if (std::norm(dot(mub_ket(basis, v, p), state)) > 1.0 - 1e-9)
                    found = OrbitStep{basis, v};
        if (!found)
            throw TheoremViolation("cycler_orbit: image at step " + std::to_string(r) +
                                   " is not an MUB vector");
        if (found->basis.is_computational)
            throw TheoremViolation("cycler_orbit: orbit entered the computational basis");

        const Fp fr(r, p);
        const Fp want_b = -(fr * half);
        const Fp want_v = (fr * half) * (Fp(1, p) - fr) * half;
        if (found->basis.b != want_b.value() || found->v != want_v.value())
            throw TheoremViolation("cycler_orbit: step " + std::to_string(r) +
                                   " disagrees with the closed form");
        orbit.push_back(*found);
        state = cl * state;
    }
    return orbit;
}

struct SatoTateSample {
    std::int64_t a = 0, c = 0;
    double theta = 0;
};

struct SatoTateSummary {
    double min = 0, max = 0;
    std::vector<std::int64_t> histogram;  // over [-1,1]
    double max_abs_sum = 0;               // max |sum_k w^{ak^3+ck}|, vs Weil 2 sqrt(p)
    double weil_limit = 0;                // 2 sqrt(p)
    double ks_semicircle = 0;             // KS distance to (2/pi) sqrt(1-t^2)
};

// theta_{a,c} = sum_k w^{a k^3 + c k} / (2 sqrt(p)); real and in [-1,1].
inline std::pair<std::vector<SatoTateSample>, SatoTateSummary> sato_tate(
    std::int64_t p, std::optional<std::int64_t> a_filter = std::nullopt, int bins = 20) {
    if (!is_prime(p) || p <= 3) throw UnsupportedDimension("sato_tate: need prime p > 3");

    std::vector<SatoTateSample> samples;
    for (std::int64_t a = 1; a < p; ++a) {
        if (a_filter && a != *a_filter) continue;
        for (std::int64_t c = 0; c < p; ++c) {
            Complex acc{0, 0};
            for (std::int64_t k = 0; k < p; ++k)
                acc += root_of_unity((a * k % p * k % p * k + c * k) % p, p);
            if (std::abs(acc.imag()) > 1e-10)
                throw TheoremViolation("sato_tate: nonreal sum at (a,c) = (" +
                                       std::to_string(a) + "," + std::to_string(c) + ")");
            samples.push_back({a, c, acc.real() / (2.0 * std::sqrt(static_cast<double>(p)))});
        }
    }

    SatoTateSummary sum;
    sum.histogram.assign(bins, 0);
    sum.min = 1;
    sum.max = -1;
    sum.weil_limit = 2.0 * std::sqrt(static_cast<double>(p));
    std::vector<double> sorted;
    for (const auto& s : samples) {
        sum.min = std::min(sum.min, s.theta);
        sum.max = std::max(sum.max, s.theta);
        sum.max_abs_sum = std::max(sum.max_abs_sum, std::abs(s.theta) * sum.weil_limit);
        int bin = static_cast<int>((s.theta + 1.0) / 2.0 * bins);
        bin = std::clamp(bin, 0, bins - 1);
        ++sum.histogram[bin];
        sorted.push_back(s.theta);
    }
    std::sort(sorted.begin(), sorted.end());
    const double n = static_cast<double>(sorted.size());
    double ks = 0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const double t = std::clamp(sorted[i], -1.0, 1.0);
        const double cdf = 0.5 + (t * std::sqrt(1.0 - t * t) + std::asin(t)) / std::numbers::pi;
        ks = std::max(ks, std::abs((i + 1) / n - cdf));
        ks = std::max(ks, std::abs(i / n - cdf));
    }
    sum.ks_semicircle = ks;
    return {samples, sum};
}

}  // namespace qmagic
