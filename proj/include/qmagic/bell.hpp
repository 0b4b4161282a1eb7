#pragma once

// The qudit CHSH Bell operators B and B* built from the Pauli measurement
// operators A_x = w^{x(2x+1)/2} D_(1|x) and B_y = w^{y(y+1)/4} D_(1|y/2),
// the single-qudit operator S they reduce to under CSUM, and the quantum
// value with its Information Causality and Weil bounds. Fractional exponents
// are field expressions (multiplicative inverses mod p).

#include <cstdint>
#include <optional>
#include <vector>

#include "qmagic/errors.hpp"
#include "qmagic/field.hpp"
#include "qmagic/linalg.hpp"
#include "qmagic/magic.hpp"
#include "qmagic/weyl.hpp"

namespace qmagic {

inline Mat measurement_a(std::int64_t x, std::int64_t p) {
    require_odd_prime(p, "measurement_a");
    const Fp fx(x, p);
    const Fp expo = fx * (Fp(2, p) * fx + Fp(1, p)) / Fp(2, p);
    return root_of_unity(expo.value(), p) * displacement(1, fx.value(), p);
}

inline Mat measurement_b(std::int64_t y, std::int64_t p) {
    require_odd_prime(p, "measurement_b");
    const Fp fy(y, p);
    const Fp expo = fy * (fy + Fp(1, p)) / Fp(4, p);
    const Fp half_y = fy / Fp(2, p);
    return root_of_unity(expo.value(), p) * displacement(1, half_y.value(), p);
}

inline std::pair<std::vector<Mat>, std::vector<Mat>> measurement_ops(std::int64_t p) {
    std::vector<Mat> as, bs;
    for (std::int64_t x = 0; x < p; ++x) as.push_back(measurement_a(x, p));
    for (std::int64_t y = 0; y < p; ++y) bs.push_back(measurement_b(y, p));
    return {as, bs};
}

struct BellOperators {
    Mat full;       // B = B* + p I
    Mat traceless;  // B*
    std::int64_t p;
};

// B* = (1/p) sum_{n in Z_p*} sum_{x,y} w^{nxy} A_x^n (x) B_y^n, symmetrized
// by (H + H^dag)/2 to wash out roundoff.
inline BellOperators bell_operator(std::int64_t p) {
    require_odd_prime(p, "bell_operator");
    auto [as, bs] = measurement_ops(p);
    const std::size_t d = static_cast<std::size_t>(p * p);
    Mat bstar(d, d);

    std::vector<Mat> apow = as, bpow = bs;  // current n-th powers
    for (std::int64_t n = 1; n < p; ++n) {
        if (n > 1)
            for (std::int64_t i = 0; i < p; ++i) {
                apow[i] = apow[i] * as[i];
                bpow[i] = bpow[i] * bs[i];
            }
        for (std::int64_t x = 0; x < p; ++x)
            for (std::int64_t y = 0; y < p; ++y) {
                const Complex w = root_of_unity(n * x * y, p);
                const Mat& ax = apow[x];
                const Mat& by = bpow[y];
                for (std::size_t i = 0; i < static_cast<std::size_t>(p); ++i)
                    for (std::size_t j = 0; j < static_cast<std::size_t>(p); ++j) {
                        const Complex aij = w * ax(i, j);
                        if (aij == Complex{0, 0}) continue;
                        for (std::size_t r = 0; r < static_cast<std::size_t>(p); ++r)
                            for (std::size_t c = 0; c < static_cast<std::size_t>(p); ++c)
                                bstar(i * p + r, j * p + c) += aij * by(r, c);
                    }
            }
    }
    bstar *= Complex{1.0 / static_cast<double>(p), 0};
    bstar = (bstar + bstar.dagger()) * Complex{0.5, 0};

    Mat full = bstar;
    for (std::size_t i = 0; i < d; ++i) full(i, i) += static_cast<double>(p);
    return {full, bstar, p};
}

// S = sum_B |psi_B^{-B(B+1/2)}><psi_B^{-B(B+1/2)}|, one projector from each
// non-computational basis; S = S* + I.
inline Mat s_operator(std::int64_t p) {
    require_odd_prime(p, "s_operator");
    const Fp half = inv(Fp(2, p));
    Mat s(p, p);
    for (std::int64_t b = 0; b < p; ++b) {
        const Fp fb(b, p);
        const Fp v = -(fb * (fb + half));
        s += mub_projector(MubLabel::finite(b), v.value(), p);
    }
    return (s + s.dagger()) * Complex{0.5, 0};
}

struct ReductionCheck {
    bool ok;
    double residual;  // ||CSUM^dag B* CSUM - p S* (x) |0><0|||_max
};

inline ReductionCheck verify_reduction(std::int64_t p, double tol = 1e-8) {
    require_odd_prime(p, "verify_reduction");
    if (p > 13)
        throw BudgetExceeded("verify_reduction: full p^2 x p^2 matrices capped at p = 13");
    const Mat c = csum(p);
    const Mat bstar = bell_operator(p).traceless;
    Mat sstar = s_operator(p);
    for (std::int64_t i = 0; i < p; ++i) sstar(i, i) -= 1.0;
    Mat e00(p, p);
    e00(0, 0) = 1.0;
    const Mat rhs = kron(sstar, e00) * Complex{static_cast<double>(p), 0};
    const double resid = max_abs(c.dagger() * bstar * c - rhs);
    return {resid <= tol, resid};
}

struct GameValueReport {
    std::int64_t p = 0;
    double lambda_max_B = 0;             // p * lambda_max(S)
    double nu = 0;                       // lambda_max_B / p^2
    double ic_bound = 0;                 // p (1 + (p-1)/sqrt(p))
    std::optional<double> weil_bound;    // 4p, absent for p <= 3
    std::optional<std::int64_t> lhv_value;
    bool lhv_exact = false;
    // The game value is for the fixed Pauli measurement choice; non-Pauli
    // measurements can achieve more whenever p > 3.
    bool pauli_restricted = true;
};

inline double ic_bound(std::int64_t p) {
    return p * (1.0 + (p - 1) / std::sqrt(static_cast<double>(p)));
}

inline GameValueReport quantum_value(std::int64_t p) {
    require_odd_prime(p, "quantum_value");
    if (p > 31) throw BudgetExceeded("quantum_value: capped at p = 31");
    GameValueReport rep;
    rep.p = p;
    rep.lambda_max_B = p * lambda_max(s_operator(p));
    rep.nu = rep.lambda_max_B / static_cast<double>(p * p);
    rep.ic_bound = ic_bound(p);
    if (p > 3) rep.weil_bound = 4.0 * p;
    return rep;
}

inline double expectation(const Vec& state, const Mat& op) {
    if (op.rows() != op.cols() || op.rows() != state.size())
        throw DimensionMismatch("expectation: operator is " + std::to_string(op.rows()) +
                                "x" + std::to_string(op.cols()) + ", state has dim " +
                                std::to_string(state.size()));
    return std::real(dot(state, op * state));
}

struct QubitChsh {
    Mat op;          // XX + XY + YX - YY
    double lambda_max;
    Vec optimal_state;  // |J_{1,0,0}>
    std::int64_t lhv_value;
    double nu;       // (2 + sqrt(2))/4, the Breidbart success probability
};

// The qubit anchor, hard-coded since Eq-style constructions need odd p.
inline QubitChsh qubit_chsh() {
    Mat x(2, 2), y(2, 2);
    x(0, 1) = 1;
    x(1, 0) = 1;
    y(0, 1) = Complex{0, -1};
    y(1, 0) = Complex{0, 1};
    const Mat op = kron(x, x) + kron(x, y) + kron(y, x) - kron(y, y);

    QubitChsh res;
    res.op = op;
    res.lambda_max = lambda_max(op);
    res.optimal_state = jamiolkowski(MagicParams(1, 0, 0, 2));
    res.lhv_value = 2;
    // B = B*/1 + p I at p = 2 gives nu = (lambda_max/2 + 2)/4.
    res.nu = (res.lambda_max / 2.0 + 2.0) / 4.0;
    return res;
}

}  // namespace qmagic
