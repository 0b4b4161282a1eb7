#pragma once

// Discrete Wigner function on the p x p phase space for odd prime p, using
// the parity construction A_0 = (1/p) sum_u D_u, A_u = D_u A_0 D_u^dag.
// W(u) = <psi|A_u|psi>/p sums to 1 over the grid; mana is the natural log of
// the total absolute quasi-probability mass.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "qmagic/errors.hpp"
#include "qmagic/linalg.hpp"
#include "qmagic/weyl.hpp"

namespace qmagic {

// All p^2 phase-point operators, indexed by u = (x|z) as x*p + z.
inline std::vector<Mat> phase_point_operators_uncached(std::int64_t p) {
    require_odd_prime(p, "phase_point_operators");
    Mat a0(p, p);
    for (std::int64_t x = 0; x < p; ++x)
        for (std::int64_t z = 0; z < p; ++z) a0 += displacement(x, z, p);
    a0 *= Complex{1.0 / static_cast<double>(p), 0};
    a0 = (a0 + a0.dagger()) * Complex{0.5, 0};

    std::vector<Mat> ops;
    ops.reserve(p * p);
    for (std::int64_t x = 0; x < p; ++x)
        for (std::int64_t z = 0; z < p; ++z) {
            const Mat d = displacement(x, z, p);
            ops.push_back(d * a0 * d.dagger());
        }
    return ops;
}

// Read-only per-p cache; construction happens once per dimension.
inline const std::vector<Mat>& phase_point_operators(std::int64_t p) {
    static std::mutex mu;
    static std::map<std::int64_t, std::unique_ptr<std::vector<Mat>>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(p);
    if (it == cache.end())
        it = cache.emplace(p, std::make_unique<std::vector<Mat>>(phase_point_operators_uncached(p)))
                 .first;
    return *it->second;
}

struct WignerFunction {
    std::int64_t p = 0;
    std::vector<double> values;  // values[x*p + z]

    double at(std::int64_t x, std::int64_t z) const { return values[x * p + z]; }
};

inline WignerFunction wigner_function(const Vec& state) {
    const std::int64_t p = static_cast<std::int64_t>(state.size());
    require_odd_prime(p, "wigner_function");
    if (std::abs(norm(state) - 1.0) > 1e-9)
        throw NotNormalized("wigner_function: state is not normalized");
    const auto& ops = phase_point_operators(p);
    WignerFunction w;
    w.p = p;
    w.values.reserve(ops.size());
    for (const Mat& a : ops)
        w.values.push_back(std::real(dot(state, a * state)) / static_cast<double>(p));
    return w;
}

inline double w_min(const Vec& state) {
    const WignerFunction w = wigner_function(state);
    return *std::min_element(w.values.begin(), w.values.end());
}

// mana = ln sum_u |W(u)|; zero exactly when W is nonnegative.
inline double mana(const Vec& state) {
    const WignerFunction w = wigner_function(state);
    double s = 0;
    for (double v : w.values) s += std::abs(v);
    return std::log(s);
}

}  // namespace qmagic
