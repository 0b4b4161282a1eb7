#pragma once

// MUB probability tables c_{V,B}, collision- and min-entropy functionals with
// their lower bounds, equatorial states, and minimization of the total
// min-entropy over the equatorial manifold. All entropies are in bits.

#include <cstdint>
#include <limits>
#include <map>
#include <random>
#include <vector>

#include "qmagic/errors.hpp"
#include "qmagic/field.hpp"
#include "qmagic/linalg.hpp"
#include "qmagic/magic.hpp"
#include "qmagic/nelder_mead.hpp"
#include "qmagic/weyl.hpp"

namespace qmagic {

// Probabilities of a state against all (p+1) x p MUB vectors. Column 0 is the
// computational basis, column 1+B is the eigenbasis of D_(1|B).
struct MubTable {
    std::int64_t p = 0;
    std::vector<std::vector<double>> columns;  // columns[basis][v]

    const std::vector<double>& column(const MubLabel& l) const {
        return columns[l.is_computational ? 0 : 1 + l.b];
    }
};

namespace detail {

// Rows of conj(<psi_B^V|) per finite basis, cached per p: a matrix-vector
// product then gives all p overlaps of a basis at once.
inline const std::vector<Mat>& basis_bras(std::int64_t p) {
    static std::map<std::int64_t, std::vector<Mat>> cache;
    auto it = cache.find(p);
    if (it == cache.end()) {
        std::vector<Mat> mats;
        for (std::int64_t b = 0; b < p; ++b) {
            Mat m(p, p);
            for (std::int64_t v = 0; v < p; ++v) {
                const Vec k = mub_ket(MubLabel::finite(b), v, p);
                for (std::int64_t i = 0; i < p; ++i) m(v, i) = std::conj(k[i]);
            }
            mats.push_back(m);
        }
        it = cache.emplace(p, std::move(mats)).first;
    }
    return it->second;
}

}  // namespace detail

inline MubTable mub_table(const Vec& state, std::int64_t p) {
    require_odd_prime(p, "mub_table");
    if (static_cast<std::int64_t>(state.size()) != p)
        throw DimensionMismatch("mub_table: state dimension does not match p");
    if (std::abs(norm(state) - 1.0) > 1e-9)
        throw NotNormalized("mub_table: state norm deviates from 1 by " +
                            std::to_string(std::abs(norm(state) - 1.0)));
    MubTable t;
    t.p = p;
    t.columns.assign(p + 1, std::vector<double>(p, 0.0));
    for (std::int64_t v = 0; v < p; ++v) t.columns[0][v] = std::norm(state[v]);
    const auto& bras = detail::basis_bras(p);
    for (std::int64_t b = 0; b < p; ++b) {
        const Vec amps = bras[b] * state;
        for (std::int64_t v = 0; v < p; ++v) t.columns[1 + b][v] = std::norm(amps[v]);
    }
    return t;
}

// K = sum_{B,V} c_{V,B} |psi_B^V><psi_B^V| - Tr(K) I.
inline Mat reconstruct(const MubTable& t, double trace_k) {
    const std::int64_t p = t.p;
    Mat k(p, p);
    const auto bases = all_bases(p);
    for (std::size_t bi = 0; bi < bases.size(); ++bi)
        for (std::int64_t v = 0; v < p; ++v)
            k += t.columns[bi][v] * mub_projector(bases[bi], v, p);
    for (std::int64_t i = 0; i < p; ++i) k(i, i) -= trace_k;
    return k;
}

inline double collision_entropy(const std::vector<double>& probs) {
    double s = 0;
    for (double c : probs) s += c * c;
    return -std::log2(s);
}

inline double min_entropy(const std::vector<double>& probs) {
    return -std::log2(*std::max_element(probs.begin(), probs.end()));
}

inline double collision_total(const Vec& state, std::int64_t p,
                              const std::vector<MubLabel>& basis_set) {
    const MubTable t = mub_table(state, p);
    double total = 0;
    for (const MubLabel& b : basis_set) total += collision_entropy(t.column(b));
    return total;
}

inline double min_total(const Vec& state, std::int64_t p,
                        const std::vector<MubLabel>& basis_set) {
    const MubTable t = mub_table(state, p);
    double total = 0;
    for (const MubLabel& b : basis_set) total += min_entropy(t.column(b));
    return total;
}

// Per-basis entropies plus the applicable lower bounds, in bits.
struct EntropyReport {
    std::int64_t p = 0;
    std::vector<MubLabel> basis_set;
    std::vector<double> collision;  // H_2 per basis, in basis_set order
    std::vector<double> min;        // H_min per basis
    double collision_sum = 0;
    double min_sum = 0;
    double min_entropy_bound = 0;     // Eq-style bound over Z_p bases
    const char* log_base = "log2";
};

inline double min_entropy_lower_bound(std::int64_t p) {
    return -p * std::log2((1.0 + (p - 1) / std::sqrt(static_cast<double>(p))) / p);
}

// Lower bound on the total collision entropy of equatorial states over the p
// non-computational bases.
inline double equatorial_collision_bound(std::int64_t p) {
    return -p * std::log2((2.0 - 1.0 / p) / p);
}

// Lower bound on the total collision entropy of any pure state over all p+1
// bases.
inline double collision_bound_all_bases(std::int64_t p) {
    return -(p + 1) * std::log2(2.0 / (p + 1));
}

inline EntropyReport entropy_report(const Vec& state, std::int64_t p,
                                    const std::vector<MubLabel>& basis_set) {
    const MubTable t = mub_table(state, p);
    EntropyReport r;
    r.p = p;
    r.basis_set = basis_set;
    for (const MubLabel& b : basis_set) {
        r.collision.push_back(collision_entropy(t.column(b)));
        r.min.push_back(min_entropy(t.column(b)));
        r.collision_sum += r.collision.back();
        r.min_sum += r.min.back();
    }
    r.min_entropy_bound = min_entropy_lower_bound(p);
    return r;
}

struct EquatorialPhases {
    std::vector<double> phases;  // phi_1..phi_{p-1}; phi_0 is pinned to 0
};

inline Vec equatorial_state(const EquatorialPhases& phi) {
    const std::int64_t p = static_cast<std::int64_t>(phi.phases.size()) + 1;
    const double scale = 1.0 / std::sqrt(static_cast<double>(p));
    Vec v(p);
    v[0] = scale;
    for (std::int64_t k = 1; k < p; ++k)
        v[k] = scale * std::polar(1.0, phi.phases[k - 1]);
    return v;
}

// Phases that reproduce |f_{a,b,c}>: 2 pi (a k^3 + b k^2 + c k)/p for p > 3,
// and the eighth/ninth-root exponents for p = 2, 3.
inline EquatorialPhases magic_phases(const MagicParams& mp) {
    const Vec f = magic_state(mp);
    EquatorialPhases phi;
    for (std::size_t k = 1; k < f.size(); ++k)
        phi.phases.push_back(std::arg(f[k] / f[0]));
    return phi;
}

struct MinEntropyResult {
    EquatorialPhases phases;
    double value = 0;
    std::int64_t restarts_used = 0;
    // Largest squared overlap with any |f_{a,b,c}>; the flag is true when the
    // optimum coincides with a magic state.
    double best_magic_overlap = 0;
    bool magic = false;
};

namespace detail {

// Total min-entropy over the p non-computational bases as a function of the
// p-1 free phases.
inline double equatorial_min_total(const std::vector<double>& phases, std::int64_t p) {
    const double scale = 1.0 / std::sqrt(static_cast<double>(p));
    Vec state(p);
    state[0] = scale;
    for (std::int64_t k = 1; k < p; ++k) state[k] = scale * std::polar(1.0, phases[k - 1]);
    const auto& bras = basis_bras(p);
    double total = 0;
    for (std::int64_t b = 0; b < p; ++b) {
        double best = 0;
        for (std::int64_t v = 0; v < p; ++v) {
            Complex amp{0, 0};
            const Mat& m = bras[b];
            for (std::int64_t i = 0; i < p; ++i) amp += m(v, i) * state[i];
            best = std::max(best, std::norm(amp));
        }
        total -= std::log2(best);
    }
    return total;
}

}  // namespace detail

// Minimize the total min-entropy over the equatorial manifold, computational
// basis excluded. Multi-start Nelder-Mead: magic-phase starts for every a
// (so the known optima are never missed), uniform random starts, and
// basin-hop starts that perturb the incumbent best point. Each local search
// re-runs Nelder-Mead from its own endpoint until the improvement stalls.
// Deterministic under the seed.
inline MinEntropyResult minimize_min_entropy(std::int64_t p, std::int64_t restarts,
                                             std::uint64_t seed) {
    require_odd_prime(p, "minimize_min_entropy");
    if (p > 13)
        throw BudgetExceeded("minimize_min_entropy: manifold search capped at p = 13");
    if (restarts < 1) throw BudgetExceeded("minimize_min_entropy: restarts must be >= 1");

    auto objective = [p](const std::vector<double>& x) {
        return detail::equatorial_min_total(x, p);
    };

    auto polish = [&](std::vector<double> x) {
        NelderMeadOptions opt;
        opt.initial_step = 0.3;
        opt.diameter_tol = 1e-7;
        opt.max_iter = 6000;
        NelderMeadResult best = nelder_mead(objective, x, opt);
        for (int round = 0; round < 5; ++round) {
            opt.initial_step = 0.05;
            const NelderMeadResult next = nelder_mead(objective, best.x, opt);
            if (next.value >= best.value - 1e-10) {
                best = next.value < best.value ? next : best;
                break;
            }
            best = next;
        }
        return best;
    };

    std::vector<std::vector<double>> starts;
    for (std::int64_t a = 1; a < p; ++a)
        starts.push_back(magic_phases(MagicParams(a, 0, 0, p)).phases);

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(0.0, 2.0 * std::numbers::pi);
    std::normal_distribution<double> gauss(0.0, 0.7);

    MinEntropyResult res;
    res.value = std::numeric_limits<double>::infinity();
    res.restarts_used = restarts;

    for (std::int64_t r = 0; r < restarts; ++r) {
        std::vector<double> x0;
        if (r < static_cast<std::int64_t>(starts.size())) {
            x0 = starts[r];
        } else if (r % 2 == 0 || !std::isfinite(res.value)) {
            x0.resize(p - 1);
            for (double& v : x0) v = uni(rng);
        } else {
            x0 = res.phases.phases;  // basin hop around the incumbent
            for (double& v : x0) v += gauss(rng);
        }
        const NelderMeadResult local = polish(x0);
        if (local.value < res.value) {
            res.value = local.value;
            res.phases.phases = local.x;
        }
    }

    // canonicalize phases into [0, 2 pi)
    for (double& v : res.phases.phases) {
        v = std::fmod(v, 2.0 * std::numbers::pi);
        if (v < 0) v += 2.0 * std::numbers::pi;
    }

    const Vec found = equatorial_state(res.phases);
    for (std::int64_t a = 1; a < p; ++a)
        for (std::int64_t b = 0; b < p; ++b)
            for (std::int64_t c = 0; c < p; ++c)
                res.best_magic_overlap = std::max(
                    res.best_magic_overlap,
                    std::norm(dot(magic_state(MagicParams(a, b, c, p)), found)));
    res.magic = res.best_magic_overlap > 1.0 - 1e-6;
    return res;
}

struct Fig2Point {
    double x = 0, y = 0;         // exponents of xi = e^{2 pi i/9}
    double total_min_entropy = 0;  // over the 3 non-computational bases
};

// Qutrit uncertainty landscape: states (1, xi^x, xi^y)/sqrt(3) on a
// resolution x resolution grid over [0, 9)^2.
inline std::vector<Fig2Point> fig2_grid(int resolution) {
    if (resolution < 16)
        throw BudgetExceeded("fig2_grid: resolution must be at least 16 per axis");
    std::vector<Fig2Point> grid;
    grid.reserve(static_cast<std::size_t>(resolution) * resolution);
    const double step = 9.0 / resolution;
    for (int i = 0; i < resolution; ++i)
        for (int j = 0; j < resolution; ++j) {
            Fig2Point pt;
            pt.x = i * step;
            pt.y = j * step;
            const std::vector<double> phases{2.0 * std::numbers::pi * pt.x / 9.0,
                                             2.0 * std::numbers::pi * pt.y / 9.0};
            pt.total_min_entropy = detail::equatorial_min_total(phases, 3);
            grid.push_back(pt);
        }
    return grid;
}

}  // namespace qmagic
