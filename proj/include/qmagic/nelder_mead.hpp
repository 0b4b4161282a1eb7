#pragma once

// Derivative-free simplex minimizer (Nelder-Mead with standard reflection/
// expansion/contraction/shrink coefficients). Deterministic given the start
// simplex; convergence on simplex diameter.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

namespace qmagic {

struct NelderMeadOptions {
    double initial_step = 0.3;   // simplex scale around the start point
    double diameter_tol = 1e-7;  // stop when the simplex shrinks below this
    int max_iter = 5000;
};

struct NelderMeadResult {
    std::vector<double> x;
    double value = 0;
    int iterations = 0;
};

inline NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                                    const std::vector<double>& start,
                                    const NelderMeadOptions& opt = {}) {
    const std::size_t n = start.size();
    std::vector<std::vector<double>> pts(n + 1, start);
    for (std::size_t i = 0; i < n; ++i) pts[i + 1][i] += opt.initial_step;
    std::vector<double> fv(n + 1);
    for (std::size_t i = 0; i <= n; ++i) fv[i] = f(pts[i]);

    std::vector<std::size_t> order(n + 1);
    int iter = 0;
    for (; iter < opt.max_iter; ++iter) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
        const std::size_t best = order[0], worst = order[n], second = order[n - 1];

        double diam = 0;
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t d = 0; d < n; ++d)
                diam = std::max(diam, std::abs(pts[order[i]][d] - pts[best][d]));
        if (diam < opt.diameter_tol) break;

        std::vector<double> centroid(n, 0.0);
        for (std::size_t i = 0; i <= n; ++i) {
            if (i == worst) continue;
            for (std::size_t d = 0; d < n; ++d) centroid[d] += pts[i][d];
        }
        for (double& c : centroid) c /= static_cast<double>(n);

        auto blend = [&](double t) {
            std::vector<double> p(n);
            for (std::size_t d = 0; d < n; ++d)
                p[d] = centroid[d] + t * (pts[worst][d] - centroid[d]);
            return p;
        };

        const std::vector<double> refl = blend(-1.0);
        const double frefl = f(refl);
        if (frefl < fv[best]) {
            const std::vector<double> expd = blend(-2.0);
            const double fexpd = f(expd);
            if (fexpd < frefl) {
                pts[worst] = expd;
                fv[worst] = fexpd;
            } else {
                pts[worst] = refl;
                fv[worst] = frefl;
            }
        } else if (frefl < fv[second]) {
            pts[worst] = refl;
            fv[worst] = frefl;
        } else {
            const std::vector<double> contr = blend(frefl < fv[worst] ? -0.5 : 0.5);
            const double fcontr = f(contr);
            if (fcontr < std::min(frefl, fv[worst])) {
                pts[worst] = contr;
                fv[worst] = fcontr;
            } else {
                for (std::size_t i = 0; i <= n; ++i) {
                    if (i == best) continue;
                    for (std::size_t d = 0; d < n; ++d)
                        pts[i][d] = pts[best][d] + 0.5 * (pts[i][d] - pts[best][d]);
                    fv[i] = f(pts[i]);
                }
            }
        }
    }

    std::size_t bi = 0;
    for (std::size_t i = 1; i <= n; ++i)
        if (fv[i] < fv[bi]) bi = i;
    return {pts[bi], fv[bi], iter};
}

}  // namespace qmagic
