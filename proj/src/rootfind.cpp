#include "qwkb/rootfind.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace qwkb {

double refine_root(const std::function<double(double)>& f, double a, double b, double fa,
                   double fb, const RootOptions& opts) {
    if (!(b > a)) throw std::invalid_argument("refine_root: requires a < b");
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if ((fa > 0.0) == (fb > 0.0))
        throw std::invalid_argument("refine_root: endpoints must bracket a sign change");

    for (int iter = 0; iter < opts.max_iter; ++iter) {
        const double width = b - a;
        const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
        if (width <= opts.abs_tol + opts.rel_tol * scale) break;

        // Secant through the bracket endpoints; bisection when it degenerates
        // or lands too close to the boundary.
        double x = b - fb * width / (fb - fa);
        const double margin = 0.01 * width;
        if (!std::isfinite(x) || x <= a + margin || x >= b - margin) x = a + 0.5 * width;

        const double fx = f(x);
        if (fx == 0.0) return x;
        if (opts.f_tol > 0.0 && std::abs(fx) <= opts.f_tol) return x;

        if ((fx > 0.0) == (fa > 0.0)) {
            a = x;
            fa = fx;
        } else {
            b = x;
            fb = fx;
        }
    }
    return a + 0.5 * (b - a);
}

}  // namespace qwkb
