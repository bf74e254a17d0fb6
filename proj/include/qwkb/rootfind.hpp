#pragma once

#include <functional>

namespace qwkb {

struct RootOptions {
    double rel_tol = 1e-12;  ///< on the bracket width, relative to |x|
    double abs_tol = 0.0;
    double f_tol = 0.0;      ///< optional early stop on |f|
    int max_iter = 200;
};

/// Hybrid bisection/secant refinement of a sign-changing bracket [a, b].
/// The secant candidate is taken when it falls strictly inside the current
/// bracket, otherwise the step falls back to bisection, so the bracket always
/// shrinks and convergence is guaranteed.
double refine_root(const std::function<double(double)>& f, double a, double b, double fa,
                   double fb, const RootOptions& opts = {});

}  // namespace qwkb
