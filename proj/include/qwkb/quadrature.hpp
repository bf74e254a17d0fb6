#pragma once

#include <functional>
#include <vector>

namespace qwkb {

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    long evaluations = 0;
    bool converged = true;
};

struct QuadratureOptions {
    double rel_tol = 1e-12;
    double abs_tol = 0.0;
    int max_intervals = 8000;  ///< panel budget; exhaustion flags non-convergence
    int gauss_order = 21;      ///< nodes per panel
};

/// n-point Gauss-Legendre nodes and weights on [-1, 1], computed by Newton
/// iteration on the Legendre recurrence.
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

/// Adaptive panel-bisection quadrature with a fixed-order Gauss-Legendre rule
/// per panel. A panel is accepted once |G(panel) - G(left) - G(right)| fits
/// the width-proportional share of the global tolerance, otherwise the halves
/// are pushed for refinement. Deterministic for a given integrand and options.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureOptions& opts = {});

}  // namespace qwkb
