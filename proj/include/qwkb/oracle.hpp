#pragma once

#include <vector>

#include "qwkb/core.hpp"

namespace qwkb {

struct OracleConfig {
    int grid_points = 4000;       ///< coarse interior grid size (>= 100)
    double r_max_factor = 2.0;    ///< domain = factor x estimated outer turning radius (>= 1.5)
    int levels = 10;              ///< number of eigenvalues requested
    int refinement_levels = 2;    ///< successive h/2 grids combined by extrapolation (>= 2)
    bool langer_modified = true;  ///< must equal the flag on the problem being adjudicated
};

struct OracleSpectrum {
    std::vector<double> eigenvalues;           ///< extrapolated, strictly increasing
    std::vector<int> node_counts;              ///< interior sign changes; level i carries i
    std::vector<double> convergence_estimate;  ///< |E_fine - E_coarse| / (3 |E|) per level
    std::vector<std::vector<double>> grid_eigenvalues;  ///< raw values, one list per grid
    std::vector<int> grid_sizes;
    double r_max = 0.0;
};

/// Lowest eigenvalues of the reduced radial equation
///
///   -(hbar^2/2m) u'' + [V(r) + L hbar^2/(2m r^2)] u = E u,   u(0) = u(r_max) = 0
///
/// with L the problem's centrifugal coefficient, discretized by second-order
/// central differences on uniform grids. Eigenvalues come from Sturm-sequence
/// bisection on the symmetric tridiagonal matrix, the grids are combined by
/// Richardson extrapolation, and inverse iteration on the finest grid supplies
/// node counts plus the tail-decay check.
///
/// config.langer_modified exists so call sites state which equation they mean;
/// a mismatch with problem.langer_modified throws std::invalid_argument rather
/// than silently comparing different operators. Undecayed eigenfunction tails
/// (|u(r_max - h)| > 1e-6 of the peak) throw domain_too_small_error;
/// inconsistent Sturm counts throw numerical_error.
OracleSpectrum exact_spectrum(const WkbProblem& problem, const OracleConfig& config);

/// Closed-form benchmark for the linear preset at l = 0 (Langer on):
/// E_n = |a_n| (hbar^2 (mu Q)^2 / (2m))^{1/3} with a_n the n-th Airy-function
/// zero, tabulated to 19 digits for n = 1..10. Out-of-range n throws
/// std::out_of_range.
double airy_reference_linear(int n, const PhysicalParams& params, double muQ);

}  // namespace qwkb
