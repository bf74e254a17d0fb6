#pragma once

#include <span>
#include <vector>

#include "qwkb/core.hpp"

namespace qwkb {

/// Classical turning points of the local momentum. r1 = 0 exactly for l = 0
/// (the reduced radial function is regular there); for l > 0 both radii are
/// roots of q^2 located numerically. r2 == r1 marks a degenerate (empty)
/// allowed region.
struct TurningPoints {
    double r1 = 0.0;
    double r2 = 0.0;

    bool degenerate() const { return r2 <= r1 + 1e-14; }
};

struct PhaseOptions {
    double rel_tol = 5e-13;    ///< quadrature tolerance on the phase
    int max_intervals = 6000;  ///< quadrature panel budget
    /// When the quadrature cannot converge (the Langer-off l = 0 integrand
    /// diverges logarithmically at r = 0), return the capped best estimate
    /// with converged = false instead of throwing.
    bool allow_unconverged = false;
};

struct PhaseResult {
    double phase = 0.0;             ///< (1/hbar) * integral of q between the turning points
    double quadrature_error = 0.0;  ///< absolute error estimate of the quadrature
    long evaluations = 0;
    bool converged = true;
    bool degenerate = false;  ///< empty allowed region, phase identically 0
    TurningPoints turning_points;
};

/// One solved Bohr-Sommerfeld level: Phi(energy) = (n - maslov) * pi.
struct LevelSolution {
    int n = 0;
    double energy = 0.0;
    double phase = 0.0;           ///< Phi at the reported energy
    double phase_residual = 0.0;  ///< |phase - (n - maslov) pi|
    TurningPoints turning_points;
    bool phase_converged = true;  ///< false only on the capped divergent path
};

struct WavefunctionSample {
    double r = 0.0;
    double momentum_sq = 0.0;  ///< q^2(r)
    double phase = 0.0;        ///< accumulated (1/hbar) * integral from r1 to r
    double u = 0.0;            ///< reduced radial function
    double R = 0.0;            ///< full radial function u / sqrt(r)
    bool valid = false;        ///< false inside the guard bands or the forbidden region
};

struct WavefunctionOptions {
    /// Guard band around each turning point, as a fraction of r2 - r1; points
    /// inside it are flagged invalid (the amplitude diverges at q = 0).
    double guard_fraction = 0.01;
    PhaseOptions phase;
};

struct WavefunctionResult {
    double energy = 0.0;
    TurningPoints turning_points;
    std::vector<WavefunctionSample> samples;  ///< in the caller's grid order
    bool phase_converged = true;
};

/// q^2(r) = 2m [E - V(r)] - L hbar^2 / r^2 with L the problem's centrifugal
/// coefficient. May be negative (classically forbidden region).
/// Throws std::domain_error for r <= 0.
double local_momentum_sq(const WkbProblem& problem, double energy, double r);

/// Locates the classically allowed region [r1, r2] at the given energy.
/// Throws no_bound_region_error when q^2 < 0 everywhere and bracketing_error
/// when the potential admits no outer turning point (not confining).
TurningPoints find_turning_points(const WkbProblem& problem, double energy);

/// Phi(E) = (1/hbar) * integral of sqrt(q^2) over [r1, r2], computed after the
/// substitution r = r1 + (r2 - r1) sin^2(theta) which makes the integrand
/// smooth at simple turning points. Throws quadrature_tolerance_error (with
/// the best estimate attached) on non-convergence unless
/// opts.allow_unconverged is set.
PhaseResult phase_integral(const WkbProblem& problem, double energy,
                           const PhaseOptions& opts = {});

/// Solves Phi(E) = (n - maslov) * pi for E. Phi is strictly increasing in E,
/// so the root is unique; it is bracketed by expansion from an analytic seed
/// and refined to relative tolerance 1e-11 with the phase residual driven
/// below 1e-9. n < 1 throws std::invalid_argument.
LevelSolution solve_level(const WkbProblem& problem, int n, const PhaseOptions& opts = {});

/// Samples u(r) = 2/sqrt(q) * cos(accumulated phase - pi/4) and
/// R(r) = u(r)/sqrt(r) on the caller's grid. Points in the forbidden region
/// or inside the turning-point guard bands are flagged invalid, never a hard
/// failure. The energy should solve a quantization condition for the sampled
/// function to be meaningful.
WavefunctionResult wkb_wavefunction(const WkbProblem& problem, double energy,
                                    std::span<const double> grid,
                                    const WavefunctionOptions& opts = {});

}  // namespace qwkb
