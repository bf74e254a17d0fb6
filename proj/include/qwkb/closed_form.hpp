#pragma once

#include "qwkb/core.hpp"

namespace qwkb {

/// Gamma function for x > 0 via the 14-term Lanczos series (relative error
/// well below 1e-12 over the range used here). Poles are not needed, so
/// x <= 0 is a domain error.
double gamma_value(double x);

/// The logarithmic s-wave spectrum ships in two forms: `published` is the
/// closed form as printed, `rederived` carries an extra factor 2 inside the
/// logarithm and is the one consistent with the quantization condition it
/// came from (the two differ by exactly (Q E0 / 2) ln 2; see the verify
/// suite, which reports the offset rather than hiding it).
enum class LogVariant { published, rederived };

/// s-wave levels of the linear preset V = muQ r:
///   E_n = muQ [ 9 hbar^2 pi^2 (n - maslov)^2 / (8 m muQ) ]^(1/3)
double linear_energy(int n, const PhysicalParams& params, double muQ, double maslov = 0.5);

/// s-wave levels of the cubic preset V = nuQ r^3:
///   E_n = [ 6 hbar (n - maslov) sqrt(pi/2m) (nuQ)^(1/3) Gamma(11/6)/Gamma(1/3) ]^(6/5)
double cubic_energy(int n, const PhysicalParams& params, double nuQ, double maslov = 0.5);

/// s-wave levels of the logarithmic preset:
///   published:  E_n = (QE0/2) ln[ (hbar/r0)  sqrt(pi/(QE0 m)) (n - maslov) ] - QE0/4
///   rederived:  E_n = (QE0/2) ln[ (2hbar/r0) sqrt(pi/(QE0 m)) (n - maslov) ] - QE0/4
double log_energy(int n, const PhysicalParams& params, double QE0, double r0,
                  LogVariant variant = LogVariant::rederived, double maslov = 0.5);

/// Closed-form l = 0 phase integral (1/hbar) int_{r1}^{r2} q dr for the three
/// presets; power_law has no closed form here and raises
/// unsupported_configuration_error.
double analytic_phase(const EffectivePotential& potential, const PhysicalParams& params,
                      double energy);

/// Dispatches to the closed form matching the problem's preset, using the
/// problem's maslov constant. l must be 0.
double closed_form_energy(const WkbProblem& problem, int n,
                          LogVariant variant = LogVariant::rederived);

}  // namespace qwkb
