#include "qwkb/wkb.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

#include "qwkb/closed_form.hpp"
#include "qwkb/errors.hpp"
#include "qwkb/quadrature.hpp"
#include "qwkb/rootfind.hpp"

namespace qwkb {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

/// Outer radius solving V(r) = E; valid for confining presets with
/// E > inf V. Exact algebraic inverses, no iteration needed.
double potential_level_radius(const EffectivePotential& pot, double E) {
    const double c = pot.strength();
    switch (pot.kind()) {
        case PotentialKind::linear:
            return E / c;
        case PotentialKind::cubic:
            return std::cbrt(E / c);
        case PotentialKind::logarithmic:
            // (c/2)(ln(r/r0) - 1/2) = E  =>  r = r0 exp(2E/c + 1/2)
            return pot.inner_radius() * std::exp(2.0 * E / c + 0.5);
        case PotentialKind::power_law:
            return std::pow(E / c, 1.0 / pot.exponent());
    }
    throw std::logic_error("potential_level_radius: unknown preset");
}

/// Radius of the effective-potential minimum for L > 0, i.e. the root of
/// r^3 V'(r) = L hbar^2 / m. The left side is strictly increasing for every
/// confining preset, so the minimum is unique and q^2 is unimodal.
double effective_minimum_radius(const WkbProblem& problem, double L) {
    const EffectivePotential& pot = problem.potential;
    const double t = L * problem.params.hbar * problem.params.hbar / problem.params.mass;
    const double c = pot.strength();
    switch (pot.kind()) {
        case PotentialKind::linear:
            return std::cbrt(t / c);
        case PotentialKind::cubic:
            return std::pow(t / (3.0 * c), 0.2);
        case PotentialKind::logarithmic:
            return std::sqrt(2.0 * t / c);
        case PotentialKind::power_law:
            return std::pow(t / (c * pot.exponent()), 1.0 / (pot.exponent() + 2.0));
    }
    throw std::logic_error("effective_minimum_radius: unknown preset");
}

double refine_momentum_root(const WkbProblem& problem, double E, double a, double b, double fa,
                            double fb) {
    auto f = [&](double r) { return local_momentum_sq(problem, E, r); };
    RootOptions opts;
    opts.rel_tol = 1e-12;
    return refine_root(f, a, b, fa, fb, opts);
}

QuadratureOptions quadrature_options(const PhaseOptions& opts) {
    QuadratureOptions q;
    q.rel_tol = opts.rel_tol;
    q.max_intervals = opts.max_intervals;
    return q;
}

}  // namespace

double local_momentum_sq(const WkbProblem& problem, double energy, double r) {
    if (!(r > 0.0)) throw std::domain_error("local_momentum_sq: r must be > 0");
    const double hbar = problem.params.hbar;
    const double L = problem.centrifugal_coefficient();
    double value = 2.0 * problem.params.mass * (energy - problem.potential.value(r));
    if (L != 0.0) value -= L * hbar * hbar / (r * r);
    return value;
}

TurningPoints find_turning_points(const WkbProblem& problem, double energy) {
    problem.validate();
    const EffectivePotential& pot = problem.potential;
    if (!pot.confining())
        throw bracketing_error(
            "find_turning_points: potential is not confining; no outer turning point exists");

    const double L = problem.centrifugal_coefficient();

    if (L == 0.0) {
        // l = 0 with the Langer replacement: q^2 = 2m(E - V), r1 = 0.
        const bool power_family = pot.kind() != PotentialKind::logarithmic;
        if (power_family && energy < 0.0)
            throw no_bound_region_error(
                "find_turning_points: energy below the infimum of the potential");
        if (power_family && energy == 0.0) return {0.0, 0.0};
        return {0.0, potential_level_radius(pot, energy)};
    }

    auto q2 = [&](double r) { return local_momentum_sq(problem, energy, r); };

    if (L < 0.0) {
        // l = 0 without the Langer replacement: +hbar^2/(4 r^2) in q^2 makes
        // the momentum +inf at the origin and strictly decreasing, so the
        // allowed region is (0, r2) at every energy and r1 = 0 still.
        double a;
        if (pot.kind() == PotentialKind::logarithmic || energy > 0.0) {
            a = potential_level_radius(pot, energy);  // q^2 = +hbar^2/(4a^2) there
        } else {
            a = 1.0;
            for (int i = 0; q2(a) <= 0.0; ++i) {
                if (i > 600)
                    throw bracketing_error(
                        "find_turning_points: no classically allowed region found near r = 0");
                a *= 0.5;
            }
        }
        double fa = q2(a);
        if (fa <= 0.0) {
            // The algebraic point can sit a rounding step past the root.
            a = std::nextafter(a, 0.0);
            fa = q2(a);
        }
        double b = 2.0 * a, fb = q2(b);
        for (int i = 0; fb > 0.0; ++i) {
            if (i > 600)
                throw bracketing_error("find_turning_points: outer turning point not bracketed");
            a = b;
            fa = fb;
            b *= 2.0;
            fb = q2(b);
        }
        const double r2 = fb == 0.0 ? b : refine_momentum_root(problem, energy, a, b, fa, fb);
        return {0.0, r2};
    }

    // l >= 1: the centrifugal barrier closes the allowed region on both sides
    // of the effective-potential minimum; q^2 is unimodal with its maximum
    // there.
    const double rstar = effective_minimum_radius(problem, L);
    const double peak = q2(rstar);
    if (!(peak > 0.0))
        throw no_bound_region_error(
            "find_turning_points: energy does not exceed the effective-potential minimum (l = " +
            std::to_string(problem.l) + ")");

    double a = 0.5 * rstar, b = rstar, fb = peak;
    double fa = q2(a);
    for (int i = 0; fa > 0.0; ++i) {
        if (i > 600)
            throw bracketing_error("find_turning_points: inner turning point not bracketed");
        b = a;
        fb = fa;
        a *= 0.5;
        fa = q2(a);
    }
    const double r1 = fa == 0.0 ? a : refine_momentum_root(problem, energy, a, b, fa, fb);

    a = rstar;
    fa = peak;
    b = 2.0 * rstar;
    fb = q2(b);
    for (int i = 0; fb > 0.0; ++i) {
        if (i > 600)
            throw bracketing_error("find_turning_points: outer turning point not bracketed");
        a = b;
        fa = fb;
        b *= 2.0;
        fb = q2(b);
    }
    const double r2 = fb == 0.0 ? b : refine_momentum_root(problem, energy, a, b, fa, fb);
    return {r1, r2};
}

PhaseResult phase_integral(const WkbProblem& problem, double energy, const PhaseOptions& opts) {
    PhaseResult out;
    out.turning_points = find_turning_points(problem, energy);
    if (out.turning_points.degenerate()) {
        out.degenerate = true;
        return out;
    }

    const double r1 = out.turning_points.r1;
    const double width = out.turning_points.r2 - r1;
    const double hbar = problem.params.hbar;

    // r = r1 + (r2 - r1) sin^2(theta) maps [0, pi/2] onto [r1, r2] and the
    // sin * cos Jacobian cancels the sqrt zero of q at simple turning points.
    auto integrand = [&](double theta) {
        const double s = std::sin(theta);
        const double r = r1 + width * s * s;
        if (!(r > 0.0)) return 0.0;
        const double q2 = local_momentum_sq(problem, energy, r);
        if (!(q2 > 0.0)) return 0.0;
        return std::sqrt(q2) * 2.0 * width * s * std::cos(theta);
    };

    const QuadratureResult quad = integrate(integrand, 0.0, 0.5 * kPi, quadrature_options(opts));
    out.phase = quad.value / hbar;
    out.quadrature_error = quad.error_estimate / hbar;
    out.evaluations = quad.evaluations;
    out.converged = quad.converged;
    if (!quad.converged && !opts.allow_unconverged)
        throw quadrature_tolerance_error(
            "phase_integral: quadrature did not reach the requested tolerance (the integrand is "
            "non-integrable for l = 0 without the Langer replacement)",
            out.phase, out.quadrature_error);
    return out;
}

LevelSolution solve_level(const WkbProblem& problem, int n, const PhaseOptions& opts) {
    problem.validate();
    if (n < 1) throw std::invalid_argument("solve_level: n must be >= 1");
    const EffectivePotential& pot = problem.potential;
    if (!pot.confining())
        throw bracketing_error("solve_level: potential is not confining; no discrete spectrum");
    if (problem.l == 0 && !problem.langer_modified)
        throw unsupported_configuration_error(
            "solve_level: without the Langer replacement the s-wave local momentum behaves like "
            "hbar/(2r) at the origin, the phase integral diverges logarithmically and the "
            "quantization condition has no finite root; use langer_modified = true for l = 0");

    const double target = (n - problem.maslov) * kPi;
    PhaseOptions inner = opts;
    inner.allow_unconverged = true;

    bool all_converged = true;
    auto phase_at = [&](double E) {
        const PhaseResult p = phase_integral(problem, E, inner);
        if (!p.converged) all_converged = false;
        return p;
    };
    auto f = [&](double E) { return phase_at(E).phase - target; };

    // Analytic seed. The closed forms are essentially exact for the three
    // derivable presets; the power-law seed uses the exact homogeneity
    // Phi(E) = C E^{1/2 + 1/p}; for l >= 1 the walk starts one natural energy
    // gap above the effective-potential minimum.
    const double L = problem.centrifugal_coefficient();
    double e_min = -std::numeric_limits<double>::infinity();
    double e0 = 0.0;
    if (L > 0.0) {
        const double rstar = effective_minimum_radius(problem, L);
        const double hbar = problem.params.hbar;
        e_min = pot.value(rstar) + L * hbar * hbar / (2.0 * problem.params.mass * rstar * rstar);
        const double gap =
            std::max(std::abs(e_min), L * hbar * hbar / (2.0 * problem.params.mass * rstar * rstar));
        e0 = e_min + gap;
    } else if (pot.kind() == PotentialKind::power_law) {
        e_min = 0.0;
        const double s = 0.5 + 1.0 / pot.exponent();
        const double e_ref = pot.strength();  // V(1) in the working units
        const double phi_ref = phase_at(e_ref).phase;
        e0 = e_ref * std::pow(target / phi_ref, 1.0 / s);
    } else {
        if (pot.kind() != PotentialKind::logarithmic) e_min = 0.0;
        e0 = closed_form_energy(problem, n, LogVariant::rederived);
    }

    double a = e0, fa = f(a);
    double b = a, fb = fa;
    if (fa < 0.0) {
        double step = std::max({0.5 * std::abs(a), 0.25 * pot.strength(),
                                std::isfinite(e_min) ? 0.5 * (a - e_min) : 0.0, 1e-6});
        for (int i = 0; fb < 0.0; ++i) {
            if (i > 200)
                throw bracketing_error("solve_level: failed to bracket the level from above");
            a = b;
            fa = fb;
            b += step;
            step *= 2.0;
            fb = f(b);
        }
    } else if (fa > 0.0) {
        if (std::isfinite(e_min)) {
            double gap = a - e_min;
            for (int i = 0; fa > 0.0; ++i) {
                if (i > 200)
                    throw bracketing_error("solve_level: failed to bracket the level from below");
                b = a;
                fb = fa;
                gap *= 0.5;
                a = e_min + gap;
                fa = f(a);
            }
        } else {
            double step = std::max({0.5 * std::abs(a), 0.25 * pot.strength(), 1e-6});
            for (int i = 0; fa > 0.0; ++i) {
                if (i > 200)
                    throw bracketing_error("solve_level: failed to bracket the level from below");
                b = a;
                fb = fa;
                a -= step;
                step *= 2.0;
                fa = f(a);
            }
        }
    }

    double energy;
    if (fa == 0.0) {
        energy = a;
    } else if (fb == 0.0) {
        energy = b;
    } else {
        RootOptions ropts;
        ropts.rel_tol = 1e-12;
        ropts.f_tol = 5e-11;  // keeps the reported phase residual well under 1e-9
        ropts.max_iter = 240;
        energy = refine_root(f, a, b, fa, fb, ropts);
    }

    const PhaseResult final_phase = phase_at(energy);
    LevelSolution out;
    out.n = n;
    out.energy = energy;
    out.phase = final_phase.phase;
    out.phase_residual = std::abs(final_phase.phase - target);
    out.turning_points = final_phase.turning_points;
    out.phase_converged = all_converged && final_phase.converged;
    return out;
}

WavefunctionResult wkb_wavefunction(const WkbProblem& problem, double energy,
                                    std::span<const double> grid,
                                    const WavefunctionOptions& opts) {
    problem.validate();
    if (!(opts.guard_fraction >= 0.0 && opts.guard_fraction < 0.5))
        throw std::invalid_argument("wkb_wavefunction: guard_fraction must lie in [0, 0.5)");

    WavefunctionResult out;
    out.energy = energy;
    out.turning_points = find_turning_points(problem, energy);
    out.samples.assign(grid.size(), WavefunctionSample{});
    for (std::size_t i = 0; i < grid.size(); ++i) {
        out.samples[i].r = grid[i];
        out.samples[i].momentum_sq = kNan;
        out.samples[i].phase = kNan;
        out.samples[i].u = kNan;
        out.samples[i].R = kNan;
    }
    if (out.turning_points.degenerate()) return out;

    const double r1 = out.turning_points.r1;
    const double r2 = out.turning_points.r2;
    const double width = r2 - r1;
    const double guard = opts.guard_fraction * width;
    const double lo = r1 + guard, hi = r2 - guard;
    const double hbar = problem.params.hbar;
    const QuadratureOptions qopts = quadrature_options(opts.phase);

    std::vector<std::size_t> order(grid.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return grid[i] < grid[j]; });

    auto momentum = [&](double r) {
        const double q2 = local_momentum_sq(problem, energy, r);
        return q2 > 0.0 ? std::sqrt(q2) : 0.0;
    };

    // The phase accumulates left to right; the first segment starts at r1,
    // where q may vanish (l >= 1), so it uses the same sin^2 substitution as
    // the full phase integral. Later segments have smooth integrands.
    bool have_prev = false;
    double prev_r = r1;
    double accumulated = 0.0;
    for (std::size_t idx : order) {
        WavefunctionSample& s = out.samples[idx];
        const double r = s.r;
        if (!(r > 0.0) || r < lo || r > hi) continue;
        const double q2 = local_momentum_sq(problem, energy, r);
        s.momentum_sq = q2;
        if (!(q2 > 0.0)) continue;

        QuadratureResult seg;
        if (!have_prev) {
            const double span = r - r1;
            auto first_leg = [&](double theta) {
                const double st = std::sin(theta);
                const double rr = r1 + span * st * st;
                if (!(rr > 0.0)) return 0.0;
                return momentum(rr) * 2.0 * span * st * std::cos(theta);
            };
            seg = integrate(first_leg, 0.0, 0.5 * kPi, qopts);
            have_prev = true;
        } else {
            seg = integrate(momentum, prev_r, r, qopts);
        }
        if (!seg.converged) out.phase_converged = false;
        accumulated += seg.value / hbar;
        prev_r = r;

        const double q = std::sqrt(q2);
        s.phase = accumulated;
        s.u = 2.0 / std::sqrt(q) * std::cos(accumulated - 0.25 * kPi);
        s.R = s.u / std::sqrt(r);
        s.valid = true;
    }
    return out;
}

}  // namespace qwkb
