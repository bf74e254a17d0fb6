#include "qwkb/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <vector>

#include "qwkb/closed_form.hpp"
#include "qwkb/core.hpp"
#include "qwkb/electrostatics.hpp"
#include "qwkb/oracle.hpp"
#include "qwkb/quadrature.hpp"
#include "qwkb/wkb.hpp"

namespace qwkb {
namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point start) {
    return std::chrono::duration<double>(clock_type::now() - start).count();
}

void add(std::vector<CheckResult>& out, int criterion, std::string name, double measured,
         double threshold, std::string detail = "") {
    CheckResult c;
    c.criterion = criterion;
    c.name = std::move(name);
    c.measured = measured;
    c.threshold = threshold;
    c.passed = measured < threshold;
    c.detail = std::move(detail);
    out.push_back(std::move(c));
}

double rel_err(double value, double reference) {
    return std::abs(value - reference) / std::abs(reference);
}

WkbProblem s_wave(const EffectivePotential& pot, double maslov = 0.5) {
    return WkbProblem{PhysicalParams{}, pot, 0, true, maslov};
}

/// Deterministic 64-bit LCG for the randomized-pair property checks.
struct Lcg {
    std::uint64_t state;
    double uniform() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<double>(state >> 11) * 0x1.0p-53;
    }
};

void check_phase_agreement(std::vector<CheckResult>& out) {
    const auto start = clock_type::now();
    const PhysicalParams params;
    const EffectivePotential presets[] = {
        EffectivePotential::linear(1.0, 1.0),
        EffectivePotential::cubic(1.0, 1.0),
        EffectivePotential::logarithmic(1.0, 1.0, 1.0),
    };
    double worst = 0.0;
    for (const auto& pot : presets) {
        const WkbProblem problem = s_wave(pot);
        for (double energy : {0.5, 1.0, 2.0, 5.0}) {
            const double reference = analytic_phase(pot, params, energy);
            const double numeric = phase_integral(problem, energy).phase;
            worst = std::max(worst, rel_err(numeric, reference));
        }
    }
    add(out, 1, "phase quadrature vs analytic phases", worst, 1e-9,
        "three presets, E in {0.5, 1, 2, 5}, l = 0");
    add(out, 1, "runtime seconds", seconds_since(start), 1.0);
}

void check_spectra_vs_closed_forms(std::vector<CheckResult>& out) {
    const auto start = clock_type::now();
    const PhysicalParams params;
    const double half_ln2 = 0.5 * std::numbers::ln2;

    double worst = 0.0;
    {
        const WkbProblem problem = s_wave(EffectivePotential::linear(1.0, 1.0));
        for (int n = 1; n <= 20; ++n)
            worst = std::max(
                worst, rel_err(solve_level(problem, n).energy, linear_energy(n, params, 1.0)));
    }
    {
        const WkbProblem problem = s_wave(EffectivePotential::cubic(1.0, 1.0));
        for (int n = 1; n <= 20; ++n)
            worst = std::max(
                worst, rel_err(solve_level(problem, n).energy, cubic_energy(n, params, 1.0)));
    }
    double worst_offset = 0.0;
    {
        const WkbProblem problem = s_wave(EffectivePotential::logarithmic(1.0, 1.0, 1.0));
        for (int n = 1; n <= 20; ++n) {
            const double numeric = solve_level(problem, n).energy;
            worst = std::max(
                worst,
                rel_err(numeric, log_energy(n, params, 1.0, 1.0, LogVariant::rederived)));
            const double offset =
                numeric - log_energy(n, params, 1.0, 1.0, LogVariant::published);
            worst_offset = std::max(worst_offset, std::abs(offset - half_ln2));
        }
    }
    add(out, 2, "numeric levels vs closed forms", worst, 1e-8,
        "linear, cubic, log (rederived), n = 1..20");
    add(out, 2, "published-log offset equals (Q E0/2) ln 2", worst_offset, 1e-8, "absolute");
    add(out, 2, "runtime seconds", seconds_since(start), 2.0);
}

OracleSpectrum linear_oracle_levels_10() {
    const WkbProblem problem = s_wave(EffectivePotential::linear(1.0, 1.0));
    OracleConfig config;
    config.levels = 10;
    return exact_spectrum(problem, config);
}

void check_oracle_benchmark(std::vector<CheckResult>& out, const OracleSpectrum& oracle) {
    const PhysicalParams params;
    double worst = 0.0;
    for (int n = 1; n <= 5; ++n)
        worst = std::max(worst, rel_err(oracle.eigenvalues[static_cast<std::size_t>(n - 1)],
                                        airy_reference_linear(n, params, 1.0)));
    add(out, 3, "eigensolver vs Airy reference", worst, 1e-6,
        "linear preset, l = 0, n = 1..5, Richardson-extrapolated");
}

void check_maslov_adjudication(std::vector<CheckResult>& out, const OracleSpectrum& oracle) {
    const auto start = clock_type::now();
    const EffectivePotential pot = EffectivePotential::linear(1.0, 1.0);
    const WkbProblem quarter = s_wave(pot, 0.25);
    const WkbProblem half = s_wave(pot, 0.5);

    double worst_quarter = 0.0;
    double worst_ratio_dev = 0.0;
    for (int n = 5; n <= 10; ++n) {
        const double e_oracle = oracle.eigenvalues[static_cast<std::size_t>(n - 1)];
        const double err_quarter = rel_err(solve_level(quarter, n).energy, e_oracle);
        const double err_half = rel_err(solve_level(half, n).energy, e_oracle);
        const double predicted =
            std::abs(std::pow((n - 0.5) / (n - 0.25), 2.0 / 3.0) - 1.0);
        worst_quarter = std::max(worst_quarter, err_quarter);
        worst_ratio_dev = std::max(worst_ratio_dev, std::abs(err_half - predicted) / predicted);
    }
    add(out, 4, "maslov 1/4 error vs eigensolver", worst_quarter, 1e-3, "n = 5..10");
    add(out, 4, "maslov 1/2 error matches predicted ratio", worst_ratio_dev, 0.1,
        "relative deviation from |((n-1/2)/(n-1/4))^(2/3) - 1|");
    add(out, 4, "runtime seconds", seconds_since(start), 10.0);
}

void check_electrostatics_round_trip(std::vector<CheckResult>& out) {
    const double E0 = 1.0;
    const double r0 = 0.3;  // keeps rho bounded away from 0 on the test window
    const ChargeDensityProfile density = ChargeDensityProfile::logarithmic(E0, r0);
    const RadialField field = field_from_density(density);

    double worst_expr = 0.0, worst_gauss = 0.0, worst_inverse = 0.0;
    QuadratureOptions qopts;
    qopts.rel_tol = 1e-13;
    for (int i = 0; i <= 18; ++i) {
        const double r = 0.5 + 0.25 * i;
        // The closed form the module must reproduce.
        const double expr = E0 * r * (0.5 * std::log(r / r0) - 0.25);
        worst_expr = std::max(worst_expr, std::abs(field.value(r) - expr));
        // Independent Gauss-law quadrature of the enclosed charge.
        const auto enclosed = integrate(
            [&](double s) { return s <= 0.0 ? 0.0 : density.value(s) * s; }, 0.0, r, qopts);
        worst_gauss = std::max(worst_gauss, std::abs(field.value(r) - enclosed.value / r));
        // Inverse: rho = dE_r/dr + E_r/r with a central-difference derivative.
        const double h = 1e-5 * r;
        const double slope = (field.value(r + h) - field.value(r - h)) / (2.0 * h);
        const double recovered = slope + field.value(r) / r;
        worst_inverse = std::max(worst_inverse, rel_err(recovered, density.value(r)));
    }
    add(out, 5, "field matches the analytic Gauss-law form", worst_expr, 1e-12,
        "absolute residual, r in [0.5, 5]");
    add(out, 5, "field matches direct charge quadrature", worst_gauss, 1e-12,
        "absolute residual");
    add(out, 5, "Gauss-law inverse recovers the density", worst_inverse, 1e-6, "relative");
}

void check_structural_properties(std::vector<CheckResult>& out, const OracleSpectrum& oracle) {
    // Scaling: multiplying the linear strength by 8 scales every level by 4.
    {
        const WkbProblem base = s_wave(EffectivePotential::linear(1.0, 1.0));
        const WkbProblem scaled = s_wave(EffectivePotential::linear(8.0, 1.0));
        double worst = 0.0;
        for (int n = 1; n <= 6; ++n) {
            const double ratio =
                solve_level(scaled, n).energy / solve_level(base, n).energy;
            worst = std::max(worst, std::abs(ratio - 4.0));
        }
        add(out, 6, "linear preset strength scaling", worst, 1e-9,
            "|E_n(8 muQ)/E_n(muQ) - 4|, n = 1..6");
    }

    // Phase monotone in energy, on deterministic pseudo-random pairs.
    {
        const EffectivePotential presets[] = {
            EffectivePotential::linear(1.0, 1.0),
            EffectivePotential::cubic(1.0, 1.0),
            EffectivePotential::logarithmic(1.0, 1.0, 1.0),
            EffectivePotential::power_law(0.5, 2.0),
        };
        Lcg rng{0x9e3779b97f4a7c15ULL};
        int violations = 0;
        for (const auto& pot : presets) {
            const WkbProblem problem = s_wave(pot);
            const bool is_log = pot.kind() == PotentialKind::logarithmic;
            const double lo = is_log ? -2.0 : 0.05;
            const double hi = is_log ? 4.0 : 10.0;
            for (int trial = 0; trial < 8; ++trial) {
                double ea = lo + (hi - lo) * rng.uniform();
                double eb = lo + (hi - lo) * rng.uniform();
                if (ea > eb) std::swap(ea, eb);
                if (!(eb > ea)) continue;
                if (!(phase_integral(problem, eb).phase > phase_integral(problem, ea).phase))
                    ++violations;
            }
        }
        add(out, 6, "phase strictly increasing in energy", violations, 1.0,
            "violations over 8 random pairs per preset");
    }

    // Levels strictly increasing in n, every preset.
    {
        const EffectivePotential presets[] = {
            EffectivePotential::linear(1.0, 1.0),
            EffectivePotential::cubic(1.0, 1.0),
            EffectivePotential::logarithmic(1.0, 1.0, 1.0),
            EffectivePotential::power_law(0.5, 2.0),
        };
        int violations = 0;
        for (const auto& pot : presets) {
            const WkbProblem problem = s_wave(pot);
            double previous = -std::numeric_limits<double>::infinity();
            for (int n = 1; n <= 8; ++n) {
                const double energy = solve_level(problem, n).energy;
                if (!(energy > previous)) ++violations;
                previous = energy;
            }
        }
        add(out, 6, "levels strictly increasing in n", violations, 1.0,
            "four presets, n = 1..8");
    }

    // Eigensolver node counts: level n carries n - 1 interior nodes.
    {
        int mismatches = 0;
        for (std::size_t i = 0; i < oracle.node_counts.size(); ++i)
            if (oracle.node_counts[i] != static_cast<int>(i)) ++mismatches;
        add(out, 6, "eigensolver node counts equal n - 1", mismatches, 1.0,
            "linear preset, 10 levels");
    }

    // Log-level spacing (Q E0/2) ln((2n+1)/(2n-1)), independent of r0 and m.
    {
        struct Case {
            double E0, r0, Q, mass;
        };
        const Case cases[] = {{1.0, 1.0, 1.0, 1.0}, {0.7, 3.0, 2.0, 1.7}};
        double worst = 0.0;
        for (const Case& c : cases) {
            PhysicalParams params;
            params.mass = c.mass;
            WkbProblem problem{params, EffectivePotential::logarithmic(c.E0, c.r0, c.Q), 0, true,
                               0.5};
            const double strength = c.Q * c.E0;
            double previous = solve_level(problem, 1).energy;
            for (int n = 1; n <= 6; ++n) {
                const double next = solve_level(problem, n + 1).energy;
                const double predicted =
                    0.5 * strength * std::log((2.0 * n + 1.0) / (2.0 * n - 1.0));
                worst = std::max(worst, std::abs((next - previous) - predicted));
                previous = next;
            }
        }
        add(out, 6, "log-level spacing matches (Q E0/2) ln((2n+1)/(2n-1))", worst, 1e-9,
            "two parameter sets, absolute");
    }
}

void check_special_functions(std::vector<CheckResult>& out) {
    add(out, 7, "gamma(1/2) equals sqrt(pi)",
        std::abs(gamma_value(0.5) - std::sqrt(std::numbers::pi)), 1e-12, "absolute");

    QuadratureOptions qopts;
    qopts.rel_tol = 1e-13;
    // int_0^1 x^(-2/3) sqrt(1-x) dx after x = t^3, which removes the
    // algebraic endpoint singularity.
    const auto beta = integrate(
        [](double t) { return 3.0 * std::sqrt(std::max(0.0, 1.0 - t * t * t)); }, 0.0, 1.0,
        qopts);
    const double beta_ref = gamma_value(1.0 / 3.0) * gamma_value(1.5) / gamma_value(11.0 / 6.0);
    add(out, 7, "beta integral equals gamma(1/3) gamma(3/2) / gamma(11/6)",
        std::abs(beta.value - beta_ref), 1e-10, "absolute");

    // int_0^inf sqrt(x) e^(-x) dx after x = t^2; the tail beyond t = 9 is
    // below 1e-33.
    const auto halfline = integrate(
        [](double t) { return 2.0 * t * t * std::exp(-t * t); }, 0.0, 9.0, qopts);
    add(out, 7, "half-line sqrt-weight integral equals sqrt(pi)/2",
        std::abs(halfline.value - 0.5 * std::sqrt(std::numbers::pi)), 1e-10, "absolute");
}

}  // namespace

std::vector<CheckResult> run_verification() {
    std::vector<CheckResult> out;
    check_phase_agreement(out);
    check_spectra_vs_closed_forms(out);

    const auto oracle_start = clock_type::now();
    const OracleSpectrum oracle = linear_oracle_levels_10();
    const double oracle_seconds = seconds_since(oracle_start);
    check_oracle_benchmark(out, oracle);
    add(out, 3, "runtime seconds", oracle_seconds, 10.0, "shared eigensolver run");

    check_maslov_adjudication(out, oracle);
    check_electrostatics_round_trip(out);
    check_structural_properties(out, oracle);
    check_special_functions(out);
    return out;
}

bool all_passed(const std::vector<CheckResult>& checks) {
    for (const CheckResult& c : checks)
        if (!c.passed) return false;
    return !checks.empty();
}

std::string format_check(const CheckResult& check) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%s [criterion %d] %s: measured=%.3e threshold=%.3e",
                  check.passed ? "PASS" : "FAIL", check.criterion, check.name.c_str(),
                  check.measured, check.threshold);
    std::string line = buf;
    if (!check.detail.empty()) line += " (" + check.detail + ")";
    return line;
}

}  // namespace qwkb
