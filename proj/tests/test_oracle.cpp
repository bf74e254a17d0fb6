#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "qwkb/core.hpp"
#include "qwkb/errors.hpp"
#include "qwkb/oracle.hpp"

using namespace qwkb;

namespace {

WkbProblem linear_s_wave() {
    return WkbProblem{PhysicalParams{}, EffectivePotential::linear(1.0, 1.0), 0, true, 0.5};
}

/// Independent re-derivation of the Airy zeros: integrate Ai'' = x Ai from
/// x = 0 leftward with classical RK4 starting at the frozen series values
/// Ai(0) = 3^{-2/3}/Gamma(2/3), Ai'(0) = -3^{-1/3}/Gamma(1/3), then polish
/// each bracketed sign change with Newton steps using the ODE derivative.
std::vector<double> airy_zeros_by_ode(int count) {
    constexpr double kAi0 = 0.35502805388781723926;
    constexpr double kAip0 = -0.25881940379280679841;

    struct State {
        double x, ai, aip;
    };
    auto rk4_step = [](State s, double h) {
        auto f = [](const State& t) { return std::pair<double, double>{t.aip, t.x * t.ai}; };
        const auto k1 = f(s);
        const auto k2 = f({s.x + 0.5 * h, s.ai + 0.5 * h * k1.first, s.aip + 0.5 * h * k1.second});
        const auto k3 = f({s.x + 0.5 * h, s.ai + 0.5 * h * k2.first, s.aip + 0.5 * h * k2.second});
        const auto k4 = f({s.x + h, s.ai + h * k3.first, s.aip + h * k3.second});
        s.ai += h / 6.0 * (k1.first + 2.0 * k2.first + 2.0 * k3.first + k4.first);
        s.aip += h / 6.0 * (k1.second + 2.0 * k2.second + 2.0 * k3.second + k4.second);
        s.x += h;
        return s;
    };
    auto value_at = [&](double x) {
        State s{0.0, kAi0, kAip0};
        const int steps = 20000;
        const double h = x / steps;  // x < 0, so h < 0
        for (int i = 0; i < steps; ++i) s = rk4_step(s, h);
        return s;
    };

    std::vector<double> zeros;
    State s{0.0, kAi0, kAip0};
    const double h = -1e-4;
    double prev_x = 0.0, prev_ai = kAi0;
    while (static_cast<int>(zeros.size()) < count && s.x > -16.0) {
        s = rk4_step(s, h);
        if (prev_ai * s.ai < 0.0) {
            // Newton polish from the bracket midpoint; the ODE solve from 0
            // is re-run per iterate so the polish inherits RK4 accuracy.
            double x = 0.5 * (prev_x + s.x);
            for (int it = 0; it < 4; ++it) {
                const State at = value_at(x);
                x -= at.ai / at.aip;
            }
            zeros.push_back(-x);  // store |a_n|
        }
        prev_x = s.x;
        prev_ai = s.ai;
    }
    return zeros;
}

}  // namespace

TEST_CASE("airy reference matches an independent ODE re-derivation") {
    const PhysicalParams params;
    const std::vector<double> zeros = airy_zeros_by_ode(5);
    REQUIRE(zeros.size() == 5);
    for (int n = 1; n <= 5; ++n) {
        // In reduced units with muQ = 1 the level is |a_n| 2^{-1/3}.
        const double expected = zeros[static_cast<std::size_t>(n - 1)] * std::pow(2.0, -1.0 / 3.0);
        CHECK(airy_reference_linear(n, params, 1.0) ==
              doctest::Approx(expected).epsilon(1e-10));
    }
    CHECK(airy_reference_linear(1, params, 1.0) ==
          doctest::Approx(1.855757081489238).epsilon(1e-14));
    CHECK_THROWS_AS(airy_reference_linear(0, params, 1.0), std::out_of_range);
    CHECK_THROWS_AS(airy_reference_linear(11, params, 1.0), std::out_of_range);
}

TEST_CASE("airy reference carries the (hbar^2 c^2 / 2m)^(1/3) scaling") {
    PhysicalParams params;
    params.mass = 2.0;
    params.hbar = 3.0;
    // |a_1| (hbar^2 (muQ)^2 / 2m)^(1/3) with hbar = 3, m = 2, muQ = 5.
    const double expected = 2.338107410459766999 * std::cbrt(9.0 * 25.0 / 4.0);
    CHECK(airy_reference_linear(1, params, 5.0) == doctest::Approx(expected).epsilon(1e-13));
}

TEST_CASE("eigensolver reproduces the dirichlet half-oscillator exactly known levels") {
    // V = r^2/2 on r > 0 with u(0) = 0: odd harmonic-oscillator states,
    // E_k = 2k - 1/2.
    const WkbProblem problem{PhysicalParams{}, EffectivePotential::power_law(0.5, 2.0), 0,
                             true, 0.5};
    OracleConfig config;
    config.levels = 3;
    config.grid_points = 3000;
    const OracleSpectrum spectrum = exact_spectrum(problem, config);
    REQUIRE(spectrum.eigenvalues.size() == 3);
    CHECK(spectrum.eigenvalues[0] == doctest::Approx(1.5).epsilon(1e-7));
    CHECK(spectrum.eigenvalues[1] == doctest::Approx(3.5).epsilon(1e-7));
    CHECK(spectrum.eigenvalues[2] == doctest::Approx(5.5).epsilon(1e-7));
}

TEST_CASE("eigensolver metadata: ordering, node counts, convergence, grids") {
    OracleConfig config;
    config.levels = 6;
    const OracleSpectrum spectrum = exact_spectrum(linear_s_wave(), config);

    REQUIRE(spectrum.eigenvalues.size() == 6);
    for (std::size_t i = 1; i < spectrum.eigenvalues.size(); ++i)
        CHECK(spectrum.eigenvalues[i] > spectrum.eigenvalues[i - 1]);

    REQUIRE(spectrum.node_counts.size() == 6);
    for (std::size_t i = 0; i < spectrum.node_counts.size(); ++i)
        CHECK(spectrum.node_counts[i] == static_cast<int>(i));

    REQUIRE(spectrum.grid_sizes.size() == 2);
    CHECK(spectrum.grid_sizes[1] == 2 * spectrum.grid_sizes[0] + 1);  // h exactly halved
    REQUIRE(spectrum.grid_eigenvalues.size() == 2);

    for (double estimate : spectrum.convergence_estimate) CHECK(estimate < 1e-5);
    CHECK(spectrum.r_max > 0.0);
}

TEST_CASE("grid refinement converges at second order toward the airy benchmark") {
    const PhysicalParams params;
    OracleConfig config;
    config.levels = 3;
    const OracleSpectrum spectrum = exact_spectrum(linear_s_wave(), config);
    for (int n = 1; n <= 3; ++n) {
        const double exact = airy_reference_linear(n, params, 1.0);
        const double coarse =
            spectrum.grid_eigenvalues[0][static_cast<std::size_t>(n - 1)];
        const double fine = spectrum.grid_eigenvalues[1][static_cast<std::size_t>(n - 1)];
        const double ratio = std::abs(coarse - exact) / std::abs(fine - exact);
        CHECK(ratio > 3.5);
        CHECK(ratio < 4.5);
        // Extrapolation beats both raw grids by a wide margin.
        CHECK(std::abs(spectrum.eigenvalues[static_cast<std::size_t>(n - 1)] - exact) <
              0.02 * std::abs(fine - exact));
    }
}

TEST_CASE("spectrum is insensitive to the domain inflation factor") {
    OracleConfig narrow;
    narrow.levels = 4;
    OracleConfig wide = narrow;
    wide.r_max_factor = 3.0;
    const OracleSpectrum a = exact_spectrum(linear_s_wave(), narrow);
    const OracleSpectrum b = exact_spectrum(linear_s_wave(), wide);
    for (std::size_t i = 0; i < 4; ++i) {
        const double rel =
            std::abs(a.eigenvalues[i] - b.eigenvalues[i]) / std::abs(a.eigenvalues[i]);
        CHECK(rel < 1e-7);
    }
}

TEST_CASE("eigensolver honors the langer flag on both sides") {
    // l = 1 with and without the Langer replacement are different operators
    // (L = 1 vs 3/4); the flags must agree explicitly.
    WkbProblem problem = linear_s_wave();
    problem.l = 1;
    problem.langer_modified = false;
    OracleConfig config;
    config.levels = 2;
    CHECK_THROWS_AS(exact_spectrum(problem, config), std::invalid_argument);

    config.langer_modified = false;
    const OracleSpectrum off = exact_spectrum(problem, config);
    problem.langer_modified = true;
    config.langer_modified = true;
    const OracleSpectrum on = exact_spectrum(problem, config);
    // Smaller centrifugal coefficient, lower levels.
    CHECK(off.eigenvalues[0] < on.eigenvalues[0]);
}

TEST_CASE("eigensolver validates its configuration") {
    OracleConfig config;
    config.grid_points = 50;
    CHECK_THROWS_AS(exact_spectrum(linear_s_wave(), config), std::invalid_argument);

    config = OracleConfig{};
    config.r_max_factor = 1.0;
    CHECK_THROWS_AS(exact_spectrum(linear_s_wave(), config), std::invalid_argument);

    config = OracleConfig{};
    config.levels = 0;
    CHECK_THROWS_AS(exact_spectrum(linear_s_wave(), config), std::invalid_argument);

    config = OracleConfig{};
    config.levels = 2000;  // >= grid_points / 4
    CHECK_THROWS_AS(exact_spectrum(linear_s_wave(), config), std::invalid_argument);

    config = OracleConfig{};
    config.refinement_levels = 1;
    CHECK_THROWS_AS(exact_spectrum(linear_s_wave(), config), std::invalid_argument);

    const WkbProblem repulsive{PhysicalParams{},
                               EffectivePotential::unchecked(PotentialKind::linear, -1.0, 0.0,
                                                             1.0),
                               0, true, 0.5};
    config = OracleConfig{};
    CHECK_THROWS_AS(exact_spectrum(repulsive, config), std::invalid_argument);
}
