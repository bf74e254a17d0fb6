#include "qwkb/closed_form.hpp"

#include <cmath>
#include <stdexcept>

#include "qwkb/errors.hpp"

namespace qwkb {

namespace {

// Lanczos coefficients for ln Gamma, g = 607/128, 14 terms.
double log_gamma(double x) {
    static const double coeff[14] = {
        57.1562356658629235,     -59.5979603554754912,    14.1360979747417471,
        -0.491913816097620199,   0.339946499848118887e-4, 0.465236289270485756e-4,
        -0.983744753048795646e-4, 0.158088703224912494e-3, -0.210264441724104883e-3,
        0.217439618115212643e-3, -0.164318106536763890e-3, 0.844182239838527433e-4,
        -0.261908384015814087e-4, 0.368991826595316234e-5};
    double y = x;
    double tmp = x + 5.24218750000000000;  // x + g + 1/2
    tmp = (x + 0.5) * std::log(tmp) - tmp;
    double ser = 0.999999999999997092;
    for (const double c : coeff) ser += c / ++y;
    return tmp + std::log(2.5066282746310005 * ser / x);
}

void check_level(int n) {
    if (n < 1) throw std::invalid_argument("closed form: n must be >= 1");
}

void check_strength(double c, const char* name) {
    if (!(c > 0.0)) throw std::invalid_argument(std::string("closed form: ") + name + " must be > 0");
}

}  // namespace

double gamma_value(double x) {
    if (!(x > 0.0)) throw std::domain_error("gamma_value: requires x > 0");
    return std::exp(log_gamma(x));
}

double linear_energy(int n, const PhysicalParams& params, double muQ, double maslov) {
    check_level(n);
    check_strength(muQ, "muQ");
    params.validate();
    const double shifted = n - maslov;
    const double num = 9.0 * params.hbar * params.hbar * M_PI * M_PI * shifted * shifted;
    return muQ * std::cbrt(num / (8.0 * params.mass * muQ));
}

double cubic_energy(int n, const PhysicalParams& params, double nuQ, double maslov) {
    check_level(n);
    check_strength(nuQ, "nuQ");
    params.validate();
    const double base = 6.0 * params.hbar * (n - maslov) * std::sqrt(M_PI / (2.0 * params.mass)) *
                        std::cbrt(nuQ) * gamma_value(11.0 / 6.0) / gamma_value(1.0 / 3.0);
    return std::pow(base, 1.2);
}

double log_energy(int n, const PhysicalParams& params, double QE0, double r0, LogVariant variant,
                  double maslov) {
    check_level(n);
    check_strength(QE0, "QE0");
    if (!(r0 > 0.0)) throw std::invalid_argument("closed form: r0 must be > 0");
    params.validate();
    const double factor = variant == LogVariant::rederived ? 2.0 : 1.0;
    const double arg = factor * params.hbar / r0 * std::sqrt(M_PI / (QE0 * params.mass)) *
                       (n - maslov);
    return 0.5 * QE0 * std::log(arg) - 0.25 * QE0;
}

double analytic_phase(const EffectivePotential& potential, const PhysicalParams& params,
                      double energy) {
    params.validate();
    const double hbar = params.hbar;
    const double m = params.mass;
    const double c = potential.strength();
    switch (potential.kind()) {
        case PotentialKind::linear: {
            if (!(energy >= 0.0)) throw no_bound_region_error("analytic_phase: E below inf V");
            const double r2 = energy / c;
            return 2.0 / (3.0 * hbar) * std::sqrt(2.0 * m * c) * std::pow(r2, 1.5);
        }
        case PotentialKind::cubic: {
            if (!(energy >= 0.0)) throw no_bound_region_error("analytic_phase: E below inf V");
            return std::sqrt(2.0 * m * M_PI) / (6.0 * hbar) / std::cbrt(c) *
                   gamma_value(1.0 / 3.0) / gamma_value(11.0 / 6.0) * std::pow(energy, 5.0 / 6.0);
        }
        case PotentialKind::logarithmic: {
            const double shifted = potential.shifted_energy(energy);
            const double r2 = potential.inner_radius() * std::exp(2.0 * shifted / c);
            return r2 / hbar * std::sqrt(m * c) * 0.5 * std::sqrt(M_PI);
        }
        case PotentialKind::power_law:
            throw unsupported_configuration_error(
                "analytic_phase: no closed form for general power-law presets");
    }
    throw std::invalid_argument("analytic_phase: unknown preset");
}

double closed_form_energy(const WkbProblem& problem, int n, LogVariant variant) {
    problem.validate();
    if (problem.l != 0)
        throw unsupported_configuration_error("closed_form_energy: closed forms exist for l = 0 only");
    const EffectivePotential& pot = problem.potential;
    switch (pot.kind()) {
        case PotentialKind::linear:
            return linear_energy(n, problem.params, pot.strength(), problem.maslov);
        case PotentialKind::cubic:
            return cubic_energy(n, problem.params, pot.strength(), problem.maslov);
        case PotentialKind::logarithmic:
            return log_energy(n, problem.params, pot.strength(), pot.inner_radius(), variant,
                              problem.maslov);
        case PotentialKind::power_law:
            throw unsupported_configuration_error(
                "closed_form_energy: no closed form for general power-law presets");
    }
    throw std::invalid_argument("closed_form_energy: unknown preset");
}

}  // namespace qwkb
