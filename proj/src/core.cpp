#include "qwkb/core.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace qwkb {

void PhysicalParams::validate() const {
    if (!(hbar > 0.0)) throw std::invalid_argument("PhysicalParams: hbar must be > 0");
    if (!(mass > 0.0)) throw std::invalid_argument("PhysicalParams: mass must be > 0");
    if (!(energy_unit > 0.0) || !(length_unit > 0.0))
        throw std::invalid_argument("PhysicalParams: unit scale factors must be > 0");
    if (!std::isfinite(k)) throw std::invalid_argument("PhysicalParams: k must be finite");
}

double axial_shift(const PhysicalParams& params, double radial_energy) {
    return radial_energy + params.hbar * params.hbar * params.k * params.k / (2.0 * params.mass);
}

QuadrupoleTensor QuadrupoleTensor::axial(double Q) {
    if (!(Q > 0.0)) throw std::invalid_argument("QuadrupoleTensor::axial: Q must be > 0");
    QuadrupoleTensor t;
    t.q_rr = -Q;
    t.q_phiphi = -Q;
    t.q_zz = 2.0 * Q;
    return t;
}

namespace {

void require_positive(double value, const char* name) {
    if (!(value > 0.0))
        throw std::invalid_argument(std::string("preset_potential: ") + name + " must be > 0");
}

}  // namespace

EffectivePotential EffectivePotential::linear(double mu, double Q) {
    require_positive(mu, "mu");
    require_positive(Q, "Q");
    return EffectivePotential(PotentialKind::linear, Q * mu, 0.0, 1.0);
}

EffectivePotential EffectivePotential::cubic(double nu, double Q) {
    require_positive(nu, "nu");
    require_positive(Q, "Q");
    return EffectivePotential(PotentialKind::cubic, Q * nu, 0.0, 3.0);
}

EffectivePotential EffectivePotential::logarithmic(double E0, double r0, double Q) {
    require_positive(E0, "E0");
    require_positive(Q, "Q");
    if (!(r0 > 0.0))
        throw std::invalid_argument("preset_potential: logarithmic requires r0 > 0");
    return EffectivePotential(PotentialKind::logarithmic, Q * E0, r0, 0.0);
}

EffectivePotential EffectivePotential::power_law(double A, double p) {
    require_positive(A, "A");
    if (!(p >= 0.0)) throw std::invalid_argument("preset_potential: p must be >= 0");
    return EffectivePotential(PotentialKind::power_law, A, 0.0, p);
}

EffectivePotential EffectivePotential::unchecked(PotentialKind kind, double c, double r0,
                                                 double p) {
    return EffectivePotential(kind, c, r0, p);
}

double EffectivePotential::value(double r) const {
    switch (kind_) {
        case PotentialKind::linear:
            return c_ * r;
        case PotentialKind::cubic:
            return c_ * r * r * r;
        case PotentialKind::logarithmic:
            return 0.5 * c_ * (std::log(r / r0_) - 0.5);
        case PotentialKind::power_law:
            return c_ * std::pow(r, p_);
    }
    return 0.0;
}

double EffectivePotential::derivative(double r) const {
    if (!(r > 0.0)) throw std::domain_error("EffectivePotential::derivative: r must be > 0");
    switch (kind_) {
        case PotentialKind::linear:
            return c_;
        case PotentialKind::cubic:
            return 3.0 * c_ * r * r;
        case PotentialKind::logarithmic:
            return 0.5 * c_ / r;
        case PotentialKind::power_law:
            return p_ == 0.0 ? 0.0 : c_ * p_ * std::pow(r, p_ - 1.0);
    }
    return 0.0;
}

double EffectivePotential::inner_radius() const {
    if (kind_ != PotentialKind::logarithmic)
        throw std::logic_error("EffectivePotential::inner_radius: logarithmic preset only");
    return r0_;
}

double EffectivePotential::exponent() const {
    switch (kind_) {
        case PotentialKind::linear:
            return 1.0;
        case PotentialKind::cubic:
            return 3.0;
        case PotentialKind::power_law:
            return p_;
        case PotentialKind::logarithmic:
            throw std::logic_error("EffectivePotential::exponent: not a power-family preset");
    }
    return 0.0;
}

double EffectivePotential::shifted_energy(double energy) const {
    if (kind_ != PotentialKind::logarithmic)
        throw std::logic_error("EffectivePotential::shifted_energy: logarithmic preset only");
    return energy + 0.25 * c_;
}

bool EffectivePotential::confining() const {
    switch (kind_) {
        case PotentialKind::linear:
        case PotentialKind::cubic:
            return c_ > 0.0;
        case PotentialKind::logarithmic:
            return c_ > 0.0;
        case PotentialKind::power_law:
            return c_ > 0.0 && p_ > 0.0;
    }
    return false;
}

double EffectivePotential::inf_value() const {
    if (kind_ == PotentialKind::logarithmic)
        return -std::numeric_limits<double>::infinity();
    return 0.0;
}

EffectivePotential preset_potential(PotentialKind kind, std::span<const double> constants,
                                    double Q) {
    auto need = [&](std::size_t count) {
        if (constants.size() != count)
            throw std::invalid_argument("preset_potential: wrong number of constants");
    };
    switch (kind) {
        case PotentialKind::linear:
            need(1);
            return EffectivePotential::linear(constants[0], Q);
        case PotentialKind::cubic:
            need(1);
            return EffectivePotential::cubic(constants[0], Q);
        case PotentialKind::logarithmic:
            need(2);
            return EffectivePotential::logarithmic(constants[0], constants[1], Q);
        case PotentialKind::power_law:
            need(2);
            return EffectivePotential::power_law(constants[0], constants[1]);
    }
    throw std::invalid_argument("preset_potential: unknown kind");
}

double potential_derivative(const EffectivePotential& potential, double r) {
    return potential.derivative(r);
}

double WkbProblem::centrifugal_coefficient() const {
    const double l2 = static_cast<double>(l) * static_cast<double>(l);
    return langer_modified ? l2 : l2 - 0.25;
}

void WkbProblem::validate() const {
    params.validate();
    if (l < 0) throw std::invalid_argument("WkbProblem: l must be >= 0 (store |l|)");
    if (!(maslov > 0.0 && maslov < 1.0))
        throw std::invalid_argument("WkbProblem: maslov must lie in (0, 1)");
}

}  // namespace qwkb
