#include "qwkb/electrostatics.hpp"

#include <cmath>
#include <stdexcept>

#include "qwkb/errors.hpp"

namespace qwkb {

ChargeDensityProfile ChargeDensityProfile::power_law(double c, double p) {
    if (!(c > 0.0)) throw std::invalid_argument("ChargeDensityProfile: c must be > 0");
    if (!(p >= 0.0)) throw std::invalid_argument("ChargeDensityProfile: p must be >= 0");
    return ChargeDensityProfile(DensityKind::power_law, c, p, 0.0);
}

ChargeDensityProfile ChargeDensityProfile::logarithmic(double E0, double r0) {
    if (!(E0 > 0.0)) throw std::invalid_argument("ChargeDensityProfile: E0 must be > 0");
    if (!(r0 > 0.0)) throw std::invalid_argument("ChargeDensityProfile: r0 must be > 0");
    return ChargeDensityProfile(DensityKind::logarithmic, E0, 0.0, r0);
}

double ChargeDensityProfile::value(double r) const {
    if (!(r > 0.0)) throw std::domain_error("ChargeDensityProfile: r must be > 0");
    if (kind_ == DensityKind::power_law) return c_ * std::pow(r, p_);
    return c_ * std::log(r / r0_);
}

double ChargeDensityProfile::exponent() const {
    if (kind_ != DensityKind::power_law)
        throw std::logic_error("ChargeDensityProfile::exponent: power-law profiles only");
    return p_;
}

double ChargeDensityProfile::inner_radius() const {
    if (kind_ != DensityKind::logarithmic)
        throw std::logic_error("ChargeDensityProfile::inner_radius: logarithmic profiles only");
    return r0_;
}

double RadialField::value(double r) const {
    if (!(r > 0.0)) throw std::domain_error("RadialField: r must be > 0");
    if (source_.kind() == DensityKind::power_law) {
        // (1/r) int_0^r c s^{p+1} ds = c r^{p+1} / (p + 2)
        const double p = source_.exponent();
        return source_.coefficient() * std::pow(r, p + 1.0) / (p + 2.0);
    }
    // (1/r) int_0^r E0 ln(s/r0) s ds = E0 r [ ln(r/r0)/2 - 1/4 ]
    const double x = r / source_.inner_radius();
    return source_.coefficient() * r * (0.5 * std::log(x) - 0.25);
}

double RadialField::derivative(double r) const {
    if (!(r > 0.0)) throw std::domain_error("RadialField: r must be > 0");
    return source_.value(r) - value(r) / r;
}

RadialField field_from_density(const ChargeDensityProfile& profile) {
    return RadialField(profile);
}

EffectivePotential quadrupole_coupling(const QuadrupoleTensor& tensor, const RadialField& field) {
    if (!tensor.diagonal())
        throw unsupported_configuration_error(
            "quadrupole_coupling: only diagonal tensors couple to a purely radial field");

    const ChargeDensityProfile& density = field.source();
    if (density.kind() == DensityKind::power_law) {
        // dE_r/dr = c (p+1) r^p / (p+2), so V = -q_rr c (p+1)/(p+2) r^p.
        const double p = density.exponent();
        const double strength = -tensor.q_rr * density.coefficient() * (p + 1.0) / (p + 2.0);
        if (p == 1.0)
            return EffectivePotential::unchecked(PotentialKind::linear, strength, 0.0, 1.0);
        if (p == 3.0)
            return EffectivePotential::unchecked(PotentialKind::cubic, strength, 0.0, 3.0);
        return EffectivePotential::unchecked(PotentialKind::power_law, strength, 0.0, p);
    }

    // dE_r/dr = E0 [ ln(r/r0)/2 + 1/4 ], so
    // V = (s/2) [ ln(r/r0) + 1/2 ] = (s/2) [ ln(r/(r0 e^{-1})) - 1/2 ],
    // i.e. a logarithmic preset with inner radius r0 / e.
    const double strength = -tensor.q_rr * density.coefficient();
    const double shifted_r0 = density.inner_radius() * std::exp(-1.0);
    return EffectivePotential::unchecked(PotentialKind::logarithmic, strength, shifted_r0, 0.0);
}

}  // namespace qwkb
