#pragma once

#include "qwkb/core.hpp"

namespace qwkb {

enum class DensityKind { power_law, logarithmic };

/// Volume charge density inside the cylinder:
///   power_law    rho(r) = c r^p
///   logarithmic  rho(r) = E0 ln(r / r0)
class ChargeDensityProfile {
public:
    static ChargeDensityProfile power_law(double c, double p);
    static ChargeDensityProfile logarithmic(double E0, double r0);

    double value(double r) const;

    DensityKind kind() const { return kind_; }
    double coefficient() const { return c_; }  ///< c or E0
    double exponent() const;                   ///< p (power_law only)
    double inner_radius() const;               ///< r0 (logarithmic only)

private:
    ChargeDensityProfile(DensityKind kind, double c, double p, double r0)
        : kind_(kind), c_(c), p_(p), r0_(r0) {}

    DensityKind kind_;
    double c_;
    double p_;
    double r0_;
};

/// Radial electric field from Gauss's law with unit normalization,
///   E_r(r) = (1/r) int_0^r rho(s) s ds,
/// evaluated in closed form for both density presets. The derivative is the
/// identity dE_r/dr = rho(r) - E_r(r)/r, which is what makes the Gauss-law
/// round-trip checkable.
class RadialField {
public:
    explicit RadialField(ChargeDensityProfile source) : source_(source) {}

    double value(double r) const;       ///< E_r(r); domain error for r <= 0
    double derivative(double r) const;  ///< dE_r/dr; domain error for r <= 0

    const ChargeDensityProfile& source() const { return source_; }

private:
    ChargeDensityProfile source_;
};

RadialField field_from_density(const ChargeDensityProfile& profile);

/// Contracts a diagonal quadrupole tensor with a radial field:
///   V(r) = -q_rr dE_r/dr.
/// For the axial tensor and the p = 1 field this gives the linear preset
/// exactly; the cubic and logarithmic fields map onto presets up to constant
/// factors (strength 2 Q nu, and inner radius r0/e respectively), which the
/// field report surfaces side by side with the canonical presets.
EffectivePotential quadrupole_coupling(const QuadrupoleTensor& tensor, const RadialField& field);

}  // namespace qwkb
