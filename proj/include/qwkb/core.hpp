#pragma once

#include <span>

namespace qwkb {

/// Particle-frame constants. All solvers run in whatever units these carry;
/// the defaults give the reduced system hbar = m = 1, k = 0. The unit factors
/// exist so a caller can rescale inputs/outputs without touching the solvers.
struct PhysicalParams {
    double hbar = 1.0;
    double mass = 1.0;
    double k = 0.0;  ///< axial wavenumber (eigenvalue of the z momentum / hbar)
    double energy_unit = 1.0;
    double length_unit = 1.0;

    void validate() const;  ///< throws std::invalid_argument on bad constants
};

/// radial_energy + hbar^2 k^2 / (2m); the identity when k = 0.
double axial_shift(const PhysicalParams& params, double radial_energy);

/// Symmetric traceless quadrupole tensor in cylindrical components.
/// Off-diagonal entries are carried only so couplings can reject them;
/// every preset in this library is diagonal.
struct QuadrupoleTensor {
    double q_rr = 0.0;
    double q_phiphi = 0.0;
    double q_zz = 0.0;
    double q_rphi = 0.0;
    double q_rz = 0.0;
    double q_phiz = 0.0;

    /// The axially symmetric preset q_rr = q_phiphi = -Q, q_zz = 2Q with Q > 0.
    static QuadrupoleTensor axial(double Q);

    double trace() const { return q_rr + q_phiphi + q_zz; }
    bool diagonal() const { return q_rphi == 0.0 && q_rz == 0.0 && q_phiz == 0.0; }
};

enum class PotentialKind { linear, cubic, logarithmic, power_law };

/// Radial effective potential presets:
///
///   linear       V(r) = c r            (c = Q mu)
///   cubic        V(r) = c r^3          (c = Q nu)
///   logarithmic  V(r) = (c/2) [ln(r/r0) - 1/2]   (c = Q E0)
///   power_law    V(r) = c r^p          (c = A, quadrupole constant folded in)
///
/// The quadrupole constant is folded into the stored strength at
/// construction, so evaluation never needs the tensor again.
class EffectivePotential {
public:
    static EffectivePotential linear(double mu, double Q);
    static EffectivePotential cubic(double nu, double Q);
    static EffectivePotential logarithmic(double E0, double r0, double Q);
    static EffectivePotential power_law(double A, double p);

    double value(double r) const;

    /// Analytic dV/dr; throws std::domain_error for r <= 0.
    double derivative(double r) const;

    PotentialKind kind() const { return kind_; }

    /// Folded strength constant: Q mu, Q nu, Q E0 or A depending on the kind.
    double strength() const { return c_; }

    /// Inner radius r0 (logarithmic preset only).
    double inner_radius() const;

    /// Exponent p (power_law only; linear and cubic report 1 and 3).
    double exponent() const;

    /// Logarithmic preset only: the shifted energy Ebar = E + Q E0 / 4.
    double shifted_energy(double energy) const;

    /// True when V grows without bound as r -> infinity.
    bool confining() const;

    /// Infimum of V on r > 0 (0 for the power family, -inf for logarithmic).
    double inf_value() const;

    /// Internal factory that skips positivity validation; used by
    /// quadrupole_coupling, which may legitimately produce zero or negative
    /// strengths (null or sign-flipped tensors).
    static EffectivePotential unchecked(PotentialKind kind, double c, double r0, double p);

private:
    EffectivePotential(PotentialKind kind, double c, double r0, double p)
        : kind_(kind), c_(c), r0_(r0), p_(p) {}

    PotentialKind kind_;
    double c_;   // folded strength
    double r0_;  // logarithmic only
    double p_;   // power_law only
};

/// Builds a preset from a raw constant list, folding Q in:
///   linear: {mu}, cubic: {nu}, logarithmic: {E0, r0}, power_law: {A, p}.
/// power_law ignores Q (the caller folds it into A).
EffectivePotential preset_potential(PotentialKind kind, std::span<const double> constants,
                                    double Q);

/// Free-function form of EffectivePotential::derivative.
double potential_derivative(const EffectivePotential& potential, double r);

/// A fully specified quantization task.
struct WkbProblem {
    PhysicalParams params;
    EffectivePotential potential;
    int l = 0;                   ///< |l|; spectra depend on l^2 only
    bool langer_modified = true;
    double maslov = 0.5;         ///< subtracted phase fraction in (0, 1)

    /// Coefficient L multiplying hbar^2/r^2 in the local momentum:
    /// l^2 with the Langer replacement, l^2 - 1/4 without it.
    double centrifugal_coefficient() const;

    void validate() const;  ///< throws std::invalid_argument on bad fields
};

}  // namespace qwkb
