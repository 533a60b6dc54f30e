#pragma once

namespace vacuum {

/// SI reference values (CODATA 2018). Immutable; obtain through constants().
struct PhysicalConstants {
    double hbar;                  ///< J s
    double c;                     ///< m / s
    double e;                     ///< C
    double eps0_ref;              ///< F / m
    double alpha;                 ///< dimensionless
    double m_e;                   ///< kg
    double electron_rest_energy;  ///< eV

    /// Permeability implied by eps0 mu0 c^2 = 1.
    constexpr double mu0_ref() const { return 1.0 / (eps0_ref * c * c); }
    /// Reduced Compton wavelength hbar / (m c) for a rest energy in eV.
    double compton_wavelength(double rest_energy_ev) const;
    /// Rest energy in eV -> mass in kg.
    constexpr double mass_from_rest_energy(double rest_energy_ev) const {
        return rest_energy_ev * e / (c * c);
    }
};

const PhysicalConstants& constants();

enum class MomentumKind { spacelike, timelike };

/// hbar^2 |k^2| / (m^2 c^2) with the sign of the Minkowski invariant
/// k^2 = omega^2/c^2 - |k|^2 carried separately. k^2 = 0 is tagged spacelike.
struct DimensionlessMomentum {
    double q2;
    MomentumKind kind;
    double species_mass;  ///< kg
};

/// Signed k^2 in 1/m^2 (negative for spacelike) -> dimensionless form.
/// Throws DomainError for a non-positive mass.
DimensionlessMomentum to_dimensionless(double k_squared, double mass_kg);
/// Inverse of to_dimensionless; returns the signed k^2 in 1/m^2.
double from_dimensionless(const DimensionlessMomentum& q);

}  // namespace vacuum
