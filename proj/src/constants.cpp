#include "vacuum/constants.hpp"

#include <numbers>

#include "vacuum/errors.hpp"

namespace vacuum {

namespace {

constexpr double planck_h = 6.62607015e-34;

constexpr PhysicalConstants codata2018{
    .hbar = planck_h / (2.0 * std::numbers::pi),
    .c = 299792458.0,
    .e = 1.602176634e-19,
    .eps0_ref = 8.8541878128e-12,
    .alpha = 1.0 / 137.035999084,
    .m_e = 9.1093837015e-31,
    .electron_rest_energy = 510998.95,
};

}  // namespace

const PhysicalConstants& constants() { return codata2018; }

double PhysicalConstants::compton_wavelength(double rest_energy_ev) const {
    return hbar * c / (rest_energy_ev * e);
}

DimensionlessMomentum to_dimensionless(double k_squared, double mass_kg) {
    if (!(mass_kg > 0.0)) throw DomainError("to_dimensionless: mass must be positive");
    const auto& pc = constants();
    const double inv_compton = mass_kg * pc.c / pc.hbar;
    const double q2 = (k_squared < 0.0 ? -k_squared : k_squared) / (inv_compton * inv_compton);
    return {q2, k_squared > 0.0 ? MomentumKind::timelike : MomentumKind::spacelike, mass_kg};
}

double from_dimensionless(const DimensionlessMomentum& q) {
    if (!(q.species_mass > 0.0)) throw DomainError("from_dimensionless: mass must be positive");
    const auto& pc = constants();
    const double inv_compton = q.species_mass * pc.c / pc.hbar;
    const double magnitude = q.q2 * inv_compton * inv_compton;
    return q.kind == MomentumKind::timelike ? magnitude : -magnitude;
}

}  // namespace vacuum
