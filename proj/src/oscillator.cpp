#include "vacuum/oscillator.hpp"

#include "vacuum/constants.hpp"
#include "vacuum/errors.hpp"

namespace vacuum {

double induced_dipole(double mass_ev, double field) {
    if (!(mass_ev > 0.0)) throw DomainError("induced_dipole: mass must be positive");
    const auto& pc = constants();
    const double m = pc.mass_from_rest_energy(mass_ev);
    const double omega = 2.0 * mass_ev * pc.e / pc.hbar;
    const double reduced_mass = 0.5 * m;
    const double displacement = pc.e * field / (reduced_mass * omega * omega);
    return pc.e * displacement;
}

double polarization_density(double mass_ev, double field) {
    const double lambda_c = constants().compton_wavelength(mass_ev);
    return induced_dipole(mass_ev, field) / (lambda_c * lambda_c * lambda_c);
}

OscillatorEstimate epsilon0_oscillator(const ParticleSet& set, double f) {
    if (!(f > 0.0)) throw DomainError("epsilon0_oscillator: f must be positive");
    const auto& pc = constants();
    const double eps = f * pc.e * pc.e * charge_square_sum(set) / (2.0 * pc.hbar * pc.c);
    return {eps, eps / pc.eps0_ref, f};
}

}  // namespace vacuum
