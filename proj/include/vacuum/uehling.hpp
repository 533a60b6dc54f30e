#pragma once

#include "vacuum/particles.hpp"
#include "vacuum/quadrature.hpp"

namespace vacuum {

/// One radius of the screened Coulomb potential of a static point charge.
/// Radii are in units of the reduced Compton wavelength of the lightest
/// species in the set.
struct PotentialSample {
    double r_over_lambda_c = 0.0;
    double phi = 0.0;                ///< V
    double correction_factor = 1.0;  ///< phi / (Q / (4 pi eps0 r))
    double correction = 0.0;         ///< correction_factor - 1, kept unrounded
    double abs_error_estimate = 0.0; ///< on correction
};

/// Momentum-space potential Q e / (|k|^2 eps(|k|^2)) of a static source, in V m^2
/// (the 1/(2 pi)^3 of the inverse transform is not included). kvec2 in 1/m^2.
/// Throws PoleError at kvec2 = 0.
double potential_kspace(double kvec2, const ParticleSet& set, double source_charge_e = 1.0);

/// Uehling-corrected potential from the inverse Fourier transform. The bare
/// Coulomb term is analytic; the correction
///   (2/pi) int_0^inf dkappa [-chi(kappa^2)] / kappa * sin(kappa rho)
/// uses 1/eps ~ (1 - chi) / eps0 and runs through the oscillatory kernel.
PotentialSample potential_rspace(double r_over_lambda_c, const ParticleSet& set,
                                 const quad::ToleranceSpec& tol = {1e-9, 0.0, 50000000},
                                 double source_charge_e = 1.0);

enum class AsymptoticRegime { small_r, large_r };

/// Validity windows of the closed-form branches.
inline constexpr double small_r_limit = 0.25;
inline constexpr double large_r_limit = 2.0;

/// Closed-form single-species branches:
///   small_r: 1 + (2 alpha / 3 pi) [ln(1/rho) - gamma - 5/6]      (rho < 0.25)
///   large_r: 1 + (alpha / (4 sqrt(pi))) e^{-2 rho} / rho^{3/2}     (rho > 2)
/// Throws DomainError outside the window.
PotentialSample potential_asymptotic(double r_over_lambda_c, AsymptoticRegime regime,
                                     double source_charge_e = 1.0);

}  // namespace vacuum
