#pragma once

#include <string>
#include <utility>
#include <vector>

#include "vacuum/constants.hpp"
#include "vacuum/particles.hpp"
#include "vacuum/quadrature.hpp"

namespace vacuum {

/// Tolerance used by the susceptibility integrals unless the caller overrides it.
inline constexpr quad::ToleranceSpec susceptibility_tolerance{1e-13, 0.0, 2000000};

struct SusceptibilityResult {
    double chi = 0.0;
    double abs_error_estimate = 0.0;
    DimensionlessMomentum argument{};
    Spin spin = Spin::half;
};

/// Feynman-parameter weight: x(1-x) for spin 1/2, (1 - 2x^2)/8 for spin 0.
double feynman_weight(Spin spin, double x);

/// exp(5/3), the scale that appears in the large-argument logarithm.
double asymptotic_scale();

/// Susceptibility with a hard momentum cutoff, per unit charge:
///   chi = 8 pi alpha int_0^1 dx w(x) int^Lambda d^3p/(2pi)^3 [p^2 + M^2 + x(1-x) Q^2]^{-3/2}
/// with the radial integral done numerically inside the Feynman-parameter
/// integral. q2 = hbar^2 Q^2 / (m c)^2 is spacelike, lambda_tilde = hbar Lambda / (m c) > 10.
SusceptibilityResult chi_cutoff(double q2, double lambda_tilde, Spin spin,
                                const quad::ToleranceSpec& tol = susceptibility_tolerance);

/// On-shell subtracted susceptibility, -(2 alpha / pi) int_0^1 w(x) ln(1 + x(1-x) q2) dx.
/// Exactly zero at q2 = 0; throws DomainError for q2 < 0.
SusceptibilityResult chi_regularized(double q2, Spin spin = Spin::half,
                                     const quad::ToleranceSpec& tol = susceptibility_tolerance);

/// Large-q2 limit -(alpha / 3 pi) ln(q2 / exp(5/3)); DomainError below exp(5/3).
double chi_asymptotic(double q2);

struct SpeciesArgument {
    std::string name;
    double q2;
};

struct RunningPermittivity {
    double eps = 0.0;  ///< F / m
    double mu = 0.0;   ///< H / m
    double chi_total = 0.0;
    double abs_error_estimate = 0.0;
    std::vector<SpeciesArgument> q2_per_species;
};

/// eps(k^2) = eps0 [1 + sum_s (q_s/e)^2 chi_s(q2_s)], mu = 1 / (eps c^2).
/// k_squared_si is the signed invariant in 1/m^2 and must be <= 0 (spacelike).
RunningPermittivity epsilon_running(double k_squared_si, const ParticleSet& set,
                                    const quad::ToleranceSpec& tol = susceptibility_tolerance);

/// Same, with the argument given as hbar^2 |k^2| / (m c)^2 for the lightest species of the set.
RunningPermittivity epsilon_running_reduced(double q2_lightest, const ParticleSet& set,
                                            const quad::ToleranceSpec& tol = susceptibility_tolerance);

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;
};

constexpr Vec3 operator*(double s, const Vec3& v) { return {s * v.x, s * v.y, s * v.z}; }

struct ConstitutiveFields {
    Vec3 D;  ///< C / m^2
    Vec3 H;  ///< A / m
};

/// D = eps(k^2) E and H = c^2 eps(k^2) B.
ConstitutiveFields constitutive(const Vec3& E, const Vec3& B, double k_squared_si, const ParticleSet& set,
                                const quad::ToleranceSpec& tol = susceptibility_tolerance);

}  // namespace vacuum
