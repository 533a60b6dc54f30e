#pragma once

#include <string>
#include <vector>

#include "vacuum/particles.hpp"
#include "vacuum/quadrature.hpp"

namespace vacuum {

// The pole scale is parameterised by the energy hbar Lambda_L c in eV. The
// *_log overloads take its natural logarithm so that scales beyond the range
// of a double remain usable.

/// eps0 = (1 / (12 pi^2 hbar c)) sum_s q_s^2 ln(Lambda_L^2 / (m_s c^2)^2).
/// Throws DomainError naming the first species at or above Lambda_L.
double epsilon0_from_landau(const ParticleSet& set, double lambda_l_ev);
double epsilon0_from_landau_log(const ParticleSet& set, double log_lambda_l_ev);

/// Correction factor that makes the oscillator estimate equal the pole
/// expression: f = (1 / 6 pi^2) * (charge-weighted mean of ln(Lambda_L^2 / m_s^2)).
double fudge_factor(const ParticleSet& set, double lambda_l_ev);
double fudge_factor_log(const ParticleSet& set, double log_lambda_l_ev);

struct SpeciesLog {
    std::string name;
    double log_ratio_sq;  ///< ln(Lambda_L^2 / (m_s c^2)^2)
};

struct LandauSolution {
    std::vector<SpeciesLog> lambda_l_tilde;
    double common_log_half = 0.0;    ///< charge-weighted mean of ln(Lambda_L / m_s c^2)
    double electron_log_half = 0.0;  ///< ln(Lambda_L / m_e c^2)
    double log_lambda_l_ev = 0.0;
    double f = 0.0;
    double eps0_out = 0.0;
    std::size_t evaluations = 0;
};

/// Solves epsilon0_from_landau(set, Lambda) = target_eps0 for Lambda by
/// bracketed root finding in ln(Lambda) on [ln m_max + 1, ln m_max + 2000].
LandauSolution solve_landau_pole(const ParticleSet& set, double target_eps0,
                                 const quad::ToleranceSpec& tol = {1e-15, 0.0, 500});

/// Populates the solution record at a given ln(Lambda_L / eV).
LandauSolution landau_record(const ParticleSet& set, double log_lambda_l_ev);

/// (max - min) / min of the per-species logs ln(Lambda^2 / m_s^2).
double log_relative_spread(const ParticleSet& set, double log_lambda_l_ev);

}  // namespace vacuum
