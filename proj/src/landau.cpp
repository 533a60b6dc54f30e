#include "vacuum/landau.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "vacuum/constants.hpp"
#include "vacuum/errors.hpp"

namespace vacuum {

namespace {

using std::numbers::pi;

double species_log(const ChargedParticle& p, double log_lambda_l_ev) {
    const double l = 2.0 * (log_lambda_l_ev - std::log(p.mass_ev));
    if (!(l > 0.0))
        throw DomainError("landau pole scale must exceed the rest energy of species '" + p.name + "'");
    return l;
}

// sum_s (q_s/e)^2 ln(Lambda^2 / m_s^2)
double weighted_log_sum(const ParticleSet& set, double log_lambda_l_ev) {
    double sum = 0.0;
    for (const auto& p : set) sum += p.charge_weight() * species_log(p, log_lambda_l_ev);
    return sum;
}

}  // namespace

double epsilon0_from_landau_log(const ParticleSet& set, double log_lambda_l_ev) {
    const auto& pc = constants();
    return pc.e * pc.e / (12.0 * pi * pi * pc.hbar * pc.c) * weighted_log_sum(set, log_lambda_l_ev);
}

double epsilon0_from_landau(const ParticleSet& set, double lambda_l_ev) {
    if (!(lambda_l_ev > 0.0)) throw DomainError("epsilon0_from_landau: scale must be positive");
    return epsilon0_from_landau_log(set, std::log(lambda_l_ev));
}

double fudge_factor_log(const ParticleSet& set, double log_lambda_l_ev) {
    return weighted_log_sum(set, log_lambda_l_ev) / (6.0 * pi * pi * charge_square_sum(set));
}

double fudge_factor(const ParticleSet& set, double lambda_l_ev) {
    if (!(lambda_l_ev > 0.0)) throw DomainError("fudge_factor: scale must be positive");
    return fudge_factor_log(set, std::log(lambda_l_ev));
}

LandauSolution landau_record(const ParticleSet& set, double log_lambda_l_ev) {
    LandauSolution out;
    out.log_lambda_l_ev = log_lambda_l_ev;
    for (const auto& p : set) out.lambda_l_tilde.push_back({p.name, species_log(p, log_lambda_l_ev)});
    out.common_log_half = 0.5 * weighted_log_sum(set, log_lambda_l_ev) / charge_square_sum(set);
    out.electron_log_half = log_lambda_l_ev - std::log(constants().electron_rest_energy);
    out.f = fudge_factor_log(set, log_lambda_l_ev);
    out.eps0_out = epsilon0_from_landau_log(set, log_lambda_l_ev);
    return out;
}

LandauSolution solve_landau_pole(const ParticleSet& set, double target_eps0, const quad::ToleranceSpec& tol) {
    if (!(target_eps0 > 0.0)) throw DomainError("solve_landau_pole: target permittivity must be positive");
    const double log_heaviest = std::log(set.heaviest().mass_ev);
    const double lo = log_heaviest + 1.0;
    const double hi = log_heaviest + 2000.0;
    auto residual = [&](double log_lambda) { return epsilon0_from_landau_log(set, log_lambda) / target_eps0 - 1.0; };
    if (residual(lo) > 0.0 || residual(hi) < 0.0)
        throw BracketingError("solve_landau_pole: target permittivity is not reachable for set '" + set.label() +
                              "' within the search bracket");
    const auto root = quad::find_root(residual, lo, hi, tol);
    auto out = landau_record(set, root.root);
    out.evaluations = root.evaluations;
    return out;
}

double log_relative_spread(const ParticleSet& set, double log_lambda_l_ev) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    for (const auto& p : set) {
        const double l = species_log(p, log_lambda_l_ev);
        lo = std::min(lo, l);
        hi = std::max(hi, l);
    }
    return (hi - lo) / lo;
}

}  // namespace vacuum
