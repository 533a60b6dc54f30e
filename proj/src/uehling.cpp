#include "vacuum/uehling.hpp"

#include <cmath>
#include <numbers>

#include "vacuum/constants.hpp"
#include "vacuum/errors.hpp"
#include "vacuum/one_loop.hpp"

namespace vacuum {

namespace {

using std::numbers::pi;

// Q e / (4 pi eps0 r) at r = rho * lambda_C of the given rest energy.
double bare_coulomb(double rho, double rest_energy_ev, double source_charge_e) {
    const auto& pc = constants();
    const double r = rho * pc.compton_wavelength(rest_energy_ev);
    return source_charge_e * pc.e / (4.0 * pi * pc.eps0_ref * r);
}

}  // namespace

double potential_kspace(double kvec2, const ParticleSet& set, double source_charge_e) {
    if (!(kvec2 >= 0.0)) throw DomainError("potential_kspace: |k|^2 must be non-negative");
    if (kvec2 == 0.0) throw PoleError("potential_kspace: Coulomb pole at k = 0");
    const auto running = epsilon_running(-kvec2, set);
    return source_charge_e * constants().e / (kvec2 * running.eps);
}

PotentialSample potential_rspace(double r_over_lambda_c, const ParticleSet& set, const quad::ToleranceSpec& tol,
                                 double source_charge_e) {
    if (!(r_over_lambda_c > 0.0)) throw DomainError("potential_rspace: radius must be positive");
    const double reference_mass = set.lightest().mass_ev;

    struct Weighted {
        double weight;
        double mass_ratio_sq;  // (m_ref / m_s)^2
        Spin spin;
    };
    std::vector<Weighted> species;
    for (const auto& p : set) {
        const double ratio = reference_mass / p.mass_ev;
        species.push_back({p.charge_weight(), ratio * ratio, p.spin});
    }

    auto g = [&species](double kappa) {
        double minus_chi = 0.0;
        for (const auto& s : species)
            minus_chi -= s.weight * chi_regularized(kappa * kappa * s.mass_ratio_sq, s.spin).chi;
        return minus_chi / kappa;
    };
    const auto integral = quad::integrate_oscillatory_sine(g, r_over_lambda_c, tol);

    PotentialSample out;
    out.r_over_lambda_c = r_over_lambda_c;
    out.correction = 2.0 / pi * integral.value;
    out.abs_error_estimate = 2.0 / pi * integral.abs_error_estimate;
    out.correction_factor = 1.0 + out.correction;
    out.phi = bare_coulomb(r_over_lambda_c, reference_mass, source_charge_e) * out.correction_factor;
    return out;
}

PotentialSample potential_asymptotic(double r_over_lambda_c, AsymptoticRegime regime, double source_charge_e) {
    const double rho = r_over_lambda_c;
    const double alpha = constants().alpha;
    PotentialSample out;
    out.r_over_lambda_c = rho;
    if (regime == AsymptoticRegime::small_r) {
        if (!(rho > 0.0 && rho < small_r_limit))
            throw DomainError("potential_asymptotic: small_r branch requires 0 < rho < 0.25");
        out.correction = 2.0 * alpha / (3.0 * pi) * (std::log(1.0 / rho) - std::numbers::egamma - 5.0 / 6.0);
    } else {
        if (!(rho > large_r_limit)) throw DomainError("potential_asymptotic: large_r branch requires rho > 2");
        out.correction = alpha / (4.0 * std::sqrt(pi)) * std::exp(-2.0 * rho) / std::pow(rho, 1.5);
    }
    out.correction_factor = 1.0 + out.correction;
    out.phi = bare_coulomb(rho, constants().electron_rest_energy, source_charge_e) * out.correction_factor;
    return out;
}

}  // namespace vacuum
