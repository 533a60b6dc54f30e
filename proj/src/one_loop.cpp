#include "vacuum/one_loop.hpp"

#include <cmath>
#include <numbers>

#include "vacuum/errors.hpp"

namespace vacuum {

namespace {

using std::numbers::pi;

// int_0^1 u^2 / (u^2 + 1)^{3/2} du
double radial_core() {
    static const double value =
        quad::integrate_adaptive([](double u) { return u * u / std::pow(u * u + 1.0, 1.5); }, 0.0, 1.0,
                                 {1e-15, 0.0, 100000})
            .value;
    return value;
}

// int_0^L t^2 / (t^2 + a^2)^{3/2} dt. Depends only on L / a; beyond t = a the
// substitution t = a e^s turns the integrand into (1 + e^{-2s})^{-3/2}.
quad::IntegralResult radial_integral(double a, double cutoff, const quad::ToleranceSpec& tol) {
    const double u_max = cutoff / a;
    if (u_max <= 1.0) {
        return quad::integrate_adaptive([](double u) { return u * u / std::pow(u * u + 1.0, 1.5); }, 0.0, u_max,
                                        tol);
    }
    auto tail = quad::integrate_adaptive([](double s) { return std::pow(1.0 + std::exp(-2.0 * s), -1.5); }, 0.0,
                                         std::log(u_max), tol);
    tail.value += radial_core();
    return tail;
}

}  // namespace

double feynman_weight(Spin spin, double x) {
    return spin == Spin::half ? x * (1.0 - x) : (1.0 - 2.0 * x * x) / 8.0;
}

double asymptotic_scale() { return std::exp(5.0 / 3.0); }

SusceptibilityResult chi_cutoff(double q2, double lambda_tilde, Spin spin, const quad::ToleranceSpec& tol) {
    if (!(q2 >= 0.0)) throw DomainError("chi_cutoff: q2 must be non-negative (spacelike)");
    if (!(lambda_tilde > 10.0)) throw DomainError("chi_cutoff: lambda_tilde must exceed 10");
    const double alpha = constants().alpha;

    const quad::ToleranceSpec inner{tol.rel_tol * 1e-2 > 1e-15 ? tol.rel_tol * 1e-2 : 1e-15, 0.0,
                                    tol.max_evaluations};
    double inner_error = 0.0;
    auto integrand = [&](double x) {
        const double a = std::sqrt(1.0 + x * (1.0 - x) * q2);
        const auto r = radial_integral(a, lambda_tilde, inner);
        inner_error = std::max(inner_error, r.abs_error_estimate);
        return feynman_weight(spin, x) * r.value;
    };
    const auto outer = quad::integrate_adaptive(integrand, 0.0, 1.0, tol);
    const double prefactor = 4.0 * alpha / pi;  // 8 pi alpha * 4 pi / (2 pi)^3
    const double weight_abs = spin == Spin::half ? 1.0 / 6.0 : 0.125;
    return {prefactor * outer.value, prefactor * (outer.abs_error_estimate + weight_abs * inner_error),
            {q2, MomentumKind::spacelike, constants().m_e}, spin};
}

SusceptibilityResult chi_regularized(double q2, Spin spin, const quad::ToleranceSpec& tol) {
    if (!(q2 >= 0.0)) throw DomainError("chi_regularized: q2 must be non-negative (spacelike)");
    const DimensionlessMomentum arg{q2, MomentumKind::spacelike, constants().m_e};
    if (q2 == 0.0) return {0.0, 0.0, arg, spin};
    const double alpha = constants().alpha;
    const auto r = quad::integrate_adaptive(
        [q2, spin](double x) { return feynman_weight(spin, x) * std::log1p(x * (1.0 - x) * q2); }, 0.0, 1.0, tol);
    const double prefactor = -2.0 * alpha / pi;
    return {prefactor * r.value, -prefactor * r.abs_error_estimate, arg, spin};
}

double chi_asymptotic(double q2) {
    const double scale = asymptotic_scale();
    if (!(q2 >= scale)) throw DomainError("chi_asymptotic: q2 must be at least exp(5/3)");
    return -constants().alpha / (3.0 * pi) * std::log(q2 / scale);
}

RunningPermittivity epsilon_running(double k_squared_si, const ParticleSet& set, const quad::ToleranceSpec& tol) {
    if (k_squared_si > 0.0) throw DomainError("epsilon_running: timelike arguments are handled by the dispersion module");
    const auto& pc = constants();
    RunningPermittivity out;
    for (const auto& p : set) {
        const auto arg = to_dimensionless(k_squared_si, pc.mass_from_rest_energy(p.mass_ev));
        const auto chi = chi_regularized(arg.q2, p.spin, tol);
        out.chi_total += p.charge_weight() * chi.chi;
        out.abs_error_estimate += p.charge_weight() * chi.abs_error_estimate;
        out.q2_per_species.push_back({p.name, arg.q2});
    }
    out.eps = pc.eps0_ref * (1.0 + out.chi_total);
    out.mu = 1.0 / (out.eps * pc.c * pc.c);
    return out;
}

RunningPermittivity epsilon_running_reduced(double q2_lightest, const ParticleSet& set,
                                            const quad::ToleranceSpec& tol) {
    if (!(q2_lightest >= 0.0)) throw DomainError("epsilon_running_reduced: q2 must be non-negative");
    const auto& pc = constants();
    const double mass = pc.mass_from_rest_energy(set.lightest().mass_ev);
    return epsilon_running(from_dimensionless({q2_lightest, MomentumKind::spacelike, mass}), set, tol);
}

ConstitutiveFields constitutive(const Vec3& E, const Vec3& B, double k_squared_si, const ParticleSet& set,
                                const quad::ToleranceSpec& tol) {
    const double eps = epsilon_running(k_squared_si, set, tol).eps;
    const double c = constants().c;
    return {eps * E, (c * c * eps) * B};
}

}  // namespace vacuum
