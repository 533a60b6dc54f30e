#include "vacuum/sweep.hpp"

#include <cmath>

#include "vacuum/errors.hpp"

namespace vacuum {

void SweepSpec::validate() const {
    if (!(start < stop)) throw DomainError("sweep: start must be below stop");
    if (points < 2) throw DomainError("sweep: at least 2 points required");
    if (scale == Scale::log && !(start > 0.0)) throw DomainError("sweep: log scale requires start > 0");
}

std::vector<double> SweepSpec::grid() const {
    validate();
    std::vector<double> xs(points);
    const double last = static_cast<double>(points - 1);
    if (scale == Scale::linear) {
        for (std::size_t i = 0; i < points; ++i) xs[i] = start + (stop - start) * (static_cast<double>(i) / last);
    } else {
        const double a = std::log(start), b = std::log(stop);
        for (std::size_t i = 0; i < points; ++i) xs[i] = std::exp(a + (b - a) * (static_cast<double>(i) / last));
    }
    xs.front() = start;
    xs.back() = stop;
    return xs;
}

std::vector<SusceptibilityResult> susceptibility_sweep(std::span<const double> q2, Spin spin,
                                                       const quad::ToleranceSpec& tol, Execution exec) {
    return map_points(q2, exec, [&](double x) { return chi_regularized(x, spin, tol); });
}

std::vector<RunningPermittivity> running_sweep(std::span<const double> q2_lightest, const ParticleSet& set,
                                               const quad::ToleranceSpec& tol, Execution exec) {
    return map_points(q2_lightest, exec, [&](double x) { return epsilon_running_reduced(x, set, tol); });
}

std::vector<quad::IntegralResult> dispersion_sweep(std::span<const double> q2, const quad::ToleranceSpec& tol,
                                                   Execution exec) {
    return map_points(q2, exec, [&](double x) { return kk_real_from_im(x, tol); });
}

std::vector<PotentialSample> uehling_sweep(std::span<const double> rho, const ParticleSet& set,
                                           const quad::ToleranceSpec& tol, Execution exec) {
    return map_points(rho, exec, [&](double x) { return potential_rspace(x, set, tol); });
}

}  // namespace vacuum
