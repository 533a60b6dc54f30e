#include "vacuum/dispersion.hpp"

#include <cmath>
#include <numbers>

#include "vacuum/constants.hpp"
#include "vacuum/errors.hpp"

namespace vacuum {

double absorptive_normalization() { return constants().alpha / 3.0; }

AbsorptivePart im_chi(double s_tilde) {
    if (!(s_tilde > 4.0)) return {0.0, s_tilde};
    const double inv = 1.0 / s_tilde;
    return {absorptive_normalization() * std::sqrt(1.0 - 4.0 * inv) * (1.0 + 2.0 * inv), s_tilde};
}

quad::IntegralResult kk_real_from_im(double q2, const quad::ToleranceSpec& tol) {
    if (!(q2 >= 0.0)) throw DomainError("kk_real_from_im: q2 must be non-negative (spacelike)");
    if (q2 == 0.0) return {0.0, 0.0, 1};
    const double norm = absorptive_normalization();
    const double s_c = dispersion_tail_start;

    // s = 4 + u^2 removes the square-root edge at threshold.
    auto integrand = [q2, norm](double u) {
        const double s = 4.0 + u * u;
        const double shape = u / std::sqrt(s) * (1.0 + 2.0 / s);
        return 2.0 * u * norm * shape / (s * (s + q2));
    };
    auto cut = quad::integrate_adaptive(integrand, 0.0, std::sqrt(s_c - 4.0), tol);

    // Beyond s_c: Im chi = N (1 - 6/s^2 + O(s^-3)); keep the constant, bound the rest.
    const double tail = norm / q2 * std::log1p(q2 / s_c);
    const double tail_error = 6.0 / (s_c * s_c) * tail;

    const double scale = -q2 / std::numbers::pi;
    return {scale * (cut.value + tail), -scale * (cut.abs_error_estimate + tail_error), cut.evaluations};
}

}  // namespace vacuum
