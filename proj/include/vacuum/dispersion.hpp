#pragma once

#include "vacuum/quadrature.hpp"

namespace vacuum {

struct AbsorptivePart {
    double im_chi = 0.0;
    double s_tilde = 0.0;  ///< timelike hbar^2 k^2 / (m c)^2
};

/// Normalisation N = alpha / 3 of the absorptive part (unit charge, spin 1/2).
double absorptive_normalization();

/// N (1 - 4/s)^{1/2} (1 + 2/s) above the pair threshold s = 4, zero below.
AbsorptivePart im_chi(double s_tilde);

/// Real part at spacelike q2 from the once-subtracted dispersion relation
///   -(q2 / pi) int_4^inf ds Im chi(s) / (s (s + q2)),
/// subtracted at q2 = 0. The cut beyond s = 1e6 is integrated analytically.
quad::IntegralResult kk_real_from_im(double q2, const quad::ToleranceSpec& tol = {1e-12, 0.0, 2000000});

/// Crossover above which the absorptive part is replaced by its constant limit.
inline constexpr double dispersion_tail_start = 1e6;

}  // namespace vacuum
