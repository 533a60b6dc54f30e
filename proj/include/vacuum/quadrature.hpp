#pragma once

// Adaptive Gauss-Kronrod integration, semi-infinite Fourier sine integrals
// and bracketing root finding. Header-only so integrands inline.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <queue>
#include <string>
#include <vector>

#include "vacuum/errors.hpp"

namespace vacuum::quad {

struct IntegralResult {
    double value = 0.0;
    double abs_error_estimate = 0.0;
    std::size_t evaluations = 0;
};

/// Convergence is reached when the error estimate is at most
/// max(abs_tol, rel_tol * |value|).
struct ToleranceSpec {
    double rel_tol = 1e-10;
    double abs_tol = 0.0;
    std::size_t max_evaluations = 500000;

    void validate() const {
        if (!(rel_tol > 0.0) && !(abs_tol > 0.0))
            throw DomainError("ToleranceSpec: one of rel_tol, abs_tol must be positive");
        if (rel_tol < 0.0 || abs_tol < 0.0) throw DomainError("ToleranceSpec: tolerances must be non-negative");
        if (max_evaluations < 1) throw DomainError("ToleranceSpec: max_evaluations must be >= 1");
    }
    double target(double value) const { return std::max(abs_tol, rel_tol * std::abs(value)); }
};

namespace detail {

// 21-point Kronrod extension of the 10-point Gauss rule (QUADPACK qk21).
inline constexpr std::array<double, 11> xgk21{
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};
inline constexpr std::array<double, 11> wgk21{
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077600880433597, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
inline constexpr std::array<double, 5> wg10{
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

struct Segment {
    double a, b, value, error, abs_value;
    bool operator<(const Segment& o) const { return error < o.error; }
};

template <class F>
Segment gauss_kronrod21(F& f, double a, double b) {
    constexpr double eps = std::numeric_limits<double>::epsilon();
    constexpr double tiny = std::numeric_limits<double>::min();
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    std::array<double, 10> f1{}, f2{};
    const double fc = static_cast<double>(f(center));
    double resk = wgk21[10] * fc;
    double resg = 0.0;
    double resabs = std::abs(resk);
    for (int j = 0; j < 10; ++j) {
        const double dx = half * xgk21[j];
        f1[j] = static_cast<double>(f(center - dx));
        f2[j] = static_cast<double>(f(center + dx));
        const double sum = f1[j] + f2[j];
        resk += wgk21[j] * sum;
        resabs += wgk21[j] * (std::abs(f1[j]) + std::abs(f2[j]));
        if (j % 2 == 1) resg += wg10[j / 2] * sum;
    }
    const double mean = 0.5 * resk;
    double resasc = wgk21[10] * std::abs(fc - mean);
    for (int j = 0; j < 10; ++j) resasc += wgk21[j] * (std::abs(f1[j] - mean) + std::abs(f2[j] - mean));

    const double ahalf = std::abs(half);
    resk *= half;
    resabs *= ahalf;
    resasc *= ahalf;
    double err = std::abs(resk - resg * half);
    if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    if (resabs > tiny / (50.0 * eps)) err = std::max(50.0 * eps * resabs, err);
    if (!std::isfinite(resk)) err = std::numeric_limits<double>::infinity();
    return {a, b, resk, err, resabs};
}

}  // namespace detail

/// Globally adaptive 21-point Gauss-Kronrod integration over [a, b].
/// The worst segment is bisected until the summed error estimate meets the
/// tolerance. Requests below the roundoff floor (100 eps * integral of |f|)
/// are clipped to it. Endpoints are never evaluated.
template <class F>
IntegralResult integrate_adaptive(F&& f, double a, double b, const ToleranceSpec& tol) {
    tol.validate();
    if (!(a < b)) throw DomainError("integrate_adaptive: require a < b");
    constexpr double eps = std::numeric_limits<double>::epsilon();
    constexpr std::size_t evals_per_segment = 21;

    std::priority_queue<detail::Segment> heap;
    detail::Segment first = detail::gauss_kronrod21(f, a, b);
    double value = first.value;
    double error = first.error;
    double abs_value = first.abs_value;
    std::size_t evaluations = evals_per_segment;
    heap.push(first);

    auto converged = [&] { return error <= std::max(tol.target(value), 100.0 * eps * abs_value); };

    while (!converged()) {
        if (evaluations + 2 * evals_per_segment > tol.max_evaluations)
            throw NonConvergenceError("integrate_adaptive: evaluation budget exhausted", value, error);
        detail::Segment worst = heap.top();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b) || !std::isfinite(worst.error))
            throw NonConvergenceError("integrate_adaptive: segment cannot be refined further", value, error);
        heap.pop();
        const detail::Segment left = detail::gauss_kronrod21(f, worst.a, mid);
        const detail::Segment right = detail::gauss_kronrod21(f, mid, worst.b);
        evaluations += 2 * evals_per_segment;
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        abs_value += left.abs_value + right.abs_value - worst.abs_value;
        heap.push(left);
        heap.push(right);
        // Re-sum occasionally so the running totals do not drift.
        if (heap.size() % 64 == 0) {
            auto copy = heap;
            value = error = abs_value = 0.0;
            while (!copy.empty()) {
                value += copy.top().value;
                error += copy.top().error;
                abs_value += copy.top().abs_value;
                copy.pop();
            }
        }
    }
    return {value, error, evaluations};
}

/// Iterated averaging (Euler-type) of the last `window` partial sums.
/// Exposed for testing.
inline double averaged_tail(const std::vector<double>& partial_sums, std::size_t window) {
    const std::size_t n = partial_sums.size();
    const std::size_t m = std::min(window, n);
    std::vector<double> s(partial_sums.end() - static_cast<std::ptrdiff_t>(m), partial_sums.end());
    for (std::size_t len = m; len > 1; --len)
        for (std::size_t i = 0; i + 1 < len; ++i) s[i] = 0.5 * (s[i] + s[i + 1]);
    return s.front();
}

/// Estimates the integral over [0, inf) of g(k) sin(omega k).
///
/// The range is cut at the zeros k_n = n pi / omega, each half period is
/// integrated adaptively and the alternating partial sums are accelerated by
/// iterated averaging over a trailing window. Throws DivergenceError when the
/// half-period contributions stop shrinking.
template <class G>
IntegralResult integrate_oscillatory_sine(G&& g, double omega, const ToleranceSpec& tol) {
    tol.validate();
    if (!(omega > 0.0)) throw DomainError("integrate_oscillatory_sine: omega must be positive");
    constexpr double eps = std::numeric_limits<double>::epsilon();
    constexpr std::size_t window = 24;
    constexpr std::size_t min_terms = 16;
    constexpr std::size_t step = 4;
    constexpr std::size_t max_terms = 4000;
    const double period = std::numbers::pi / omega;

    ToleranceSpec term_tol{std::min(tol.rel_tol > 0.0 ? tol.rel_tol : 1.0, 1e-13), 0.1 * tol.abs_tol,
                           tol.max_evaluations};
    if (!(term_tol.rel_tol > 0.0)) term_tol.rel_tol = 1e-13;

    std::vector<double> terms;
    std::vector<double> partial;
    double partial_abs_max = 0.0;
    double abs_term_sum = 0.0;
    double term_error_sum = 0.0;
    std::vector<double> term_errors;
    std::size_t evaluations = 0;
    double previous_estimate = std::numeric_limits<double>::quiet_NaN();
    int agreements = 0;

    auto integrand = [&g, omega](double k) { return static_cast<double>(g(k)) * std::sin(omega * k); };

    while (terms.size() < max_terms) {
        const std::size_t n = terms.size();
        term_tol.max_evaluations = tol.max_evaluations > evaluations ? tol.max_evaluations - evaluations : 0;
        if (term_tol.max_evaluations < 21)
            throw NonConvergenceError("integrate_oscillatory_sine: evaluation budget exhausted",
                                      partial.empty() ? 0.0 : averaged_tail(partial, window),
                                      std::abs(previous_estimate));
        const double lo = static_cast<double>(n) * period;
        const double hi = static_cast<double>(n + 1) * period;
        const IntegralResult piece = integrate_adaptive(integrand, lo, hi, term_tol);
        evaluations += piece.evaluations;
        term_errors.push_back(piece.abs_error_estimate);
        term_error_sum += piece.abs_error_estimate;
        abs_term_sum += std::abs(piece.value);
        terms.push_back(piece.value);
        partial.push_back((partial.empty() ? 0.0 : partial.back()) + piece.value);
        partial_abs_max = std::max(partial_abs_max, std::abs(partial.back()));

        const std::size_t count = terms.size();
        if (count < min_terms || count % step != 0) continue;

        // Nothing below roundoff or the accuracy of the averaged terms is resolvable.
        double window_error = 0.0;
        for (std::size_t i = count - std::min(count, window); i < count; ++i) window_error += term_errors[i];
        const double floor = 64.0 * eps * partial_abs_max + window_error;
        auto window_mean = [&](std::size_t from, std::size_t to) {
            double s = 0.0;
            for (std::size_t i = from; i < to; ++i) s += std::abs(terms[i]);
            return s / static_cast<double>(to - from);
        };
        const double recent = window_mean(count - 8, count);
        const double earlier = window_mean(count - 16, count - 8);
        const bool negligible = recent <= floor;
        const bool shrinking = negligible || recent < 0.999 * earlier;
        const bool growing = !negligible && recent > earlier;

        // Contributions may rise for a while (the envelope can peak far from
        // k = 0); only a plateau well past the largest term counts as divergence.
        double largest = 0.0;
        for (double t : terms) largest = std::max(largest, std::abs(t));
        std::size_t peak = 0;
        while (std::abs(terms[peak]) < 0.999 * largest) ++peak;
        if (!shrinking && count >= 4 * (peak + 1) + 16)
            throw DivergenceError("integrate_oscillatory_sine: half-period contributions are not shrinking");

        const double estimate = averaged_tail(partial, window);
        if (std::isfinite(previous_estimate) && !growing) {
            const double change = std::abs(estimate - previous_estimate);
            if (change <= std::max(tol.target(estimate), floor)) {
                // Every term's error is carried by the partial sums, not only the window's.
                if (++agreements >= 2)
                    return {estimate, change + term_error_sum + eps * abs_term_sum, evaluations};
            } else {
                agreements = 0;
            }
        } else {
            agreements = 0;
        }
        previous_estimate = estimate;
    }
    const std::size_t count = terms.size();
    double recent = 0.0, earlier = 0.0;
    for (std::size_t i = count - 8; i < count; ++i) recent += std::abs(terms[i]);
    for (std::size_t i = count - 16; i < count - 8; ++i) earlier += std::abs(terms[i]);
    if (recent >= earlier)
        throw DivergenceError("integrate_oscillatory_sine: half-period contributions are not shrinking");
    throw NonConvergenceError("integrate_oscillatory_sine: term limit reached", previous_estimate,
                              std::numeric_limits<double>::infinity());
}

struct RootResult {
    double root = 0.0;
    double residual = 0.0;  ///< f(root)
    std::size_t evaluations = 0;
};

/// Brent's method on a sign-changing bracket [lo, hi]. Iterates until f is
/// exactly zero, |f| <= f_tol, or the bracket is narrower than
/// max(abs_tol, rel_tol * |x|). Every iterate stays inside the bracket.
template <class F>
RootResult find_root(F&& f, double lo, double hi, const ToleranceSpec& tol, double f_tol = 0.0) {
    tol.validate();
    if (!(lo < hi)) throw DomainError("find_root: require lo < hi");
    constexpr double eps = std::numeric_limits<double>::epsilon();
    double a = lo, b = hi;
    double fa = static_cast<double>(f(a));
    double fb = static_cast<double>(f(b));
    std::size_t evaluations = 2;
    if (fa == 0.0) return {a, fa, evaluations};
    if (fb == 0.0) return {b, fb, evaluations};
    if (!(std::signbit(fa) != std::signbit(fb)) || !std::isfinite(fa) || !std::isfinite(fb))
        throw BracketingError("find_root: f(lo) and f(hi) must have opposite signs");

    double c = a, fc = fa;
    double d = b - a, e = d;
    while (evaluations < tol.max_evaluations) {
        if (std::signbit(fb) == std::signbit(fc)) {
            c = a;
            fc = fa;
            d = e = b - a;
        }
        if (std::abs(fc) < std::abs(fb)) {
            a = b; b = c; c = a;
            fa = fb; fb = fc; fc = fa;
        }
        const double xtol = 0.5 * std::max(tol.abs_tol, tol.rel_tol * std::abs(b)) + 2.0 * eps * std::abs(b);
        const double m = 0.5 * (c - b);
        if (std::abs(m) <= xtol || fb == 0.0 || std::abs(fb) <= f_tol) return {b, fb, evaluations};

        if (std::abs(e) >= xtol && std::abs(fa) > std::abs(fb)) {
            double p, q;
            const double s = fb / fa;
            if (a == c) {
                p = 2.0 * m * s;
                q = 1.0 - s;
            } else {
                const double qa = fa / fc;
                const double r = fb / fc;
                p = s * (2.0 * m * qa * (qa - r) - (b - a) * (r - 1.0));
                q = (qa - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0) q = -q;
            else p = -p;
            if (2.0 * p < std::min(3.0 * m * q - std::abs(xtol * q), std::abs(e * q))) {
                e = d;
                d = p / q;
            } else {
                d = m;
                e = m;
            }
        } else {
            d = m;
            e = m;
        }
        a = b;
        fa = fb;
        b += std::abs(d) > xtol ? d : (m > 0.0 ? xtol : -xtol);
        b = std::clamp(b, lo, hi);
        fb = static_cast<double>(f(b));
        ++evaluations;
        if (!std::isfinite(fb)) throw DomainError("find_root: f returned a non-finite value");
    }
    throw NonConvergenceError("find_root: evaluation budget exhausted", b, std::abs(c - b));
}

}  // namespace vacuum::quad
