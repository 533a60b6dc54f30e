#pragma once

// Parameter sweeps. Every kernel has a serial reference and an OpenMP
// version; both evaluate each grid point independently, so results are
// identical and come back in grid order.

#include <cstddef>
#include <exception>
#include <span>
#include <vector>

#include "vacuum/dispersion.hpp"
#include "vacuum/one_loop.hpp"
#include "vacuum/particles.hpp"
#include "vacuum/uehling.hpp"

namespace vacuum {

enum class Scale { linear, log };
enum class Execution { serial, parallel };

struct SweepSpec {
    double start = 0.0;
    double stop = 1.0;
    std::size_t points = 2;
    Scale scale = Scale::linear;

    /// start < stop, points >= 2, start > 0 for log scale; DomainError otherwise.
    void validate() const;
    /// Endpoints are hit exactly.
    std::vector<double> grid() const;
};

template <class F>
auto map_serial(std::span<const double> xs, F&& f) {
    using R = decltype(f(xs[0]));
    std::vector<R> out;
    out.reserve(xs.size());
    for (double x : xs) out.push_back(f(x));
    return out;
}

/// OpenMP map. The first exception thrown by any point is rethrown after the
/// loop; dynamic scheduling because per-point cost varies by orders of magnitude.
template <class F>
auto map_parallel(std::span<const double> xs, F&& f) {
    using R = decltype(f(xs[0]));
    const auto n = static_cast<std::ptrdiff_t>(xs.size());
    std::vector<R> out(xs.size());
    std::vector<std::exception_ptr> failures(xs.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        try {
            out[i] = f(xs[i]);
        } catch (...) {
            failures[i] = std::current_exception();
        }
    }
    for (const auto& e : failures)
        if (e) std::rethrow_exception(e);
    return out;
}

template <class F>
auto map_points(std::span<const double> xs, Execution exec, F&& f) {
    return exec == Execution::parallel ? map_parallel(xs, f) : map_serial(xs, f);
}

// Sweep kernels used by the CLI and the benchmark.

std::vector<SusceptibilityResult> susceptibility_sweep(std::span<const double> q2, Spin spin,
                                                       const quad::ToleranceSpec& tol = susceptibility_tolerance,
                                                       Execution exec = Execution::parallel);
std::vector<RunningPermittivity> running_sweep(std::span<const double> q2_lightest, const ParticleSet& set,
                                               const quad::ToleranceSpec& tol = susceptibility_tolerance,
                                               Execution exec = Execution::parallel);
std::vector<quad::IntegralResult> dispersion_sweep(std::span<const double> q2,
                                                   const quad::ToleranceSpec& tol = {1e-12, 0.0, 2000000},
                                                   Execution exec = Execution::parallel);
std::vector<PotentialSample> uehling_sweep(std::span<const double> rho, const ParticleSet& set,
                                           const quad::ToleranceSpec& tol = {1e-9, 0.0, 50000000},
                                           Execution exec = Execution::parallel);

}  // namespace vacuum
