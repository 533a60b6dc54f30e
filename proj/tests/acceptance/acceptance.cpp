// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.
// Usage: acceptance <path-to-vacuum-eps>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "vacuum/constants.hpp"
#include "vacuum/dispersion.hpp"
#include "vacuum/landau.hpp"
#include "vacuum/one_loop.hpp"
#include "vacuum/oscillator.hpp"
#include "vacuum/particles.hpp"
#include "vacuum/quadrature.hpp"
#include "vacuum/sweep.hpp"
#include "vacuum/uehling.hpp"

using namespace vacuum;

namespace {

constexpr double pi = std::numbers::pi;
const double alpha = constants().alpha;

struct Verdict {
    bool pass = true;
    std::string detail;
    void require(bool ok, const std::string& what) {
        if (!ok) pass = false;
        if (!detail.empty()) detail += "; ";
        detail += (ok ? "" : "NOT ") + what;
    }
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

int failures = 0;

void criterion(int id, const char* title, double limit_s, const std::function<Verdict()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
        v = body();
    } catch (const std::exception& e) {
        v.pass = false;
        v.detail = std::string("exception: ") + e.what();
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (elapsed > limit_s) {
        v.pass = false;
        v.detail += "; runtime " + fmt(elapsed) + " s over " + fmt(limit_s) + " s";
    }
    if (!v.pass) ++failures;
    std::printf("[%s] %2d %s (%.2f s): %s\n", v.pass ? "PASS" : "FAIL", id, title, elapsed, v.detail.c_str());
    std::fflush(stdout);
}

// Direct Taylor series of -(2 alpha/pi) int_0^1 x(1-x) ln(1 + x(1-x) q) dx using
// int_0^1 (x(1-x))^{n+1} dx = ((n+1)!)^2 / (2n+3)!.
double taylor_chi(double q2) {
    double sum = 0.0;
    for (int n = 1; n <= 16; ++n) {
        const double beta = std::exp(2.0 * std::lgamma(n + 2.0) - std::lgamma(2.0 * n + 4.0));
        sum += (n % 2 ? 1.0 : -1.0) * std::pow(q2, n) / n * beta;
    }
    return -2.0 * alpha / pi * sum;
}

std::string run_capture(const std::string& command) {
    std::string out;
    FILE* pipe = ::popen(command.c_str(), "r");
    if (!pipe) return out;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    if (::pclose(pipe) != 0) out = "<exit failure>";
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "vacuum-eps";

    criterion(1, "cutoff independence of the subtracted susceptibility", 30.0, [] {
        Verdict v;
        for (double q2 : {1.0, 10.0, 100.0}) {
            const double reg = chi_regularized(q2).chi;
            std::vector<double> residuals;
            for (double lam : {1e2, 1e3, 1e4})
                residuals.push_back(
                    std::abs(chi_cutoff(q2, lam, Spin::half).chi - chi_cutoff(0.0, lam, Spin::half).chi - reg));
            const bool shrinking = residuals[1] < residuals[0] && residuals[2] < residuals[1];
            v.require(residuals[2] < 1e-4 * alpha / pi && shrinking,
                      "q2=" + fmt(q2) + " residual/(alpha/pi)=" + fmt(residuals[2] / (alpha / pi)) +
                          (shrinking ? " shrinking" : " not shrinking"));
        }
        return v;
    });

    criterion(2, "large-argument logarithmic asymptote", 5.0, [] {
        Verdict v;
        double worst = 0.0;
        for (int i = 0; i <= 40; ++i) {
            const double q2 = std::pow(10.0, 4.0 + 0.1 * i);
            const double closed = -alpha / (3.0 * pi) * std::log(q2 / std::exp(5.0 / 3.0));
            worst = std::max(worst, std::abs(chi_regularized(q2).chi / closed - 1.0));
        }
        v.require(worst < 0.01, "max rel diff on [1e4,1e8] " + fmt(worst));
        const double at8 = std::abs(chi_regularized(1e8).chi / (-alpha / (3.0 * pi) * (std::log(1e8) - 5.0 / 3.0)) - 1.0);
        v.require(at8 < 1e-3, "rel diff at 1e8 " + fmt(at8));
        return v;
    });

    criterion(3, "small-argument Taylor limit", 1.0, [] {
        Verdict v;
        const double ratio = chi_regularized(1e-3).chi / 1e-3 / (-2.0 * alpha / pi / 30.0);
        v.require(std::abs(ratio - 1.0) < 5e-3, "chi/q2 over -(2a/pi)/30 = " + fmt(ratio));
        const double series = std::abs(chi_regularized(1e-3).chi / taylor_chi(1e-3) - 1.0);
        v.require(series < 1e-10, "full Taylor series rel diff " + fmt(series));
        return v;
    });

    criterion(4, "Kramers-Kronig reconstruction", 30.0, [] {
        Verdict v;
        for (double q2 : {1.0, 10.0, 100.0}) {
            const double rel = std::abs(kk_real_from_im(q2).value / chi_regularized(q2).chi - 1.0);
            v.require(rel < 5e-3, "q2=" + fmt(q2) + " rel " + fmt(rel));
        }
        return v;
    });

    criterion(5, "Uehling transform vs closed-form branches", 60.0, [] {
        Verdict v;
        const auto set = builtin_particle_set("electron");
        double worst_large = 0.0;
        for (double rho = 5.0; rho <= 8.0 + 1e-12; rho += 0.5) {
            const double leading = alpha / (4.0 * std::sqrt(pi)) * std::exp(-2.0 * rho) / std::pow(rho, 1.5);
            worst_large = std::max(worst_large, std::abs(potential_rspace(rho, set).correction / leading - 1.0));
        }
        v.require(worst_large < 0.05, "large-r max rel diff on [5,8] " + fmt(worst_large));
        double worst_small = 0.0;
        for (double rho : {1e-4, 3e-4, 1e-3, 3e-3, 1e-2}) {
            const double closed =
                2.0 * alpha / (3.0 * pi) * (std::log(1.0 / rho) - std::numbers::egamma - 5.0 / 6.0);
            worst_small = std::max(worst_small, std::abs(potential_rspace(rho, set).correction / closed - 1.0));
        }
        v.require(worst_small < 0.05, "small-r max rel diff on [1e-4,1e-2] " + fmt(worst_small));
        const auto rho = SweepSpec{1e-4, 1e2, 60, Scale::log}.grid();
        const auto samples = uehling_sweep(rho, set);
        bool monotone = true;
        double prev = 1e300;
        for (std::size_t i = 0; i < samples.size(); ++i) {
            if (i > 0 && samples[i].correction_factor > samples[i - 1].correction_factor) monotone = false;
            if (samples[i].correction > 10.0 * samples[i].abs_error_estimate) {
                if (!(samples[i].correction < prev)) monotone = false;
                prev = samples[i].correction;
            }
        }
        v.require(monotone, "correction_factor monotone decreasing on [1e-4,1e2]");
        return v;
    });

    criterion(6, "constitutive identity eps mu c^2 = 1", 5.0, [] {
        Verdict v;
        const auto& pc = constants();
        const auto q2 = SweepSpec{1e-4, 1e10, 50, Scale::log}.grid();
        double worst = 0.0;
        for (const auto& name : builtin_set_names())
            for (const auto& r : running_sweep(q2, builtin_particle_set(name)))
                worst = std::max(worst, std::abs(r.eps * r.mu * pc.c * pc.c - 1.0));
        v.require(worst <= 1e-14, "max |eps mu c^2 - 1| " + fmt(worst));
        return v;
    });

    criterion(7, "running direction eps <= eps0", 5.0, [] {
        Verdict v;
        const auto& pc = constants();
        const auto q2 = SweepSpec{1e-4, 1e10, 50, Scale::log}.grid();
        bool below = true;
        for (const auto& name : builtin_set_names())
            for (const auto& r : running_sweep(q2, builtin_particle_set(name)))
                if (!(r.eps < pc.eps0_ref)) below = false;
        v.require(below, "eps < eps0 at every q2 > 0");
        v.require(epsilon_running_reduced(0.0, builtin_particle_set("standard-model+higgs")).eps == pc.eps0_ref,
                  "eps = eps0 at q2 = 0");
        return v;
    });

    criterion(8, "oscillator-model identities", 1.0, [] {
        Verdict v;
        const auto leptons = builtin_particle_set("leptons");
        const double pe = polarization_density(leptons.particles()[0].mass_ev, 1.0);
        double spread = 0.0;
        for (const auto& p : leptons) spread = std::max(spread, std::abs(polarization_density(p.mass_ev, 1.0) / pe - 1.0));
        v.require(spread <= 4.0 * std::numeric_limits<double>::epsilon(), "mass spread " + fmt(spread));
        const double frac = epsilon0_oscillator(builtin_particle_set("electron")).fraction_of_reference;
        const double rel = std::abs(frac / (2.0 * pi * alpha) - 1.0);
        v.require(rel < 1e-10, "fraction " + fmt(frac) + " vs 2 pi alpha, rel " + fmt(rel));
        v.detail += "; quoted figure " + fmt(quoted_electron_fraction) + " reported only";
        return v;
    });

    criterion(9, "Landau-pole loop closure", 5.0, [] {
        Verdict v;
        std::mt19937_64 rng(2026);
        std::uniform_real_distribution<double> log_mass(std::log(1e4), std::log(1e12));
        std::uniform_real_distribution<double> charge(0.2, 2.0);
        std::uniform_real_distribution<double> above(0.5, 1500.0);
        std::uniform_int_distribution<int> count(1, 8);
        double worst = 0.0;
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<ChargedParticle> ps;
            const int n = count(rng);
            for (int i = 0; i < n; ++i)
                ps.push_back({"s" + std::to_string(i), (i % 2 ? -1.0 : 1.0) * charge(rng), std::exp(log_mass(rng)),
                              i % 3 ? Spin::half : Spin::zero, 1 + i % 3});
            const auto set = make_particle_set("trial-" + std::to_string(trial), std::move(ps));
            const double log_lambda = std::log(set.heaviest().mass_ev) + above(rng);
            const double f = fudge_factor_log(set, log_lambda);
            worst = std::max(worst, std::abs(epsilon0_oscillator(set, f).eps0_estimate /
                                                 epsilon0_from_landau_log(set, log_lambda) - 1.0));
        }
        v.require(worst < 1e-12, "closure max rel " + fmt(worst));
        const auto& pc = constants();
        double round_trip = 0.0;
        for (const auto& name : builtin_set_names()) {
            const auto set = builtin_particle_set(name);
            const auto sol = solve_landau_pole(set, pc.eps0_ref);
            round_trip = std::max(round_trip, std::abs(epsilon0_from_landau_log(set, sol.log_lambda_l_ev) / pc.eps0_ref - 1.0));
        }
        v.require(round_trip < 1e-9, "solve round trip max rel " + fmt(round_trip));
        const auto electron = solve_landau_pole(builtin_particle_set("electron"), pc.eps0_ref);
        const double rel = std::abs(electron.electron_log_half / (3.0 * pi / (2.0 * alpha)) - 1.0);
        v.require(rel < 1e-6, "electron log " + fmt(electron.electron_log_half) + " vs 3pi/(2 alpha), rel " + fmt(rel));
        return v;
    });

    criterion(10, "quadrature kernel suite", 5.0, [] {
        Verdict v;
        const quad::ToleranceSpec tol{1e-13, 0.0, 100000};
        struct Poly {
            double (*f)(double);
            double exact;
            const char* name;
        };
        const Poly polys[] = {
            {[](double x) { return x * (1.0 - x); }, 1.0 / 6.0, "1/6"},
            {[](double x) { return (1.0 - 2.0 * x * x) / 8.0; }, 1.0 / 24.0, "1/24"},
            {[](double x) { return x * x * (1.0 - x) * (1.0 - x); }, 1.0 / 30.0, "1/30"},
        };
        double worst = 0.0, honesty = 0.0;
        for (const auto& p : polys) {
            const auto r = quad::integrate_adaptive(p.f, 0.0, 1.0, tol);
            const double err = std::abs(r.value - p.exact);
            worst = std::max(worst, err);
            // Actual error over (estimate floored at one ulp of the value).
            honesty = std::max(honesty, err / std::max(r.abs_error_estimate, std::numeric_limits<double>::epsilon() * p.exact));
        }
        v.require(worst < 1e-12, "polynomial max abs err " + fmt(worst));
        v.require(honesty <= 10.0, "error/estimate " + fmt(honesty));
        const double dirichlet =
            quad::integrate_oscillatory_sine([](double k) { return 1.0 / k; }, 1.0, {1e-10, 0.0, 10000000}).value;
        v.require(std::abs(dirichlet - pi / 2.0) < 1e-8, "Dirichlet err " + fmt(std::abs(dirichlet - pi / 2.0)));
        const double root = quad::find_root([](double x) { return x * x - 2.0; }, 1.0, 2.0, {1e-14, 0.0, 200}).root;
        v.require(std::abs(root - std::sqrt(2.0)) < 1e-10, "sqrt2 err " + fmt(std::abs(root - std::sqrt(2.0))));
        return v;
    });

    criterion(11, "CLI determinism without timestamp", 10.0, [&cli] {
        Verdict v;
        for (const char* format : {"csv", "json"}) {
            const std::string cmd = "'" + cli + "' running --set standard-model --points 40 --no-timestamp --format " + format;
            const std::string a = run_capture(cmd), b = run_capture(cmd);
            v.require(!a.empty() && a != "<exit failure>" && a == b, std::string(format) + " byte-identical");
            const std::string cmd2 = "'" + cli + "' uehling --rho 1e-3:10 --points 8 --no-timestamp --format " + format;
            const std::string c = run_capture(cmd2), d = run_capture(cmd2);
            v.require(!c.empty() && c != "<exit failure>" && c == d, std::string(format) + " uehling byte-identical");
        }
        return v;
    });

    std::printf("%d of 11 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
