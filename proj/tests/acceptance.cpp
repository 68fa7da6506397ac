// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one pass/fail line per criterion.  Exit code 0 iff all pass.

#include "hitchin/hitchin.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace hitchin;

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_s(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// 1. reduced-system residuals of the exact family on a 200-point log grid
bool criterion_exact_residuals(std::string& detail)
{
    const auto t0 = Clock::now();
    double worst = 0;
    for (const double c : {0.6, 1.0, 1.5, 2.5}) {
        const auto p = exact_profile(c);
        for (int k = 0; k < 200; ++k) {
            const double r = std::pow(10.0, -3.0 + 6.0 * k / 199.0);
            worst = std::max(worst, ode_residual(p, r).max_abs());
        }
    }
    const double dt = elapsed_s(t0);
    std::ostringstream ss;
    ss << "max residual " << worst << " (tol 1e-10), " << dt << " s (limit 1)";
    detail = ss.str();
    return worst < 1e-10 && dt < 1.0;
}

// 2. transformed-system residuals of the tanh/sech and coth/csch pairs
bool criterion_transformed(std::string& detail)
{
    double worst_exact = 0, worst_singular = 0;
    for (const double c : {1.0, 2.0}) {
        const auto te = tanh_pair(c);
        const auto ts = coth_pair(c);
        for (double t = -5.0; t <= 5.0 + 1e-12; t += 0.01) {
            const auto qe = transformed_residual(te, Branch::exact, t);
            worst_exact = std::max({worst_exact, std::abs(qe.q1), std::abs(qe.q2)});
            if (std::abs(t) < 0.05) continue;
            const auto qs = transformed_residual(ts, Branch::singular, t);
            worst_singular = std::max({worst_singular, std::abs(qs.q1), std::abs(qs.q2)});
        }
    }
    std::ostringstream ss;
    ss << "exact " << worst_exact << ", singular " << worst_singular << " (tol 1e-12)";
    detail = ss.str();
    return worst_exact < 1e-12 && worst_singular < 1e-12;
}

// 3. golden action value pi/3 in the tabulated normalization
bool criterion_action_value(std::string& detail)
{
    const auto t0 = Clock::now();
    const auto rep = reduced_action(1.0);
    const double dt = elapsed_s(t0);
    const double err = std::abs(rep.paper_value - M_PI / 3.0);
    std::ostringstream ss;
    ss << "paper_value err " << err << " (tol 1e-9), reduced/paper ratio " << rep.value_ratio
       << ", " << dt << " s (limit 1)";
    detail = ss.str();
    return rep.convergent && err < 1e-9 && std::isfinite(rep.value_ratio) && dt < 1.0;
}

// 4. convergence domain boundary at c = 1/2
bool criterion_convergence_domain(std::string& detail)
{
    bool ok = true;
    std::ostringstream ss;
    for (const double c : {0.3, 0.45, 0.5}) {
        const bool conv = reduced_action(c).convergent;
        ok = ok && !conv;
        if (conv) ss << " c=" << c << " wrongly convergent;";
    }
    for (const double c : {0.55, 0.6, 1.0, 2.5}) {
        const bool conv = reduced_action(c).convergent;
        ok = ok && conv;
        if (!conv) ss << " c=" << c << " wrongly divergent;";
    }
    detail = ok ? "divergent {0.3,0.45,0.5}, convergent {0.55,0.6,1,2.5}" : ss.str();
    return ok;
}

// 5. strictly positive killing-pairing action density
bool criterion_positivity(std::string& detail)
{
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> rad(0.05, 5.0), ang(0.0, 2 * M_PI);
    double min_density = 1e300;
    for (const double c : {0.6, 1.0, 2.0}) {
        const auto cfg = FieldConfig<double>::exact(c);
        for (int k = 0; k < 100; ++k) {
            const double r = rad(rng), th = ang(rng);
            const double d = action_density(cfg, PointT<double>{r * std::cos(th), r * std::sin(th)},
                                            PairingKind::killing, 1e-5 * (1 + r));
            min_density = std::min(min_density, d);
        }
    }
    std::ostringstream ss;
    ss << "min density over 300 random points " << min_density;
    detail = ss.str();
    return min_density > 0.0;
}

// 6. smooth iff c = 1, witnessed by bounded/unbounded behavior near the origin
bool criterion_smoothness(std::string& detail)
{
    bool ok = true;
    std::ostringstream ss;
    for (const double c : {0.5, 0.75, 1.0, 1.25, 2.0}) {
        const auto cfg = FieldConfig<double>::exact(c);
        const bool declared_smooth = cfg.smoothness() == Smoothness::smooth;
        if (declared_smooth != (c == 1.0)) {
            ok = false;
            ss << " c=" << c << " misclassified;";
            continue;
        }
        auto magnitude = [&cfg](double r) {
            double m = 0;
            for (const double th : {0.3, 2.5}) {
                const PointT<double> p{r * std::cos(th), r * std::sin(th)};
                const auto s = cfg(p.x, p.y);
                m = std::max({m, s.a1.cwiseAbs().maxCoeff(), s.a2.cwiseAbs().maxCoeff(),
                              s.phi1.cwiseAbs().maxCoeff(), s.phi2.cwiseAbs().maxCoeff(),
                              std::abs(action_density(cfg, p, PairingKind::killing, 1e-3 * r))});
            }
            return m;
        };
        const double outer = magnitude(1e-1), inner = magnitude(1e-6);
        if (c == 1.0) {
            if (!(inner < 50.0 && outer < 50.0)) {
                ok = false;
                ss << " c=1 components not bounded (" << inner << ");";
            }
        } else if (!(inner / outer > 1e3)) {
            ok = false;
            ss << " c=" << c << " growth ratio " << inner / outer << " too small;";
        }
    }
    detail = ok ? "smooth only at c = 1; witnesses bounded at c = 1, growing otherwise" : ss.str();
    return ok;
}

// 7. holonomy limit at r = 1e4 and the O(r^{-2c}) approach rate
bool criterion_holonomy_limit(std::string& detail)
{
    bool ok = true;
    std::ostringstream ss;
    for (const double c : {1.0, 2.0}) {
        const auto cfg = FieldConfig<double>::exact(c);
        const auto h = circle_holonomy(cfg, 1e4);
        ss << "c=" << c << ": dev(1e4)=" << h.max_limit_deviation;
        ok = ok && h.max_limit_deviation < 1e-5;

        // decay order across {1e2, 1e3, 1e4}: resolved in long double (the
        // deviation at c = 2, r = 1e4 is ~6e-16, below double resolution)
        const auto lcfg = FieldConfig<long double>::exact((long double)c);
        OdeSpec fine;
        fine.step_count = 65536;
        const auto table = holonomy_convergence_profile(lcfg, {100.0L, 1000.0L, 10000.0L}, fine);
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (const auto& [r, dev] : table) {
            const double x = std::log10((double)r), y = std::log10((double)dev);
            sx += x; sy += y; sxx += x * x; sxy += x * y;
        }
        const double n = 3.0;
        const double order = -(n * sxy - sx * sy) / (n * sxx - sx * sx);
        ss << " order=" << order << " (want " << 2 * c << " +- 0.2); ";
        ok = ok && std::abs(order - 2 * c) <= 0.2;
    }
    detail = ss.str();
    return ok;
}

// 8. winding number equals the particle count
bool criterion_degree(std::string& detail)
{
    OdeSpec spec;
    spec.step_count = 4096;
    bool ok = true;
    std::ostringstream ss;
    for (const int n : {1, 2, 3, 5}) {
        for (int seed = 1; seed <= 10; ++seed) {
            std::mt19937 rng(static_cast<unsigned>(1000 * n + seed));
            std::uniform_real_distribution<double> pos(-5.0, 5.0);
            std::vector<std::array<double, 2>> centers;
            while ((int)centers.size() < n) {
                const double x = pos(rng), y = pos(rng);
                if (x * x + y * y <= 25.0) centers.push_back({x, y});
            }
            const long w = winding_number(FieldConfig<double>::multi(centers), 1e4, spec);
            if (w != n) {
                ok = false;
                ss << " N=" << n << " seed=" << seed << " got " << w << ";";
            }
        }
    }
    detail = ok ? "winding == N for N in {1,2,3,5}, 10 random draws each" : ss.str();
    return ok;
}

// 9. generator commutators and both pairing tables
bool criterion_algebra_tables(std::string& detail)
{
    double worst = 0;
    auto track = [&worst](const Mat2d& m) { worst = std::max(worst, m.cwiseAbs().maxCoeff()); };
    track(Mat2d(bracket(sigma(1), sigma(2)) - sigma(3)));
    track(Mat2d(bracket(sigma(1), sigma(3)) + sigma(2)));
    track(Mat2d(bracket(sigma(2), sigma(3)) - sigma(1)));
    track(Mat2d(bracket(tau(1), tau(2)) - tau(3)));
    track(Mat2d(bracket(tau(1), tau(3)) + tau(2)));
    track(Mat2d(bracket(tau(2), tau(3)) + tau(1)));
    const double kdiag[3] = {0.5, 0.5, -0.5};
    for (int i = 1; i <= 3; ++i) {
        for (int j = 1; j <= 3; ++j) {
            const auto k = pairing(tau(i), tau(j), PairingKind::killing);
            const auto a = pairing(tau(i), tau(j), PairingKind::conjugate);
            worst = std::max(worst, std::abs(k - std::complex<double>(i == j ? kdiag[i - 1] : 0.0)));
            worst = std::max(worst, std::abs(a - std::complex<double>(i == j ? -0.5 : 0.0)));
        }
    }
    std::ostringstream ss;
    ss << "max deviation " << worst << " (tol 1e-14)";
    detail = ss.str();
    return worst < 1e-14;
}

// 10. RK4 holonomy against the abelian closed form
bool criterion_oracle_equivalence(std::string& detail)
{
    double worst = 0;
    for (const double c : {1.0, 2.5}) {
        const auto cfg = FieldConfig<double>::exact(c);
        for (const double r : {0.5, 1.0, 10.0, 1000.0})
            worst = std::max(worst, circle_holonomy(cfg, r).abelian_max_diff);
    }
    std::ostringstream ss;
    ss << "max RK4 vs closed-form difference " << worst << " (tol 1e-8)";
    detail = ss.str();
    return worst < 1e-8;
}

// 11. calibrated matrix residuals and stability of the convention constant
bool criterion_matrix_residual(std::string& detail)
{
    const auto base = calibrate_convention(FieldConfig<double>::exact(1.0));
    if (!base.success) {
        detail = "calibration failure (reported; scalar criteria unaffected): residual " +
                 std::to_string(base.residual_after);
        return false;
    }
    bool ok = true;
    std::ostringstream ss;
    ss << "kappa = " << base.kappa.real() << "+" << base.kappa.imag() << "i";
    for (const double c : {1.5, 2.5}) {
        const auto cal = calibrate_convention(FieldConfig<double>::exact(c));
        const double drift = std::abs(cal.kappa - base.kappa);
        ss << ", |kappa(" << c << ")-kappa(1)| = " << drift;
        ok = ok && cal.success && drift < 1e-8;
    }
    const auto cfg = FieldConfig<double>::exact(1.0);
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> rad(0.3, 3.0), ang(0.0, 2 * M_PI);
    double worst = 0;
    for (int k = 0; k < 50; ++k) {
        const double r = rad(rng), th = ang(rng);
        const auto res = matrix_residual(cfg, PointT<double>{r * std::cos(th), r * std::sin(th)},
                                         1e-4, base);
        worst = std::max({worst, res.curvature, res.holomorphicity});
    }
    ss << ", max residual over 50 points " << worst << " (tol 1e-6)";
    ok = ok && worst < 1e-6;
    detail = ss.str();
    return ok;
}

} // namespace

int main()
{
    struct Criterion {
        const char* name;
        std::function<bool(std::string&)> run;
    };
    const std::vector<Criterion> criteria = {
        {"exact-family reduced residuals < 1e-10", criterion_exact_residuals},
        {"transformed-system residuals < 1e-12", criterion_transformed},
        {"action golden value pi/3 within 1e-9", criterion_action_value},
        {"convergence domain is c > 1/2", criterion_convergence_domain},
        {"positive action density (killing pairing)", criterion_positivity},
        {"smooth iff c = 1", criterion_smoothness},
        {"holonomy limit and decay order 2c", criterion_holonomy_limit},
        {"winding number counts particles", criterion_degree},
        {"algebra commutator and pairing tables", criterion_algebra_tables},
        {"RK4 vs abelian closed-form holonomy", criterion_oracle_equivalence},
        {"calibrated matrix residuals and kappa stability", criterion_matrix_residual},
    };

    int failures = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        std::string detail;
        bool pass = false;
        const auto t0 = Clock::now();
        try {
            pass = criteria[k].run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double dt = elapsed_s(t0);
        std::printf("[%s] %2zu. %s — %s (%.2f s)\n", pass ? "PASS" : "FAIL", k + 1,
                    criteria[k].name, detail.c_str(), dt);
        if (!pass) ++failures;
    }
    std::printf("ACCEPTANCE: %zu/%zu criteria passed\n", criteria.size() - failures,
                criteria.size());
    return failures == 0 ? 0 : 1;
}
