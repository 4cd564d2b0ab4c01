// Acceptance run: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "arcwalk/exact_two.hpp"
#include "arcwalk/genchi2.hpp"
#include "arcwalk/large_n.hpp"
#include "arcwalk/monte_carlo.hpp"
#include "arcwalk/quadrature.hpp"
#include "arcwalk/recursion.hpp"
#include "arcwalk/support.hpp"
#include "cli.hpp"

using namespace arcwalk;

namespace tol {
// 1
constexpr double exact_two_ks = 0.005;
constexpr double exact_two_seconds = 30;
constexpr std::int64_t exact_two_samples = 1'000'000;
// 2
constexpr double constant_abs = 0.001;
constexpr double threshold_vs_rounded = 0.005;  // 0.9553 against "around 0.96"
constexpr double threshold_limit = 1e-5;
// 3
constexpr double cell_error = 5e-3;
constexpr double cdf_error = 5e-3;
// 4
constexpr double n3_ks = 0.01;
constexpr double n3_bin_sigmas = 3;
constexpr double n3_bin_fraction = 0.95;
constexpr double n3_seconds = 600;
constexpr std::int64_t n3_samples = 10'000'000;
constexpr int bins = 200;
// 5
constexpr double closed_form = 1e-8;
constexpr double genchi2_ks = 0.005;
constexpr int genchi2_sets = 20;
constexpr std::int64_t genchi2_draws = 1'000'000;
// 6
constexpr double large_n_ks = 0.01;
constexpr double small_n_ks_floor = 0.02;
constexpr std::int64_t large_n_samples = 10'000'000;
constexpr double mode_lo = 28.5;
constexpr double mode_hi = 29.0;
constexpr double support_mass = 0.99;
// 7
constexpr double fd_relative = 1e-6;
constexpr double symmetry = 1e-12;
constexpr double containment = 1e-9;
constexpr double cdf_slack = 1e-9;
constexpr double pdf_norm = 1e-6;
// KS brackets
constexpr int checkpoints = 2000;
}  // namespace tol

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;

void verdict(int id, bool pass, const std::string& detail)
{
    if (!pass) ++failures;
    std::printf("CRITERION %d: %s  %s\n", id, pass ? "PASS" : "FAIL", detail.c_str());
    std::fflush(stdout);
}

std::string fmt(const char* f, auto... args)
{
    char buf[1024];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

void note(const std::string& s)
{
    std::printf("  %s\n", s.c_str());
    std::fflush(stdout);
}

// ---------------------------------------------------------------------------

void criterion_1()
{
    auto const t0 = Clock::now();
    double worst = 0;
    for (double a : {0.5, pi / 4, pi / 2}) {
        auto const cfg = validate_config(2, a);
        ExactTwoStep const law(cfg);
        auto const batch = sample_walk(cfg, tol::exact_two_samples, 1000 + static_cast<std::uint64_t>(a * 1000));
        double const ks_r = ks_distance(empirical_cdf(batch.radii()), [&](double r) { return law.cdf_radius(r); });
        double const ks_t = ks_distance(empirical_cdf(batch.angles()), [&](double t) { return law.cdf_angle(t); });
        note(fmt("a=%.6f KS radius %.5f, KS angle %.5f", a, ks_r, ks_t));
        worst = std::max({worst, ks_r, ks_t});
    }
    double const elapsed = seconds_since(t0);
    verdict(1, worst < tol::exact_two_ks && elapsed < tol::exact_two_seconds,
            fmt("max KS %.5f (< %.3f), %.1f s (< %.0f s)", worst, tol::exact_two_ks, elapsed, tol::exact_two_seconds));
}

void criterion_2()
{
    double const r3 = min_radius(validate_config(3, 0.85));
    double const r4 = min_radius(validate_config(4, 1.4));
    double const u4 = uniqueness_threshold(4);
    double const u_inf = uniqueness_threshold(1'000'000);
    bool const pass = std::abs(r3 - 2.118) <= tol::constant_abs && std::abs(r4 - 0.680) <= tol::constant_abs
                      && std::abs(u4 - 0.9553) <= tol::constant_abs
                      && std::abs(u4 - 0.96) <= tol::threshold_vs_rounded
                      && std::abs(u_inf - pi / 4) <= tol::threshold_limit;
    verdict(2, pass,
            fmt("r_min(3,0.85)=%.6f r_min(4,1.4)=%.6f threshold(4)=%.6f |threshold(1e6)-pi/4|=%.2e", r3, r4, u4,
                std::abs(u_inf - pi / 4)));
}

void criterion_3()
{
    auto const cfg = validate_config(2, 0.5);
    ArcLaw const arc(cfg.with_steps(1));
    auto const grid = propagate(arc);
    ExactTwoStep const exact(cfg);
    // Values before the mass renormalization; the density diverges at r = 2
    // so any factor near 1 would move the largest cells by more than the
    // propagation error.
    double cell = 0;
    for (std::size_t i = 0; i < grid.radii().size(); ++i) {
        for (std::size_t j = 0; j < grid.angles().size(); ++j) {
            double const raw = grid.at(i, j) / grid.normalization();
            cell = std::max(cell, std::abs(raw - exact.joint_pdf(grid.radii()[i], grid.angles()[j])));
        }
    }
    double renormalized = 0;
    for (std::size_t i = 0; i < grid.radii().size(); ++i) {
        for (std::size_t j = 0; j < grid.angles().size(); ++j) {
            renormalized = std::max(renormalized, std::abs(grid.at(i, j) - exact.joint_pdf(grid.radii()[i], grid.angles()[j])));
        }
    }
    double cdf = 0;
    for (int k = 0; k <= 2000; ++k) {
        double const r = 1.7 + 0.3 * k / 2000;
        cdf = std::max(cdf, std::abs(cdf_radius_recursive(r, arc) - exact.cdf_radius(r)));
    }
    note(fmt("grid %zux%zu, raw mass %.8f; after renormalization max cell error %.3e", grid.radii().size(),
             grid.angles().size(), grid.raw_mass(), renormalized));
    verdict(3, cell < tol::cell_error && cdf < tol::cdf_error,
            fmt("max cell error %.3e (< %.0e), max radius CDF error %.3e (< %.0e)", cell, tol::cell_error, cdf,
                tol::cdf_error));
}

void criterion_4()
{
    auto const t0 = Clock::now();
    auto const cfg = validate_config(3, 0.5);
    auto const grid = compute_joint(cfg);
    ExactTwoStepLaw const prev(cfg.with_steps(2));
    double const grid_seconds = seconds_since(t0);

    auto const batch = sample_walk(cfg, tol::n3_samples, 3);
    auto const radii = empirical_cdf(batch.radii());
    auto const angles = empirical_cdf(batch.angles());

    auto const ks = ks_distance_bracket(radii, [&](double r) { return cdf_radius_recursive(r, prev); }, tol::checkpoints);
    double const ks_grid = ks_distance(radii, [&](double r) { return grid.cdf_radius(r); });

    auto const hist = angles.histogram(tol::bins, -0.5, 0.5);
    int good = 0;
    double worst_sigma = 0;
    for (std::size_t b = 0; b < hist.counts.size(); ++b) {
        double const model = (grid.cdf_angle(hist.edges[b + 1]) - grid.cdf_angle(hist.edges[b])) / hist.width(b);
        double const se = hist.density_std_error(b);
        double const dev = std::abs(hist.density(b) - model);
        if (dev < tol::n3_bin_sigmas * se) ++good;
        if (se > 0) worst_sigma = std::max(worst_sigma, dev / se);
    }
    double const fraction = static_cast<double>(good) / tol::bins;
    double const elapsed = seconds_since(t0);
    note(fmt("grid %.1f s; KS radius bracket [%.5f, %.5f] (recursive CDF), exact KS vs grid CDF %.5f", grid_seconds,
             ks.lower, ks.upper, ks_grid));
    note(fmt("angle bins within %.0f SE: %d/%d, largest deviation %.2f SE", tol::n3_bin_sigmas, good, tol::bins,
             worst_sigma));
    verdict(4, ks.upper < tol::n3_ks && fraction >= tol::n3_bin_fraction && elapsed < tol::n3_seconds,
            fmt("KS radius <= %.5f (< %.2f), bins ok %.1f%% (>= %.0f%%), %.1f s (< %.0f s)", ks.upper, tol::n3_ks,
                100 * fraction, 100 * tol::n3_bin_fraction, elapsed, tol::n3_seconds));
}

double draw(const GenChi2Params& p, CounterRng& rng)
{
    double x = p.offset + p.gaussian_sd * rng.normal();
    for (std::size_t j = 0; j < p.weights.size(); ++j) {
        double q = 0;
        for (int d = 0; d < p.dofs[j]; ++d) {
            double const z = rng.normal() + (d == 0 ? std::sqrt(p.noncentralities[j]) : 0.0);
            q += z * z;
        }
        x += p.weights[j] * q;
    }
    return x;
}

void criterion_5()
{
    GeneralizedChiSquare const chi2_2({{1}, {2}, {0}});
    GeneralizedChiSquare const z2({{1}, {1}, {0}});
    double closed = 0;
    for (double x : {0.05, 0.5, 1.0, 2.0, 4.0, 10.0}) {
        closed = std::max(closed, std::abs(chi2_2.cdf_by_inversion(x) - (1 - std::exp(-x / 2))));
        closed = std::max(closed, std::abs(chi2_2.pdf_by_inversion(x) - std::exp(-x / 2) / 2));
        double const rt = std::sqrt(x);
        closed = std::max(closed, std::abs(z2.cdf_by_inversion(x) - (2 * normal_cdf(rt) - 1)));
        closed = std::max(closed, std::abs(z2.pdf_by_inversion(x) - normal_pdf(rt) / rt));
    }

    CounterRng pick(5, 0);
    double worst = 0;
    for (int set = 0; set < tol::genchi2_sets; ++set) {
        GenChi2Params p;
        int const terms = 1 + static_cast<int>(pick.uniform() * 3);
        for (int j = 0; j < terms; ++j) {
            double w = 0;
            while (std::abs(w) < 0.05) w = 10 * pick.uniform() - 5;
            p.weights.push_back(w);
            p.dofs.push_back(1 + static_cast<int>(pick.uniform() * 3));
            p.noncentralities.push_back(4 * pick.uniform());
        }
        GeneralizedChiSquare const g(p);
        CounterRng rng(500 + static_cast<std::uint64_t>(set), 1);
        std::vector<double> xs(static_cast<std::size_t>(tol::genchi2_draws));
        for (double& x : xs) x = draw(p, rng);
        auto const ks = ks_distance_bracket(empirical_cdf(std::move(xs)), [&](double x) { return g.cdf(x); },
                                            tol::checkpoints);
        worst = std::max(worst, ks.upper);
    }
    verdict(5, closed < tol::closed_form && worst < tol::genchi2_ks,
            fmt("closed-form max error %.2e (< %.0e), max KS over %d sets <= %.5f (< %.3f)", closed, tol::closed_form,
                tol::genchi2_sets, worst, tol::genchi2_ks));
}

void criterion_6()
{
    auto const cfg = validate_config(30, 0.5);
    LargeNModel const model(cfg);
    auto const batch = sample_walk(cfg, tol::large_n_samples, 30);
    auto const ks_r = ks_distance_bracket(empirical_cdf(batch.radii()), [&](double r) { return model.cdf_radius(r); },
                                          tol::checkpoints);
    double const ks_t = ks_distance(empirical_cdf(batch.angles()), [&](double t) { return model.cdf_angle(t); });

    auto const cfg5 = validate_config(5, 0.5);
    LargeNModel const model5(cfg5);
    auto const batch5 = sample_walk(cfg5, tol::large_n_samples, 5);
    auto const ks5 = ks_distance_bracket(empirical_cdf(batch5.radii()), [&](double r) { return model5.cdf_radius(r); },
                                         tol::checkpoints);

    double best = 0;
    double mode = 0;
    for (int i = 0; i <= 4000; ++i) {
        double const r = 27.5 + i * 0.0005;
        double const v = model.pdf_radius(r);
        if (v > best) {
            best = v;
            mode = r;
        }
    }
    double const mass = model.support_mass();

    note(fmt("N=30: KS radius in [%.5f, %.5f], KS angle %.5f", ks_r.lower, ks_r.upper, ks_t));
    note(fmt("N=5: KS radius in [%.5f, %.5f] (reported; must exceed %.2f)", ks5.lower, ks5.upper,
             tol::small_n_ks_floor));
    note(fmt("N=30: radius mode %.4f, in-support mass of the joint %.7f", mode, mass));
    // A KS bracket decides only when it lies on one side of the bound.
    bool const pass = ks_r.upper < tol::large_n_ks && ks_t < tol::large_n_ks && ks5.lower > tol::small_n_ks_floor
                      && mode >= tol::mode_lo && mode <= tol::mode_hi && mass >= tol::support_mass;
    verdict(6, pass,
            fmt("KS radius >= %.5f vs < %.2f; KS angle %.5f; N=5 KS >= %.4f; mode %.3f; mass %.5f", ks_r.lower,
                tol::large_n_ks, ks_t, ks5.lower, mode, mass));
}

// Criterion 7 --------------------------------------------------------------

struct Audit {
    int checks = 0;
    std::vector<std::string> failed;
    void expect(bool ok, const std::string& what)
    {
        ++checks;
        if (!ok && failed.size() < 20) failed.push_back(what);
        else if (!ok) failed.back() = "...";
    }
};

void cdf_sweep(Audit& au, const std::string& name, const std::function<double(double)>& F, double lo, double hi,
               int points = 1000)
{
    double last = -1;
    bool mono = true;
    bool bounded = true;
    for (int k = 0; k <= points; ++k) {
        double const v = F(lo + (hi - lo) * k / points);
        mono &= v >= last - tol::cdf_slack;
        bounded &= v >= -tol::cdf_slack && v <= 1 + tol::cdf_slack;
        last = v;
    }
    au.expect(mono, name + " nondecreasing");
    au.expect(bounded, name + " within [0, 1]");
}

void fd_check(Audit& au, const std::string& name, const std::function<double(double)>& F,
              const std::function<double(double)>& f, const std::vector<double>& xs, double h)
{
    for (double x : xs) {
        double const fd = (F(x + h) - F(x - h)) / (2 * h);
        double const ref = f(x);
        au.expect(ref >= 0 && std::abs(fd - ref) <= tol::fd_relative * ref, name + fmt(" FD at %.6g", x));
    }
}

double integrate(const std::function<double(double)>& f, std::vector<double> breaks, int panels = 64)
{
    const auto& rule = quad::gauss_legendre(20);
    double sum = 0;
    for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
        sum += quad::integrate_composite(f, breaks[k], breaks[k + 1], static_cast<std::size_t>(panels), rule);
    }
    return sum;
}

void criterion_7()
{
    Audit au;

    // Exact two-step law.
    for (double a : {0.5, pi / 4, pi / 2}) {
        ExactTwoStep const e(validate_config(2, a));
        std::string const tag = fmt("exact2 a=%.4f", a);
        cdf_sweep(au, tag + " radius CDF", [&](double r) { return e.cdf_radius(r); }, 0, 2.2);
        cdf_sweep(au, tag + " angle CDF", [&](double t) { return e.cdf_angle(t); }, -a - 0.1, a + 0.1);
        double const lo = 2 * std::cos(a);
        // r = 2 cos u removes the edge singularity at r = 2.
        double const mass_r = integrate([&](double u) { return e.pdf_radius(2 * std::cos(u)) * 2 * std::sin(u); }, {0, a});
        double const mass_t = integrate([&](double t) { return e.pdf_angle(t); }, {-a, 0, a});
        au.expect(std::abs(mass_r - 1) < tol::pdf_norm, tag + " radius pdf mass");
        au.expect(std::abs(mass_t - 1) < tol::pdf_norm, tag + " angle pdf mass");
        std::vector<double> rs;
        std::vector<double> ts;
        for (int k = 1; k < 10; ++k) {
            rs.push_back(lo + (2 - lo) * (0.05 + 0.9 * k / 10));
            ts.push_back(a * (-0.95 + 1.9 * k / 10));
        }
        // The angle density has a kink at 0; FD there is not a derivative.
        std::erase_if(ts, [](double t) { return std::abs(t) < 1e-9; });
        fd_check(au, tag + " radius", [&](double r) { return e.cdf_radius(r); },
                 [&](double r) { return e.pdf_radius(r); }, rs, 1e-6);
        fd_check(au, tag + " angle", [&](double t) { return e.cdf_angle(t); },
                 [&](double t) { return e.pdf_angle(t); }, ts, 1e-6);
        for (double t : ts) {
            au.expect(e.pdf_angle(t) == e.pdf_angle(-t), tag + " angle symmetry");
            au.expect(e.joint_pdf(0.5 * (lo + 2), t) == e.joint_pdf(0.5 * (lo + 2), -t), tag + " joint symmetry");
        }
    }

    // Generalized chi-square.
    for (const GenChi2Params& p : std::vector<GenChi2Params>{{{1, 2}, {3, 2}, {0, 1}},
                                                             {{2, -3}, {1, 2}, {1, 0.5}},
                                                             {{1}, {4}, {2}, 0.3, 1},
                                                             {{-0.5, 1.5}, {2, 3}, {3, 0}, 0.2, -2}}) {
        GeneralizedChiSquare const g(p);
        double const sd = std::sqrt(g.variance());
        double const lo = g.mean() - 40 * sd;
        double const hi = g.mean() + 40 * sd;
        std::string const tag = fmt("genchi2 w0=%.2f", p.weights[0]);
        cdf_sweep(au, tag + " CDF", [&](double x) { return g.cdf(x); }, lo, hi, 400);
        // Adaptive, split at the offset where the density may have a root kink.
        boost::math::quadrature::gauss_kronrod<double, 31> gk;
        auto const pdf = [&](double x) { return g.pdf(x); };
        double mass = gk.integrate(pdf, p.offset, hi, 15, 1e-12);
        if (lo < p.offset) mass += gk.integrate(pdf, lo, p.offset, 15, 1e-12);
        au.expect(std::abs(mass - 1) < tol::pdf_norm, tag + fmt(" pdf mass %.9f", mass));
        std::vector<double> xs;
        for (int k = 1; k < 10; ++k) {
            double const x = g.mean() + sd * (-2 + 4.0 * k / 10);
            if (std::abs(x - p.offset) > 0.05 * sd) xs.push_back(x);
        }
        for (double x : xs) {
            fd_check(au, tag, [&](double y) { return g.cdf(y); }, pdf, {x}, std::max(1e-5, 1e-5 * std::abs(x)));
        }
    }

    // Large-N model.
    for (double a : {0.5, 1.0}) {
        LargeNModel const m(validate_config(30, a));
        std::string const tag = fmt("large-N a=%.2f", a);
        double const mu = 30 * m.moments().mean_x;
        double const sr = std::sqrt(30 * m.moments().var_x);
        double const st = std::sqrt(m.moments().var_y / 30) / m.moments().mean_x;
        cdf_sweep(au, tag + " radius CDF", [&](double r) { return m.cdf_radius(r); }, 0, 30, 400);
        cdf_sweep(au, tag + " angle CDF", [&](double t) { return m.cdf_angle(t); }, -1.5, 1.5);
        double const mass_r = integrate([&](double r) { return m.pdf_radius(r); }, {std::max(0.0, mu - 12 * sr), mu + 12 * sr}, 40);
        double const mass_t = integrate([&](double t) { return m.pdf_angle(t); }, {-1.5, 0, 1.5}, 200);
        au.expect(std::abs(mass_r - 1) < 1e-4, tag + fmt(" radius pdf mass %.9f", mass_r));
        au.expect(std::abs(mass_t - 1) < tol::pdf_norm, tag + fmt(" angle pdf mass %.9f", mass_t));
        std::vector<double> rs;
        std::vector<double> ts;
        for (int k = 1; k < 10; ++k) {
            rs.push_back(mu + sr * (-2 + 4.0 * k / 10));
            ts.push_back(st * (-2 + 4.0 * k / 10));
        }
        fd_check(au, tag + " radius", [&](double r) { return m.cdf_radius(r); },
                 [&](double r) { return m.pdf_radius(r); }, rs, 1e-5);
        fd_check(au, tag + " angle", [&](double t) { return m.cdf_angle(t); },
                 [&](double t) { return m.pdf_angle(t); }, ts, 1e-6);
        for (double t : ts) {
            au.expect(m.pdf_angle(t) == m.pdf_angle(-t), tag + " angle symmetry");
            au.expect(m.joint_pdf(mu, t) == m.joint_pdf(mu, -t), tag + " joint symmetry");
        }
    }

    // Numerical recursion.
    {
        auto const cfg = validate_config(3, 0.5);
        auto const grid = compute_joint(cfg);
        ExactTwoStepLaw const prev(cfg.with_steps(2));
        cdf_sweep(au, "recursion radius CDF", [&](double r) { return cdf_radius_recursive(r, prev); }, 2.5, 3.1);
        cdf_sweep(au, "recursion angle CDF", [&](double t) { return cdf_angle_approx(t, prev); }, -0.6, 0.6);
        cdf_sweep(au, "grid radius CDF", [&](double r) { return grid.cdf_radius(r); }, 2.5, 3.1);
        cdf_sweep(au, "grid angle CDF", [&](double t) { return grid.cdf_angle(t); }, -0.6, 0.6);
        au.expect(std::abs(grid.raw_mass() - 1) <= grid.options().grid_tol, "grid raw mass");
        au.expect(std::abs(grid.mass() - 1) < 1e-12, "grid mass after renormalization");
        std::size_t const na = grid.angles().size();
        bool sym = true;
        bool nonneg = true;
        for (std::size_t i = 0; i < grid.radii().size(); ++i) {
            for (std::size_t j = 0; j < na; ++j) {
                sym &= grid.at(i, j) == grid.at(i, na - 1 - j);
                nonneg &= grid.at(i, j) >= 0;
            }
        }
        au.expect(sym, "grid symmetry");
        au.expect(nonneg, "grid nonnegative");
        for (double t : {0.02, 0.1, 0.3}) {
            au.expect(std::abs(pdf_angle_approx(t, prev) - pdf_angle_approx(-t, prev)) < tol::symmetry,
                      "approximate angle pdf symmetry");
            au.expect(grid.density(2.8, t) == grid.density(2.8, -t), "grid interpolation symmetry");
        }
        auto const ma = grid.marginal_angle();
        bool msym = true;
        for (std::size_t j = 0; j < na; ++j) msym &= std::abs(ma[j] - ma[na - 1 - j]) <= tol::symmetry * (1 + ma[j]);
        au.expect(msym, "grid angle marginal symmetry");
    }

    // Monte-Carlo endpoints inside the support.
    long outside = 0;
    for (int n : {2, 3, 4, 5, 30}) {
        for (double a : {0.5, pi / 4, pi / 2}) {
            auto const cfg = validate_config(n, a);
            SupportBoundary const s(cfg);
            auto const batch = sample_walk(cfg, 100'000, 70 + static_cast<std::uint64_t>(n));
            for (const auto& p : batch.samples) outside += s.contains(p, tol::containment) ? 0 : 1;
        }
    }
    au.expect(outside == 0, fmt("%ld MC endpoints outside the support", outside));

    std::string detail = fmt("%d checks, %zu failed", au.checks, au.failed.size());
    for (const auto& f : au.failed) detail += "; " + f;
    verdict(7, au.failed.empty(), detail);
}

void criterion_8()
{
    auto report = [](const std::string& regime, int threads) {
        cli::RunSpec spec;
        spec.command = "compare";
        spec.regime = regime;
        spec.n_steps = regime == "exact2" ? 2 : (regime == "recurse" ? 3 : 30);
        spec.max_angle = 0.5;
        spec.count = 200'000;
        spec.seed = 7;
        spec.threads = threads;
        spec.grid_r = 200;
        spec.grid_theta = 200;
        spec.checkpoints = 500;
        spec.format = cli::Format::json;
        std::ostringstream out;
        std::ostringstream err;
        int const status = cli::run(spec, out, err);
        return std::make_pair(status, out.str());
    };
    bool pass = true;
    std::string detail;
    for (const char* regime : {"exact2", "recurse", "approx"}) {
        auto const a = report(regime, 1);
        auto const b = report(regime, 1);
        auto const c = report(regime, 3);
        bool const same = a.first == 0 && a == b && a == c;
        pass &= same;
        detail += fmt("%s %s (%zu bytes); ", regime, same ? "identical" : "DIFFER", a.second.size());
    }
    verdict(8, pass, detail);
}

}  // namespace

int main()
{
    auto const t0 = Clock::now();
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    std::printf("acceptance: %d of 8 criteria failed, %.0f s\n", failures, seconds_since(t0));
    return failures;
}
