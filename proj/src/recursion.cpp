#include "arcwalk/recursion.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <string>
#include <mutex>
#include <thread>

#include "arcwalk/errors.hpp"
#include "arcwalk/parallel.hpp"
#include "arcwalk/quadrature.hpp"

namespace arcwalk {

ArcLaw::ArcLaw(const WalkConfig& cfg) : cfg_(cfg)
{
    if (cfg.n_steps() != 1) {
        throw DomainError("single-step law needs n_steps == 1, got " + std::to_string(cfg.n_steps()));
    }
    if (cfg.extended()) throw DomainError("single-step law source needs a <= pi/2");
    double const a = cfg.max_angle();
    const auto& rule = quad::gauss_legendre(64);
    constexpr int panels = 8;
    double const h = 2 * a / panels;
    for (int p = 0; p < panels; ++p) {
        double const mid = -a + h * (p + 0.5);
        for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
            measure_.push_back({1.0, mid + 0.5 * h * rule.nodes[k], 0.5 * h * rule.weights[k] / (2 * a)});
        }
    }
}

double ArcLaw::density(double, double) const
{
    throw DomainError("a single step is concentrated on the unit arc and has no joint density");
}

double ArcLaw::next_density(double r, double theta) const
{
    if (!(r > 0) || r >= 2) return 0.0;
    double const a = cfg_.max_angle();
    double const alpha = std::acos(r / 2);
    double const sin_alpha = std::sin(alpha);
    double sum = 0;
    // The two steps sit at theta +- alpha, in either order.
    for (double sign : {1.0, -1.0}) {
        double const last = theta + sign * alpha;
        double const first = theta - sign * alpha;
        if (std::abs(last) <= a && std::abs(first) <= a) sum += 1 / (4 * a * a * sin_alpha);
    }
    return sum;
}

ExactTwoStepLaw::ExactTwoStepLaw(const WalkConfig& cfg) : cfg_(cfg), exact_(cfg)
{
    // With u half the gap between the two step angles and t their mean,
    // (u, t) is uniform with density 1/a^2 on 0 <= u <= a, |t| <= a - u,
    // and R = 2 cos u.
    double const a = cfg.max_angle();
    const auto& rule = quad::gauss_legendre(256);
    double const hu = 0.5 * a;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        double const u = hu * (rule.nodes[i] + 1);
        double const wu = hu * rule.weights[i];
        double const half = a - u;
        for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
            double const t = half * rule.nodes[k];
            measure_.push_back({2 * std::cos(u), t, wu * half * rule.weights[k] / (a * a)});
        }
    }
}

double ExactTwoStepLaw::density(double r, double theta) const
{
    return exact_.joint_pdf(r, theta);
}

namespace {

template<class Body>
void parallel_rows(std::size_t rows, int threads, Body&& body)
{
    auto const workers = static_cast<std::size_t>(std::max(1, threads));
    if (workers == 1 || rows < 2) {
        for (std::size_t i = 0; i < rows; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto run = [&] {
        try {
            for (std::size_t i = next++; i < rows; i = next++) body(i);
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next = rows;
        }
    };
    std::vector<std::jthread> pool;
    for (std::size_t w = 1; w < std::min(workers, rows); ++w) pool.emplace_back(run);
    run();
    pool.clear();
    if (failure) std::rethrow_exception(failure);
}

/// One target node of the joint-density recursion: integrates
/// r / (2a) * f_prev(rho, psi) / rho over the pieces of [-a, a] on which
/// the back-mapped point z - e^{j phi} lies in the previous support.
double propagate_node(const JointLaw& prev, const SupportBoundary& prev_support, double r,
                      double theta, const quad::GaussRule& rule)
{
    double const a = prev.config().max_angle();
    Complex const z = std::polar(r, theta);
    std::vector<double> cuts = prev_support.unit_step_crossings(z);
    cuts.push_back(-a);
    cuts.push_back(a);
    std::sort(cuts.begin(), cuts.end());

    auto integrand = [&](double phi) {
        Complex const back = z - std::polar(1.0, phi);
        double const rho = std::abs(back);
        if (rho < 1e-300) return 0.0;
        return prev.density(rho, std::atan2(back.imag(), back.real())) / rho;
    };
    double sum = 0;
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
        double const lo = cuts[k];
        double const hi = cuts[k + 1];
        if (!(hi > lo)) continue;
        if (!prev_support.encloses(z - std::polar(1.0, 0.5 * (lo + hi)))) continue;
        sum += quad::integrate_smoothstep(integrand, lo, hi, rule);
    }
    return r / (2 * a) * sum;
}

}  // namespace

PolarGridDistribution propagate(const JointLaw& prev, const GridOptions& opts)
{
    const WalkConfig& prev_cfg = prev.config();
    if (prev_cfg.extended()) throw GridError("propagation needs a <= pi/2");
    WalkConfig const cfg = prev_cfg.with_steps(prev_cfg.n_steps() + 1);
    if (opts.region != GridRegion::support) {
        throw GridError("propagation targets the support region only");
    }

    if (prev_cfg.n_steps() == 1) {
        const auto* arc = dynamic_cast<const ArcLaw*>(&prev);
        if (arc == nullptr) throw GridError("single-step source must be the unit-arc law");
        return PolarGridDistribution::tabulate(
            cfg, opts, [arc](double r, double theta) { return arc->next_density(r, theta); });
    }
    if (const auto* grid = dynamic_cast<const PolarGridDistribution*>(&prev)) {
        if (grid->options().region != GridRegion::support) {
            throw GridError("previous grid must cover the support region");
        }
    }

    PolarGridDistribution out = PolarGridDistribution::layout(cfg, opts);
    SupportBoundary const prev_support(prev_cfg);
    const auto& rule = quad::gauss_legendre(static_cast<std::size_t>(opts.phi_nodes));
    auto const radii = out.radii();
    auto const angles = out.angles();
    std::size_t const na = angles.size();
    std::vector<double> values(radii.size() * na, 0.0);
    int const threads = opts.threads > 0 ? opts.threads : default_thread_count();

    parallel_rows(radii.size(), threads, [&](std::size_t i) {
        for (std::size_t j = na / 2; j < na; ++j) {
            if (!out.in_region(i, j)) continue;
            double const v = propagate_node(prev, prev_support, radii[i], angles[j], rule);
            values[i * na + j] = v;
            values[i * na + (na - 1 - j)] = v;
        }
    });
    out.assign(std::move(values));
    return out;
}

PolarGridDistribution compute_joint(const WalkConfig& cfg, const GridOptions& opts,
                                    const StepObserver& observer)
{
    int const n = cfg.n_steps();
    if (n < 2) throw DomainError("joint density needs at least two steps");
    auto report = [&](const PolarGridDistribution& g) {
        if (observer) observer(g.config().n_steps(), g.normalization());
    };
    if (n == 2) {
        auto g = propagate(ArcLaw(cfg.with_steps(1)), opts);
        report(g);
        return g;
    }
    auto g = propagate(ExactTwoStepLaw(cfg.with_steps(2)), opts);
    report(g);
    while (g.config().n_steps() < n) {
        g = propagate(g, opts);
        report(g);
    }
    return g;
}

double cdf_radius_recursive(double r, const JointLaw& prev)
{
    if (r < 0) throw DomainError("radius must be nonnegative, got " + std::to_string(r));
    const WalkConfig& cfg = prev.config();
    if (r >= cfg.n_steps() + 1) return 1.0;
    double sum = 0;
    for (const WeightedPoint& p : prev.measure()) {
        double const x = p.radius;
        double c;
        if (x > 1e-300) {
            c = (r * r - x * x - 1) / (2 * x);
        } else {
            c = r >= 1 ? 1.0 : -1.0;
        }
        double const spread = std::acos(std::clamp(c, -1.0, 1.0));
        double const bracket = step_angle_cdf(p.angle + spread, cfg) - step_angle_cdf(p.angle - spread, cfg);
        sum += p.weight * (1 - bracket);
    }
    return std::clamp(sum, 0.0, 1.0);
}

double cdf_angle_approx(double theta, const JointLaw& prev)
{
    const WalkConfig& cfg = prev.config();
    double sum = 0;
    for (const WeightedPoint& p : prev.measure()) {
        sum += p.weight * step_angle_cdf(theta * (1 + p.radius) - p.radius * p.angle, cfg);
    }
    return std::clamp(sum, 0.0, 1.0);
}

double pdf_angle_approx(double theta, const JointLaw& prev)
{
    const WalkConfig& cfg = prev.config();
    double sum = 0;
    for (const WeightedPoint& p : prev.measure()) {
        sum += p.weight * (1 + p.radius)
               * step_angle_pdf(theta * (1 + p.radius) - p.radius * p.angle, cfg);
    }
    return sum;
}

}  // namespace arcwalk
