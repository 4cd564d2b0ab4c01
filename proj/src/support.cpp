#include "arcwalk/support.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "arcwalk/errors.hpp"

namespace arcwalk {
namespace {

constexpr double angle_eps = 1e-12;

double cross(Complex u, Complex v)
{
    return u.real() * v.imag() - u.imag() * v.real();
}

// Angles alpha (in [lo, hi]) with cos(alpha - base) == c.
void push_cos_solutions(double base, double c, double lo, double hi,
                        std::vector<double>& out)
{
    if (c > 1 || c < -1) return;
    double const delta = std::acos(c);
    for (double cand : {base - delta, base + delta}) {
        // Wrap into (-pi, pi].
        cand = std::remainder(cand, 2 * pi);
        if (cand >= lo && cand <= hi) out.push_back(cand);
    }
}

std::vector<Interval> merge_inside(const std::vector<double>& cuts,
                                   auto&& inside_at)
{
    std::vector<Interval> out;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        double const lo = cuts[i];
        double const hi = cuts[i + 1];
        if (!(hi > lo)) continue;
        if (!inside_at(0.5 * (lo + hi))) continue;
        if (!out.empty() && out.back().hi >= lo) {
            out.back().hi = hi;
        } else {
            out.push_back({lo, hi});
        }
    }
    return out;
}

}  // namespace

double min_radius(const WalkConfig& cfg)
{
    int const n = cfg.n_steps();
    double const lo = n / 2;
    double const hi = n - n / 2;
    double const a = cfg.max_angle();
    double const sq = hi * hi + lo * lo + 2 * lo * hi * std::cos(2 * a);
    return std::sqrt(std::max(sq, 0.0));
}

double uniqueness_threshold(int n_steps)
{
    if (n_steps < 2) {
        throw DomainError("uniqueness threshold needs at least 2 steps, got "
                          + std::to_string(n_steps));
    }
    return 0.5 * std::acos(-1.0 / (n_steps - 1));
}

bool is_radius_function_of_angle(const WalkConfig& cfg)
{
    if (cfg.n_steps() == 1) return true;
    return cfg.max_angle() <= uniqueness_threshold(cfg.n_steps());
}

SupportBoundary::SupportBoundary(const WalkConfig& cfg)
    : cfg_(cfg),
      outer_{Complex(0, 0), static_cast<double>(cfg.n_steps())},
      min_radius_(arcwalk::min_radius(cfg)),
      unique_(is_radius_function_of_angle(cfg))
{
    if (cfg.extended()) throw DomainError("support geometry needs a <= pi/2");
    int const n = cfg.n_steps();
    double const a = cfg.max_angle();
    Complex const up = std::polar(1.0, a);
    Complex const down = std::polar(1.0, -a);
    inner_.reserve(n);
    for (int k = 0; k < n; ++k) {
        inner_.push_back({static_cast<double>(k) * up + static_cast<double>(n - 1 - k) * down, 1.0});
    }
    junction_angles_.reserve(n + 1);
    for (int k = 0; k <= n; ++k) {
        junction_angles_.push_back(std::atan2((2 * k - n) * std::sin(a), n * std::cos(a)));
    }
}

PolarPoint SupportBoundary::outer_boundary(double phi) const
{
    if (std::abs(phi) > cfg_.max_angle() + angle_eps) {
        throw DomainError("outer boundary angle must satisfy |phi| <= a");
    }
    return {static_cast<double>(cfg_.n_steps()), phi};
}

BoundarySample SupportBoundary::inner_boundary(double t) const
{
    if (!(t >= 0 && t <= 1)) {
        throw DomainError("boundary parameter must lie in [0, 1], got " + std::to_string(t));
    }
    int const n = cfg_.n_steps();
    double const a = cfg_.max_angle();
    double const nt = n * t;
    int const k = std::clamp(static_cast<int>(std::ceil(nt - 1)), 0, n - 1);
    double const phi = std::clamp(a * (2 * (nt - k) - 1), -a, a);
    double const x = (n - 1) * std::cos(a) + std::cos(phi);
    double const y = (2 * k - n + 1) * std::sin(a) + std::sin(phi);
    return {t, {std::hypot(x, y), std::atan2(y, x)}, k, phi};
}

double SupportBoundary::inner_radius_at_angle(double theta) const
{
    if (!unique_) {
        throw DomainError("inner boundary radius is not a function of the angle for this configuration");
    }
    double const a = cfg_.max_angle();
    theta = std::clamp(theta, -a, a);
    if (cfg_.n_steps() == 1) return 1.0;
    auto it = std::upper_bound(junction_angles_.begin(), junction_angles_.end(), theta);
    auto const k = std::clamp<std::ptrdiff_t>(it - junction_angles_.begin() - 1, 0,
                                              static_cast<std::ptrdiff_t>(inner_.size()) - 1);
    Complex const c = inner_[static_cast<std::size_t>(k)].center;
    Complex const u = std::polar(1.0, theta);
    // |s u - c| = 1
    double const b = u.real() * c.real() + u.imag() * c.imag();
    double const disc = b * b - (std::norm(c) - 1);
    double const root = std::sqrt(std::max(disc, 0.0));
    double best = -1;
    for (double s : {b - root, b + root}) {
        if (s < 0) continue;
        double const phi = std::arg(s * u - c);
        if (std::abs(phi) <= a + 1e-9 && (best < 0 || s < best)) best = s;
    }
    if (best < 0) {
        // Ray passes through a junction up to rounding.
        best = std::max(b - root, 0.0);
    }
    return best;
}

bool SupportBoundary::encloses(Complex z) const
{
    if (cfg_.n_steps() == 1) return false;
    double const a = cfg_.max_angle();
    double const zr = std::abs(z);
    Complex const u = zr > 1e-300 ? z / zr : Complex(1, 0);
    int winding = 0;
    auto visit = [&](const Arc& arc, bool outer) {
        Complex const d = z - arc.center;
        double const b = u.real() * d.real() + u.imag() * d.imag();
        double const disc = b * b - (std::norm(d) - arc.radius * arc.radius);
        if (disc <= 0) return;  // miss or tangent touch
        double const root = std::sqrt(disc);
        for (double s : {-b - root, -b + root}) {
            if (s <= 0) continue;
            Complex const q = z + s * u - arc.center;
            double const phi = std::arg(q);
            // Half-open parameter ranges so every junction is counted once.
            bool const on_arc = outer ? (phi > -a && phi <= a) : (phi >= -a && phi < a);
            if (!on_arc) continue;
            Complex const tangent = outer ? Complex(0, -1) * std::polar(1.0, phi)
                                          : Complex(0, 1) * std::polar(1.0, phi);
            winding += cross(u, tangent) > 0 ? 1 : -1;
        }
    };
    for (const Arc& arc : inner_) visit(arc, false);
    visit(outer_, true);
    return winding != 0;
}

double SupportBoundary::distance_to_boundary(Complex z) const
{
    double const a = cfg_.max_angle();
    auto arc_distance = [a, z](const Arc& arc) {
        Complex const d = z - arc.center;
        double const psi = std::arg(d);
        if (std::abs(psi) <= a) return std::abs(std::abs(d) - arc.radius);
        return std::min(std::abs(d - std::polar(arc.radius, a)),
                        std::abs(d - std::polar(arc.radius, -a)));
    };
    double best = arc_distance(outer_);
    for (const Arc& arc : inner_) best = std::min(best, arc_distance(arc));
    return best;
}

bool SupportBoundary::contains_by_winding(Complex z, double tol) const
{
    if (encloses(z)) return true;
    return distance_to_boundary(z) <= tol;
}

bool SupportBoundary::contains(PolarPoint p, double tol) const
{
    if (tol < 0) throw DomainError("membership tolerance must be nonnegative");
    double const a = cfg_.max_angle();
    double const n = cfg_.n_steps();
    if (p.radius > n + tol || std::abs(p.angle) > a + tol) return false;
    if (cfg_.n_steps() == 1) {
        return std::abs(p.radius - 1) <= tol;
    }
    if (unique_) {
        return p.radius >= inner_radius_at_angle(p.angle) - tol;
    }
    return contains_by_winding(std::polar(p.radius, p.angle), tol);
}

std::vector<Interval> SupportBoundary::radial_sections(double theta) const
{
    double const a = cfg_.max_angle();
    double const n = cfg_.n_steps();
    if (std::abs(theta) > a || cfg_.n_steps() == 1) return {};
    Complex const u = std::polar(1.0, theta);
    std::vector<double> cuts{0.0, n};
    for (const Arc& arc : inner_) {
        double const b = u.real() * arc.center.real() + u.imag() * arc.center.imag();
        double const disc = b * b - (std::norm(arc.center) - 1);
        if (disc < 0) continue;
        double const root = std::sqrt(disc);
        for (double s : {b - root, b + root}) {
            if (s > 0 && s < n) cuts.push_back(s);
        }
    }
    std::sort(cuts.begin(), cuts.end());
    return merge_inside(cuts, [&](double s) { return encloses(s * u); });
}

std::vector<Interval> SupportBoundary::angular_sections(double r) const
{
    double const a = cfg_.max_angle();
    double const n = cfg_.n_steps();
    if (!(r > 0) || r >= n || cfg_.n_steps() == 1) return {};
    std::vector<double> cuts{-a, a};
    for (const Arc& arc : inner_) {
        double const cr = std::abs(arc.center);
        if (cr < 1e-300) continue;
        double const c = (r * r + cr * cr - 1) / (2 * r * cr);
        push_cos_solutions(std::arg(arc.center), c, -a, a, cuts);
    }
    std::sort(cuts.begin(), cuts.end());
    return merge_inside(cuts, [&](double alpha) { return encloses(std::polar(r, alpha)); });
}

std::vector<double> SupportBoundary::unit_step_crossings(Complex z) const
{
    double const a = cfg_.max_angle();
    std::vector<double> out;
    auto visit = [&](const Arc& arc) {
        Complex const d = z - arc.center;
        double const dr = std::abs(d);
        if (dr < 1e-300) return;
        double const c = (dr * dr + 1 - arc.radius * arc.radius) / (2 * dr);
        push_cos_solutions(std::arg(d), c, -a, a, out);
    };
    for (const Arc& arc : inner_) visit(arc);
    visit(outer_);
    return out;
}

}  // namespace arcwalk
