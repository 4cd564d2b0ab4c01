#include "arcwalk/polar_grid.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "arcwalk/errors.hpp"

namespace arcwalk {
namespace {

/// Adds to `w` the weights of the integral over [lo, hi] of the piecewise
/// linear interpolant through the ascending nodes `x` that fall inside
/// [lo, hi], extended by constants to both ends. `index` maps positions in
/// `x` to slots of `w`.
template<class Index>
void add_interval_weights(std::span<const double> x, double lo, double hi, Index index,
                          std::vector<double>& w)
{
    if (!(hi > lo) || x.empty()) return;
    auto const first = std::lower_bound(x.begin(), x.end(), lo);
    auto const last = std::upper_bound(x.begin(), x.end(), hi);
    if (first == last) {
        // No node inside: use the node nearest to the midpoint.
        double const mid = 0.5 * (lo + hi);
        auto it = std::lower_bound(x.begin(), x.end(), mid);
        if (it == x.end() || (it != x.begin() && mid - *(it - 1) < *it - mid)) --it;
        w[index(static_cast<std::size_t>(it - x.begin()))] += hi - lo;
        return;
    }
    auto const k0 = static_cast<std::size_t>(first - x.begin());
    auto const k1 = static_cast<std::size_t>(last - x.begin()) - 1;
    w[index(k0)] += x[k0] - lo;
    w[index(k1)] += hi - x[k1];
    for (std::size_t k = k0; k < k1; ++k) {
        double const half = 0.5 * (x[k + 1] - x[k]);
        w[index(k)] += half;
        w[index(k + 1)] += half;
    }
}

}  // namespace

PolarGridDistribution::PolarGridDistribution(const WalkConfig& cfg, const GridOptions& opts)
    : cfg_(cfg), opts_(opts)
{
    if (cfg.n_steps() < 2) {
        throw DomainError("a polar grid needs at least two steps; one step has no 2-D density");
    }
    if (cfg.extended()) throw DomainError("polar grids need a <= pi/2");
    if (opts.radial_nodes < 2 || opts.angle_nodes < 2 || opts.phi_nodes < 1) {
        throw DomainError("grid needs at least 2x2 nodes and one phi node");
    }
    if (!(opts.grid_tol > 0) || opts.radial_margin < 0) {
        throw DomainError("grid tolerance must be positive and the radial margin nonnegative");
    }
    support_ = std::make_shared<const SupportBoundary>(cfg);

    double const n = cfg.n_steps();
    double const a = cfg.max_angle();
    double const r_lo = std::max(0.0, support_->min_radius() - opts.radial_margin * n);
    span_ = n - r_lo;

    auto const nr = static_cast<std::size_t>(opts.radial_nodes);
    auto const na = static_cast<std::size_t>(opts.angle_nodes);
    radii_.resize(nr);
    s_nodes_.resize(nr);
    radial_weights_.resize(nr);
    for (std::size_t i = 0; i < nr; ++i) {
        double const s = (static_cast<double>(nr - i) - 0.5) / static_cast<double>(nr);
        s_nodes_[i] = s;
        radii_[i] = n - span_ * s * s;
        radial_weights_[i] = 2 * span_ * s / static_cast<double>(nr);
    }
    angles_.resize(na);
    double const h = 2 * a / static_cast<double>(na);
    for (std::size_t j = 0; j < na; ++j) {
        angles_[j] = -a + (static_cast<double>(j) + 0.5) * h;
    }
    // Exact mirror image for the symmetric half.
    for (std::size_t j = 0; j < na / 2; ++j) angles_[na - 1 - j] = -angles_[j];
    if (na % 2 == 1) angles_[na / 2] = 0;

    mask_.assign(nr * na, 1);
    row_weights_.assign(nr * na, 0.0);
    col_weights_.assign(nr * na, 0.0);
    bool const box = opts.region == GridRegion::full_box;

    for (std::size_t i = 0; i < nr; ++i) {
        auto idx = [&](std::size_t j) { return i * na + j; };
        if (box) {
            add_interval_weights(angles_, -a, a, idx, row_weights_);
            continue;
        }
        for (std::size_t j = 0; j < na; ++j) {
            mask_[idx(j)] = support_->contains({radii_[i], angles_[j]}, 0.0) ? 1 : 0;
        }
        for (const Interval& iv : support_->angular_sections(radii_[i])) {
            add_interval_weights(angles_, iv.lo, iv.hi, idx, row_weights_);
        }
    }

    // Columns integrate in s (ascending), i.e. radii in reverse order.
    std::vector<double> s_asc(s_nodes_.rbegin(), s_nodes_.rend());
    std::vector<double> col_s(nr);
    for (std::size_t j = 0; j < na; ++j) {
        std::fill(col_s.begin(), col_s.end(), 0.0);
        auto rev = [nr](std::size_t k) { return nr - 1 - k; };
        auto add_r_interval = [&](double r_a, double r_b) {
            r_a = std::max(r_a, r_lo);
            r_b = std::min(r_b, n);
            if (!(r_b > r_a)) return;
            double const s_a = std::sqrt((n - r_b) / span_);
            double const s_b = std::sqrt((n - r_a) / span_);
            add_interval_weights(s_asc, s_a, s_b, rev, col_s);
        };
        if (box) {
            add_r_interval(r_lo, n);
        } else {
            for (const Interval& iv : support_->radial_sections(angles_[j])) {
                add_r_interval(iv.lo, iv.hi);
            }
        }
        for (std::size_t i = 0; i < nr; ++i) {
            col_weights_[i * na + j] = col_s[i] * 2 * span_ * s_nodes_[i];
        }
    }
    values_.assign(nr * na, 0.0);
}

PolarGridDistribution PolarGridDistribution::layout(const WalkConfig& cfg, const GridOptions& opts)
{
    return PolarGridDistribution(cfg, opts);
}

PolarGridDistribution PolarGridDistribution::tabulate(const WalkConfig& cfg, const GridOptions& opts,
                                                      const Function& f)
{
    PolarGridDistribution grid(cfg, opts);
    std::size_t const nr = grid.radii_.size();
    std::size_t const na = grid.angles_.size();
    std::vector<double> values(nr * na, 0.0);
    for (std::size_t i = 0; i < nr; ++i) {
        for (std::size_t j = na / 2; j < na; ++j) {
            if (!grid.mask_[i * na + j]) continue;
            double const v = f(grid.radii_[i], grid.angles_[j]);
            values[i * na + j] = v;
            values[i * na + (na - 1 - j)] = v;
        }
    }
    grid.assign(std::move(values));
    return grid;
}

void PolarGridDistribution::assign(std::vector<double> values)
{
    if (values.size() != radii_.size() * angles_.size()) {
        throw GridError("grid value count does not match the layout");
    }
    for (std::size_t k = 0; k < values.size(); ++k) {
        if (!mask_[k]) values[k] = 0;
        if (!(values[k] >= 0) || !std::isfinite(values[k])) {
            throw GridError("grid density must be finite and nonnegative");
        }
    }
    values_ = std::move(values);
    finalize();
}

void PolarGridDistribution::finalize()
{
    raw_mass_ = mass();
    if (std::abs(raw_mass_ - 1) > opts_.grid_tol) {
        throw GridError("grid mass " + std::to_string(raw_mass_) + " for N="
                        + std::to_string(cfg_.n_steps()) + " is outside 1 +- "
                        + std::to_string(opts_.grid_tol));
    }
    normalization_ = 1 / raw_mass_;
    for (double& v : values_) v *= normalization_;

    std::size_t const na = angles_.size();
    measure_.clear();
    for (std::size_t i = 0; i < radii_.size(); ++i) {
        for (std::size_t j = 0; j < na; ++j) {
            double const w = radial_weights_[i] * row_weights_[i * na + j] * values_[i * na + j];
            if (w > 0) measure_.push_back({radii_[i], angles_[j], w});
        }
    }

    std::size_t const nr = radii_.size();
    double const n = cfg_.n_steps();
    auto const marg_r = marginal_radius();
    radius_edges_.resize(nr + 1);
    radius_cum_.assign(nr + 1, 0.0);
    for (std::size_t i = 0; i <= nr; ++i) {
        double const s = static_cast<double>(nr - i) / static_cast<double>(nr);
        radius_edges_[i] = n - span_ * s * s;
    }
    for (std::size_t i = 0; i < nr; ++i) {
        radius_cum_[i + 1] = radius_cum_[i] + radial_weights_[i] * marg_r[i];
    }
    auto const marg_a = marginal_angle();
    double const h = 2 * cfg_.max_angle() / static_cast<double>(na);
    angle_edges_.resize(na + 1);
    angle_cum_.assign(na + 1, 0.0);
    for (std::size_t j = 0; j <= na; ++j) {
        angle_edges_[j] = -cfg_.max_angle() + h * static_cast<double>(j);
    }
    for (std::size_t j = 0; j < na; ++j) angle_cum_[j + 1] = angle_cum_[j] + h * marg_a[j];
    for (double& c : radius_cum_) c /= radius_cum_.back();
    for (double& c : angle_cum_) c /= angle_cum_.back();
}

namespace {

double interpolate_cumulative(const std::vector<double>& edges, const std::vector<double>& cum, double x)
{
    if (x <= edges.front()) return 0.0;
    if (x >= edges.back()) return 1.0;
    auto const k = static_cast<std::size_t>(std::upper_bound(edges.begin(), edges.end(), x) - edges.begin());
    double const t = (x - edges[k - 1]) / (edges[k] - edges[k - 1]);
    return cum[k - 1] + t * (cum[k] - cum[k - 1]);
}

}  // namespace

double PolarGridDistribution::cdf_radius(double r) const
{
    return interpolate_cumulative(radius_edges_, radius_cum_, r);
}

double PolarGridDistribution::cdf_angle(double theta) const
{
    return interpolate_cumulative(angle_edges_, angle_cum_, theta);
}

double PolarGridDistribution::mass() const
{
    auto const marg = marginal_radius();
    double sum = 0;
    for (std::size_t i = 0; i < marg.size(); ++i) sum += radial_weights_[i] * marg[i];
    return sum;
}

std::vector<double> PolarGridDistribution::marginal_radius() const
{
    std::size_t const na = angles_.size();
    std::vector<double> out(radii_.size(), 0.0);
    for (std::size_t i = 0; i < radii_.size(); ++i) {
        double sum = 0;
        for (std::size_t j = 0; j < na; ++j) sum += row_weights_[i * na + j] * values_[i * na + j];
        out[i] = sum;
    }
    return out;
}

std::vector<double> PolarGridDistribution::marginal_angle() const
{
    std::size_t const na = angles_.size();
    std::vector<double> out(na, 0.0);
    for (std::size_t i = 0; i < radii_.size(); ++i) {
        for (std::size_t j = 0; j < na; ++j) out[j] += col_weights_[i * na + j] * values_[i * na + j];
    }
    return out;
}

double PolarGridDistribution::s_of(double r) const
{
    return std::sqrt(std::max(0.0, (cfg_.n_steps() - r) / span_));
}

double PolarGridDistribution::density(double r, double theta) const
{
    double const a = cfg_.max_angle();
    double const n = cfg_.n_steps();
    if (r > n || std::abs(theta) > a) return 0.0;
    double const s = s_of(r);
    if (s > 1) return 0.0;

    auto const nr = static_cast<double>(radii_.size());
    auto const na = static_cast<double>(angles_.size());
    double const p = std::clamp(nr - 0.5 - s * nr, 0.0, nr - 1);
    double const q = std::clamp((theta + a) / (2 * a) * na - 0.5, 0.0, na - 1);
    auto const i0 = std::min(static_cast<std::size_t>(p), radii_.size() - 2);
    auto const j0 = std::min(static_cast<std::size_t>(q), angles_.size() - 2);
    double const fp = p - static_cast<double>(i0);
    double const fq = q - static_cast<double>(j0);

    std::size_t const stride = angles_.size();
    double sum = 0;
    double wsum = 0;
    double nearest = 0;
    double best = -1;
    for (int di = 0; di < 2; ++di) {
        for (int dj = 0; dj < 2; ++dj) {
            double const w = (di ? fp : 1 - fp) * (dj ? fq : 1 - fq);
            std::size_t const k = (i0 + di) * stride + (j0 + dj);
            if (!mask_[k]) continue;
            sum += w * values_[k];
            wsum += w;
            if (w > best) {
                best = w;
                nearest = values_[k];
            }
        }
    }
    if (best < 0) return 0.0;
    // Near the boundary fall back on the in-region corners only.
    return wsum > 1e-12 ? sum / wsum : nearest;
}

}  // namespace arcwalk
