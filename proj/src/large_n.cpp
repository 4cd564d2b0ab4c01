#include "arcwalk/large_n.hpp"

#include <cmath>
#include <mutex>
#include <string>

#include "arcwalk/errors.hpp"
#include "arcwalk/quadrature.hpp"
#include "arcwalk/support.hpp"

namespace arcwalk {

struct LargeNModel::Cache {
    std::once_flag once;
    double support_mass = 0;
};

namespace {

GenChi2Params squared_radius_law(const WalkConfig& cfg, const MomentSet& m)
{
    double const n = cfg.n_steps();
    return {{n * m.var_x, n * m.var_y}, {1, 1}, {n * m.mean_x * m.mean_x / m.var_x, 0.0}, 0.0, 0.0};
}

void require_angle(double theta)
{
    if (!(std::abs(theta) < pi / 2)) {
        throw DomainError("large-N angle law needs |theta| < pi/2, got " + std::to_string(theta));
    }
}

}  // namespace

LargeNModel::LargeNModel(const WalkConfig& cfg)
    : cfg_(cfg),
      moments_(clt_moments(cfg)),
      radius_(squared_radius_law(cfg, moments_)),
      sd_x_(std::sqrt(cfg.n_steps() * moments_.var_x)),
      sd_y_(std::sqrt(cfg.n_steps() * moments_.var_y)),
      cache_(std::make_shared<Cache>())
{
}

double LargeNModel::cdf_radius(double r) const
{
    if (r < 0) throw DomainError("radius must be nonnegative, got " + std::to_string(r));
    return radius_.cdf(r * r);
}

double LargeNModel::pdf_radius(double r) const
{
    if (r < 0) throw DomainError("radius must be nonnegative, got " + std::to_string(r));
    if (r == 0) return 0.0;
    return 2 * r * radius_.pdf(r * r);
}

double LargeNModel::cdf_angle(double theta) const
{
    require_angle(theta);
    double const n = cfg_.n_steps();
    double const t = std::tan(theta);
    double const spread = std::sqrt(n * (t * t * moments_.var_x + moments_.var_y));
    return normal_cdf(n * moments_.mean_x * t / spread);
}

double LargeNModel::pdf_angle(double theta) const
{
    require_angle(theta);
    double const n = cfg_.n_steps();
    double const t = std::tan(theta);
    double const q = t * t * moments_.var_x + moments_.var_y;
    double const c = std::cos(theta);
    double const u = n * moments_.mean_x * t / std::sqrt(n * q);
    return normal_pdf(u) * std::sqrt(n) * moments_.mean_x * moments_.var_y / (q * std::sqrt(q) * c * c);
}

double LargeNModel::joint_pdf(double r, double theta, bool truncate) const
{
    if (r < 0) throw DomainError("radius must be nonnegative, got " + std::to_string(r));
    double const n = cfg_.n_steps();
    if (truncate) {
        if (cfg_.extended()) throw DomainError("truncation to the support needs a <= pi/2");
        if (r > n || std::abs(theta) > cfg_.max_angle()) return 0.0;
        if (!SupportBoundary(cfg_).contains({r, theta}, 0.0)) return 0.0;
    }
    double const x = r * std::cos(theta);
    double const y = r * std::sin(theta);
    double const f = r / (sd_x_ * sd_y_) * normal_pdf((x - n * moments_.mean_x) / sd_x_)
                     * normal_pdf(y / sd_y_);
    return truncate ? f / support_mass() : f;
}

double LargeNModel::support_mass() const
{
    if (cfg_.extended()) throw DomainError("support mass needs a <= pi/2");
    std::call_once(cache_->once, [this] {
        SupportBoundary const support(cfg_);
        double const a = cfg_.max_angle();
        const auto& rule = quad::gauss_legendre(512);
        auto untruncated = [this](double r, double theta) { return joint_pdf(r, theta, false); };
        auto over_radius = [&](double theta) {
            double sum = 0;
            for (const Interval& iv : support.radial_sections(theta)) {
                sum += quad::integrate([&](double r) { return untruncated(r, theta); }, iv.lo, iv.hi,
                                       rule);
            }
            return sum;
        };
        cache_->support_mass = quad::integrate(over_radius, -a, a, rule);
    });
    return cache_->support_mass;
}

}  // namespace arcwalk
