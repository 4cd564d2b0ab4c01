#include "arcwalk/exact_two.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "arcwalk/errors.hpp"

namespace arcwalk {
namespace {

void require_nonnegative_radius(double r)
{
    if (r < 0) throw DomainError("radius must be nonnegative, got " + std::to_string(r));
}

}  // namespace

ExactTwoStep::ExactTwoStep(const WalkConfig& cfg) : a_(cfg.max_angle())
{
    if (cfg.n_steps() != 2) {
        throw DomainError("closed-form two-step law needs n_steps == 2, got "
                          + std::to_string(cfg.n_steps()));
    }
    if (cfg.extended()) throw DomainError("closed-form two-step law needs a <= pi/2");
}

double ExactTwoStep::cdf_radius(double r) const
{
    require_nonnegative_radius(r);
    if (r >= 2) return 1.0;
    if (r <= 2 * std::cos(a_)) return 0.0;
    double const gap = a_ - std::acos(r / 2);
    return std::clamp(gap * gap / (a_ * a_), 0.0, 1.0);
}

double ExactTwoStep::pdf_radius(double r) const
{
    require_nonnegative_radius(r);
    if (r >= 2 || r <= 2 * std::cos(a_)) return 0.0;
    double const gap = a_ - std::acos(r / 2);
    return 2 * gap / (a_ * a_ * std::sqrt(4 - r * r));
}

double ExactTwoStep::cdf_angle(double theta) const
{
    if (theta <= -a_) return 0.0;
    if (theta >= a_) return 1.0;
    double const sgn = theta > 0 ? 1.0 : (theta < 0 ? -1.0 : 0.0);
    return (a_ * a_ + 2 * a_ * theta - sgn * theta * theta) / (2 * a_ * a_);
}

double ExactTwoStep::pdf_angle(double theta) const
{
    double const t = std::abs(theta);
    if (t >= a_) return 0.0;
    return (1 - t / a_) / a_;
}

double ExactTwoStep::conditional_min_radius(double theta) const
{
    return 2 * std::cos(a_ - std::abs(theta));
}

double ExactTwoStep::conditional_cdf_radius_given_angle(double r, double theta) const
{
    double const t = std::abs(theta);
    if (t >= a_) {
        throw DomainError("conditioning angle must satisfy |theta| < a, got "
                          + std::to_string(theta));
    }
    require_nonnegative_radius(r);
    if (r >= 2) return 1.0;
    if (r <= conditional_min_radius(t)) return 0.0;
    return std::clamp(1 - std::acos(r / 2) / (a_ - t), 0.0, 1.0);
}

double ExactTwoStep::joint_pdf(double r, double theta) const
{
    double const t = std::abs(theta);
    if (t > a_ || r >= 2 || r < conditional_min_radius(t)) return 0.0;
    return 1 / (a_ * a_ * std::sqrt(4 - r * r));
}

}  // namespace arcwalk
