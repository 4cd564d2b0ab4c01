#include "arcwalk/walk.hpp"

#include <cmath>
#include <string>

#include "arcwalk/errors.hpp"

namespace arcwalk {

WalkConfig validate_config(int n_steps, double max_angle, AngleRange range)
{
    if (n_steps < 1) {
        throw DomainError("number of steps must be at least 1, got "
                          + std::to_string(n_steps));
    }
    double const upper = range == AngleRange::restricted ? pi / 2 : pi;
    if (!(max_angle > 0) || !(max_angle <= upper)) {
        throw DomainError("maximum step angle must lie in (0, "
                          + std::string(range == AngleRange::restricted ? "pi/2" : "pi")
                          + "], got " + std::to_string(max_angle));
    }
    return WalkConfig(n_steps, max_angle);
}

WalkConfig WalkConfig::with_steps(int n_steps) const
{
    return validate_config(n_steps, max_angle_,
                           extended() ? AngleRange::extended : AngleRange::restricted);
}

double step_angle_cdf(double theta, const WalkConfig& cfg)
{
    double const a = cfg.max_angle();
    if (theta <= -a) return 0.0;
    if (theta >= a) return 1.0;
    return (theta + a) / (2 * a);
}

double step_angle_pdf(double theta, const WalkConfig& cfg)
{
    double const a = cfg.max_angle();
    return std::abs(theta) <= a ? 1.0 / (2 * a) : 0.0;
}

MomentSet clt_moments(const WalkConfig& cfg)
{
    double const a = cfg.max_angle();
    double const s = std::sin(a);
    double const c = std::cos(a);
    MomentSet m;
    m.mean_x = s / a;
    if (a < 0.05) {
        // The closed form cancels catastrophically for small a.
        double const a2 = a * a;
        double const a4 = a2 * a2;
        m.var_x = a4 * (1.0 / 45 - a2 * (1.0 / 315 - a2 * (1.0 / 4725 - a2 * 4.0 / 467775)));
    } else {
        m.var_x = (a + c * s) / (2 * a) - m.mean_x * m.mean_x;
    }
    m.var_y = (a - c * s) / (2 * a);
    // Odd integrands over a symmetric interval.
    m.mean_y = 0;
    m.cov_xy = 0;
    return m;
}

}  // namespace arcwalk
