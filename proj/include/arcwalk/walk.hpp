#pragma once

#include <numbers>

namespace arcwalk {

inline constexpr double pi = std::numbers::pi;

/// Admissible range for the half-width of the step-angle law. `restricted`
/// is (0, pi/2]; `extended` is (0, pi] and is only meaningful for the
/// Gaussian large-N model and Monte-Carlo sampling.
enum class AngleRange { restricted, extended };

/// Problem instance: N unit steps with angles i.i.d. uniform on [-a, a].
///
/// Only obtainable through validate_config(), so downstream code can assume
/// n_steps >= 1 and a within its admissible range.
class WalkConfig {
  public:
    int n_steps() const noexcept { return n_steps_; }
    double max_angle() const noexcept { return max_angle_; }
    bool extended() const noexcept { return max_angle_ > pi / 2; }

    /// Same half-width, different number of steps.
    WalkConfig with_steps(int n_steps) const;

    friend bool operator==(const WalkConfig&, const WalkConfig&) = default;

  private:
    WalkConfig(int n, double a) : n_steps_(n), max_angle_(a) {}
    friend WalkConfig validate_config(int, double, AngleRange);

    int n_steps_;
    double max_angle_;
};

WalkConfig validate_config(int n_steps, double max_angle,
                           AngleRange range = AngleRange::restricted);

struct PolarPoint {
    double radius = 0;
    double angle = 0;
};

/// First and second moments of one step (cos phi, sin phi).
struct MomentSet {
    double mean_x = 0;
    double mean_y = 0;
    double var_x = 0;
    double var_y = 0;
    double cov_xy = 0;
};

/// CDF of a single step angle; clamped to 0 / 1 outside [-a, a].
double step_angle_cdf(double theta, const WalkConfig& cfg);
double step_angle_pdf(double theta, const WalkConfig& cfg);

MomentSet clt_moments(const WalkConfig& cfg);

}  // namespace arcwalk
