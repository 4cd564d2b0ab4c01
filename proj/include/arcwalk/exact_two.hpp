#pragma once

#include "arcwalk/walk.hpp"

namespace arcwalk {

/// Closed-form law of (R_2, theta_2) for the two-step walk.
///
/// On its support the joint density is 1 / (a^2 sqrt(4 - r^2)) for
/// 2 cos(a - |theta|) <= r < 2. The density diverges as r -> 2; every
/// member here returns finite values and treats r = 2 exactly as outside
/// the density's support (it still belongs to the CDF's support).
class ExactTwoStep {
  public:
    /// Requires cfg.n_steps() == 2.
    explicit ExactTwoStep(const WalkConfig& cfg);

    double max_angle() const noexcept { return a_; }

    double cdf_radius(double r) const;
    double pdf_radius(double r) const;
    double cdf_angle(double theta) const;
    double pdf_angle(double theta) const;

    /// P(R_2 <= r | theta_2 = theta); requires |theta| < a.
    double conditional_cdf_radius_given_angle(double r, double theta) const;

    /// Smallest radius reachable with resulting angle theta.
    double conditional_min_radius(double theta) const;

    double joint_pdf(double r, double theta) const;

  private:
    double a_;
};

}  // namespace arcwalk
