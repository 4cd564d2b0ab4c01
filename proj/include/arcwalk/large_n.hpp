#pragma once

#include <memory>

#include "arcwalk/genchi2.hpp"
#include "arcwalk/walk.hpp"

namespace arcwalk {

/// Gaussian approximation of (R_N, theta_N) from the central limit theorem
/// applied to the summed step components. Accepts extended configurations;
/// truncation to the support needs a <= pi/2.
class LargeNModel {
  public:
    explicit LargeNModel(const WalkConfig& cfg);

    const WalkConfig& config() const noexcept { return cfg_; }
    const MomentSet& moments() const noexcept { return moments_; }
    /// Law of R_N^2: weights (N var_x, N var_y), dofs (1, 1),
    /// noncentralities (N mean_x^2 / var_x, 0).
    const GenChi2Params& radius_law() const noexcept { return radius_.params(); }

    double cdf_radius(double r) const;
    double pdf_radius(double r) const;

    /// Normal approximation of the ratio of the summed components. Defined
    /// for |theta| < pi/2; DomainError otherwise.
    double cdf_angle(double theta) const;
    double pdf_angle(double theta) const;

    /// Bivariate normal density of the endpoint in polar coordinates. With
    /// `truncate`, zero outside the support and rescaled by its mass there.
    double joint_pdf(double r, double theta, bool truncate = false) const;

    /// Mass of the untruncated joint density inside the support; computed
    /// on first use and cached.
    double support_mass() const;

  private:
    struct Cache;

    WalkConfig cfg_;
    MomentSet moments_;
    GeneralizedChiSquare radius_;
    double sd_x_;  // of the summed real part
    double sd_y_;
    std::shared_ptr<Cache> cache_;
};

}  // namespace arcwalk
