#pragma once

#include <functional>
#include <span>
#include <vector>

#include "arcwalk/exact_two.hpp"
#include "arcwalk/polar_grid.hpp"

namespace arcwalk {

/// Law of a single step: R = 1 and theta uniform on [-a, a].
class ArcLaw final : public JointLaw {
  public:
    explicit ArcLaw(const WalkConfig& cfg);

    const WalkConfig& config() const override { return cfg_; }
    /// Throws DomainError: a single step has no joint density.
    double density(double r, double theta) const override;
    std::span<const WeightedPoint> measure() const override { return measure_; }

    /// Closed-form density of the next step, obtained by integrating the
    /// uniform step law against the point mass on the unit arc.
    double next_density(double r, double theta) const;

  private:
    WalkConfig cfg_;
    std::vector<WeightedPoint> measure_;
};

/// Closed-form two-step law presented as a joint-law source.
class ExactTwoStepLaw final : public JointLaw {
  public:
    explicit ExactTwoStepLaw(const WalkConfig& cfg);

    const WalkConfig& config() const override { return cfg_; }
    double density(double r, double theta) const override;
    std::span<const WeightedPoint> measure() const override { return measure_; }

  private:
    WalkConfig cfg_;
    ExactTwoStep exact_;
    std::vector<WeightedPoint> measure_;
};

/// Joint density after one more step, tabulated on the grid for
/// prev.config().n_steps() + 1 steps. Throws GridError if the source is
/// not a walk law on the support.
PolarGridDistribution propagate(const JointLaw& prev, const GridOptions& opts = {});

/// Called after each propagation with the step count and the factor that
/// renormalized the grid mass to one.
using StepObserver = std::function<void(int n_steps, double normalization)>;

/// Joint density for cfg.n_steps() >= 2: N=2 from the single-step law,
/// N=3 from the closed-form two-step law, N>=4 by repeated propagation.
PolarGridDistribution compute_joint(const WalkConfig& cfg, const GridOptions& opts = {},
                                    const StepObserver& observer = {});

/// CDF of R_N at r from the (N-1)-step law, by conditioning on the last
/// step. Throws DomainError for r < 0.
double cdf_radius_recursive(double r, const JointLaw& prev);

/// Linearized approximations of the CDF and PDF of theta_N from the
/// (N-1)-step law.
double cdf_angle_approx(double theta, const JointLaw& prev);
double pdf_angle_approx(double theta, const JointLaw& prev);

}  // namespace arcwalk
