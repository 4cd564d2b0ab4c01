#pragma once

#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "arcwalk/support.hpp"
#include "arcwalk/walk.hpp"

namespace arcwalk {

/// One node of a quadrature rule for expectations over (R, theta).
struct WeightedPoint {
    double radius = 0;
    double angle = 0;
    double weight = 0;
};

/// Law of (R_N, theta_N) after some number of steps.
class JointLaw {
  public:
    virtual ~JointLaw() = default;

    virtual const WalkConfig& config() const = 0;

    /// Joint density in (r, theta). Throws DomainError for laws without a
    /// two-dimensional density (a single step).
    virtual double density(double r, double theta) const = 0;

    /// Points and weights with sum(weight * g(r, theta)) ~ E[g(R, theta)].
    virtual std::span<const WeightedPoint> measure() const = 0;
};

/// Which part of the (r, theta) box carries mass.
enum class GridRegion { support, full_box };

struct GridOptions {
    int radial_nodes = 400;
    int angle_nodes = 400;
    int phi_nodes = 64;
    double grid_tol = 0.005;
    /// Worker threads for propagation; 0 reads ARCWALK_THREADS, then falls
    /// back to the hardware concurrency.
    int threads = 0;
    /// Gap between the smallest grid radius and the minimum radius,
    /// relative to N.
    double radial_margin = 1e-3;
    GridRegion region = GridRegion::support;
};

/// Tabulated joint density on a polar grid.
///
/// Radii are cell centres in s on [0, 1] with r = N - L s^2, which packs
/// nodes towards the outer arc and makes the inverse-square-root edge of
/// the two-step law integrable by the midpoint rule. Angles are cell
/// centres on [-a, a]. Density is stored row-major (radius, angle) and is
/// zero at nodes outside the support.
class PolarGridDistribution final : public JointLaw {
  public:
    using Function = std::function<double(double r, double theta)>;

    /// Evaluates `f` at every node with theta >= 0, mirrors the result,
    /// audits the mass against grid_tol and renormalizes. Throws GridError
    /// when the raw mass is off by more than grid_tol.
    static PolarGridDistribution tabulate(const WalkConfig& cfg, const GridOptions& opts,
                                          const Function& f);

    const WalkConfig& config() const override { return cfg_; }
    double density(double r, double theta) const override;
    std::span<const WeightedPoint> measure() const override { return measure_; }

    const GridOptions& options() const noexcept { return opts_; }
    std::span<const double> radii() const noexcept { return radii_; }
    std::span<const double> angles() const noexcept { return angles_; }
    std::span<const double> values() const noexcept { return values_; }
    double at(std::size_t i, std::size_t j) const { return values_[i * angles_.size() + j]; }
    bool in_region(std::size_t i, std::size_t j) const { return mask_[i * angles_.size() + j] != 0; }

    /// Mass before renormalization and the factor applied to reach 1.
    double raw_mass() const noexcept { return raw_mass_; }
    double normalization() const noexcept { return normalization_; }

    /// Quadrature of the density over the grid.
    double mass() const;

    /// Density of R at each grid radius (row quadrature over angles).
    std::vector<double> marginal_radius() const;
    /// Density of theta at each grid angle (column quadrature over radii).
    std::vector<double> marginal_angle() const;

    /// CDFs of the tabulated marginals: cell masses accumulated and
    /// interpolated linearly inside each cell.
    double cdf_radius(double r) const;
    double cdf_angle(double theta) const;

    /// Geometry of the grid without density values; shared by propagation.
    static PolarGridDistribution layout(const WalkConfig& cfg, const GridOptions& opts);

    /// Installs node values (theta >= 0 half computed by the caller and
    /// already mirrored), then audits and renormalizes.
    void assign(std::vector<double> values);

  private:
    PolarGridDistribution(const WalkConfig& cfg, const GridOptions& opts);

    double s_of(double r) const;
    void finalize();

    WalkConfig cfg_;
    GridOptions opts_;
    std::shared_ptr<const SupportBoundary> support_;
    double span_ = 0;  // L in r = N - L s^2
    std::vector<double> radii_;
    std::vector<double> s_nodes_;
    std::vector<double> radial_weights_;
    std::vector<double> angles_;
    std::vector<unsigned char> mask_;
    std::vector<double> values_;
    // Row (angle) and column (radius) quadrature weights, same layout as values_.
    std::vector<double> row_weights_;
    std::vector<double> col_weights_;
    std::vector<WeightedPoint> measure_;
    // Cell edges (ascending) and cumulative mass at each edge.
    std::vector<double> radius_edges_;
    std::vector<double> radius_cum_;
    std::vector<double> angle_edges_;
    std::vector<double> angle_cum_;
    double raw_mass_ = 0;
    double normalization_ = 1;
};

}  // namespace arcwalk
