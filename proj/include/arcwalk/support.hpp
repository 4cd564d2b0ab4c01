#pragma once

#include <complex>
#include <span>
#include <vector>

#include "arcwalk/walk.hpp"

namespace arcwalk {

using Complex = std::complex<double>;

/// Circular arc {center + radius * e^{j phi} : |phi| <= a}.
struct Arc {
    Complex center;
    double radius = 1;
};

struct Interval {
    double lo = 0;
    double hi = 0;
};

/// A point on the inner boundary together with its parametrization.
struct BoundarySample {
    double t = 0;
    PolarPoint point;
    int segment_index = 0;  ///< k(t), the unit arc carrying the point
    double local_angle = 0; ///< phi(t), the arc parameter in [-a, a]
};

double min_radius(const WalkConfig& cfg);

/// Largest a for which the inner boundary radius is a single-valued
/// function of the angle. Requires n_steps >= 2.
double uniqueness_threshold(int n_steps);

bool is_radius_function_of_angle(const WalkConfig& cfg);

/// Boundary of the set of endpoints reachable by an N-step walk.
///
/// The region is closed, lies in |theta| <= a, and is bounded by the outer
/// arc of radius N and a chain of N unit arcs centred at
/// k e^{ja} + (N-1-k) e^{-ja}, k = 0..N-1. Walking the chain with k and the
/// arc parameter increasing runs from N e^{-ja} to N e^{ja}; the outer arc
/// closes the loop.
class SupportBoundary {
  public:
    explicit SupportBoundary(const WalkConfig& cfg);

    const WalkConfig& config() const noexcept { return cfg_; }
    std::span<const Arc> inner_segments() const noexcept { return inner_; }
    const Arc& outer_arc() const noexcept { return outer_; }

    /// Point of the outer arc at angle phi, |phi| <= a.
    PolarPoint outer_boundary(double phi) const;

    /// Inner boundary at parameter t in [0, 1]; continuous in t.
    BoundarySample inner_boundary(double t) const;

    double min_radius() const noexcept { return min_radius_; }
    bool radius_is_function_of_angle() const noexcept { return unique_; }

    /// Radius of the inner boundary along the ray at angle theta.
    /// Only defined when the radius is a function of the angle.
    double inner_radius_at_angle(double theta) const;

    /// True when the point lies within distance `tol` of the closed region.
    bool contains(PolarPoint p, double tol) const;

    /// Exact interior test (nonzero winding of the boundary loop).
    bool encloses(Complex z) const;

    double distance_to_boundary(Complex z) const;

    /// Radius intervals of the region along the ray at angle theta.
    std::vector<Interval> radial_sections(double theta) const;

    /// Angle intervals of the region on the circle of radius r.
    std::vector<Interval> angular_sections(double r) const;

    /// Values of phi in [-a, a] at which z - e^{j phi} crosses one of the
    /// boundary circles (a superset of the boundary crossings).
    std::vector<double> unit_step_crossings(Complex z) const;

  private:
    bool contains_by_winding(Complex z, double tol) const;

    WalkConfig cfg_;
    std::vector<Arc> inner_;
    Arc outer_;
    std::vector<double> junction_angles_;
    double min_radius_;
    bool unique_;
};

}  // namespace arcwalk
