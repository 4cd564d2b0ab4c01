#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace arcwalk::quad {

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Cached per node count; safe to call concurrently.
const GaussRule& gauss_legendre(std::size_t n);

/// Plain Gauss-Legendre over [lo, hi].
template<class F>
double integrate(F&& f, double lo, double hi, const GaussRule& rule)
{
    double const half = 0.5 * (hi - lo);
    double const mid = 0.5 * (hi + lo);
    double sum = 0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
    }
    return sum * half;
}

/// Gauss-Legendre after the map x = lo + (hi - lo)(3u^2 - 2u^3), whose
/// Jacobian vanishes at both ends. Inverse-square-root endpoint
/// singularities become bounded and jump discontinuities at the ends cost
/// nothing.
template<class F>
double integrate_smoothstep(F&& f, double lo, double hi, const GaussRule& rule)
{
    double const len = hi - lo;
    double sum = 0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        double const u = 0.5 * (rule.nodes[i] + 1);
        double const x = lo + len * u * u * (3 - 2 * u);
        double const jac = 6 * u * (1 - u);
        sum += rule.weights[i] * jac * f(x);
    }
    return 0.5 * len * sum;
}

/// Composite Gauss-Legendre with `panels` equal panels.
template<class F>
double integrate_composite(F&& f, double lo, double hi, std::size_t panels,
                           const GaussRule& rule)
{
    double sum = 0;
    double const h = (hi - lo) / static_cast<double>(panels);
    for (std::size_t p = 0; p < panels; ++p) {
        sum += integrate(f, lo + h * static_cast<double>(p),
                         lo + h * static_cast<double>(p + 1), rule);
    }
    return sum;
}

/// Wynn epsilon extrapolation of a sequence of partial sums.
class WynnEpsilon {
  public:
    /// Add the next partial sum; returns the current best limit estimate.
    double push(double partial_sum);
    /// Difference between the two most recent limit estimates.
    double error_estimate() const { return error_; }
    std::size_t size() const { return count_; }

  private:
    std::vector<double> row_;
    std::size_t count_ = 0;
    double last_ = 0;
    double error_ = 0;
};

}  // namespace arcwalk::quad
