#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "arcwalk/walk.hpp"

namespace arcwalk {

/// Philox4x32-10 block cipher used as a counter-based generator.
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                        std::array<std::uint32_t, 2> key);

/// Sequential view of one Philox stream: key = seed, counter = (stream,
/// block). Uniforms use 53 bits; normals use Box-Muller.
class CounterRng {
  public:
    CounterRng(std::uint64_t seed, std::uint64_t stream) : seed_(seed), stream_(stream) {}

    /// Uniform on [0, 1).
    double uniform();
    double normal();

  private:
    std::uint64_t seed_;
    std::uint64_t stream_;
    std::uint32_t block_ = 0;
    std::array<std::uint32_t, 4> buffer_{};
    int used_ = 4;  // 32-bit words consumed from buffer_
    bool has_spare_ = false;
    double spare_ = 0;
};

struct SampleBatch {
    WalkConfig cfg;
    std::uint64_t seed = 0;
    std::vector<PolarPoint> samples;

    std::vector<double> radii() const;
    std::vector<double> angles() const;
};

/// Endpoints of `count` independent walks. Sample i uses its own counter
/// stream, so results do not depend on the number of threads (0 reads
/// ARCWALK_THREADS, then the hardware concurrency).
SampleBatch sample_walk(const WalkConfig& cfg, std::int64_t count, std::uint64_t seed,
                        int threads = 0);

struct Histogram {
    std::vector<double> edges;  // bins + 1 entries
    std::vector<std::int64_t> counts;
    std::int64_t total = 0;

    double width(std::size_t bin) const { return edges[bin + 1] - edges[bin]; }
    double center(std::size_t bin) const { return 0.5 * (edges[bin] + edges[bin + 1]); }
    /// Count divided by total and bin width.
    double density(std::size_t bin) const;
    /// Binomial standard error of density(bin).
    double density_std_error(std::size_t bin) const;
};

inline constexpr int default_histogram_bins = 200;

class EmpiricalDistribution {
  public:
    /// Throws EmptyInputError for an empty sample.
    explicit EmpiricalDistribution(std::vector<double> values);

    std::span<const double> sorted() const noexcept { return sorted_; }
    std::size_t size() const noexcept { return sorted_.size(); }
    double cdf(double x) const;
    /// Fraction of values strictly below x.
    double cdf_left(double x) const;
    /// Histogram over [lo, hi]; values outside are counted in `total` only.
    Histogram histogram(int bins, double lo, double hi) const;
    Histogram histogram(int bins = default_histogram_bins) const;

  private:
    std::vector<double> sorted_;
};

EmpiricalDistribution empirical_cdf(std::vector<double> values);

using CdfFunction = std::function<double(double)>;

/// Exact sup |F_emp - F| over both sides of every jump.
double ks_distance(const EmpiricalDistribution& emp, const CdfFunction& cdf);

/// Bounds on the KS distance from F evaluated at `checkpoints` sample
/// quantiles only; valid for nondecreasing F.
struct KsBracket {
    double lower = 0;
    double upper = 0;
};
KsBracket ks_distance_bracket(const EmpiricalDistribution& emp, const CdfFunction& cdf,
                              int checkpoints);

}  // namespace arcwalk
