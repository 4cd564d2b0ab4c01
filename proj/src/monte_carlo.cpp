#include "arcwalk/monte_carlo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <thread>

#include "arcwalk/errors.hpp"
#include "arcwalk/parallel.hpp"

namespace arcwalk {

std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> c,
                                        std::array<std::uint32_t, 2> k)
{
    constexpr std::uint64_t m0 = 0xD2511F53;
    constexpr std::uint64_t m1 = 0xCD9E8D57;
    constexpr std::uint32_t w0 = 0x9E3779B9;
    constexpr std::uint32_t w1 = 0xBB67AE85;
    for (int round = 0; round < 10; ++round) {
        if (round > 0) {
            k[0] += w0;
            k[1] += w1;
        }
        std::uint64_t const p0 = m0 * c[0];
        std::uint64_t const p1 = m1 * c[2];
        c = {static_cast<std::uint32_t>(p1 >> 32) ^ c[1] ^ k[0], static_cast<std::uint32_t>(p1),
             static_cast<std::uint32_t>(p0 >> 32) ^ c[3] ^ k[1], static_cast<std::uint32_t>(p0)};
    }
    return c;
}

double CounterRng::uniform()
{
    if (used_ >= 4) {
        buffer_ = philox4x32({static_cast<std::uint32_t>(stream_), static_cast<std::uint32_t>(stream_ >> 32),
                              block_++, 0},
                             {static_cast<std::uint32_t>(seed_), static_cast<std::uint32_t>(seed_ >> 32)});
        used_ = 0;
    }
    std::uint64_t const bits = (static_cast<std::uint64_t>(buffer_[used_]) << 32) | buffer_[used_ + 1];
    used_ += 2;
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

double CounterRng::normal()
{
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double const u1 = 1 - uniform();  // (0, 1]
    double const u2 = uniform();
    double const radius = std::sqrt(-2 * std::log(u1));
    spare_ = radius * std::sin(2 * pi * u2);
    has_spare_ = true;
    return radius * std::cos(2 * pi * u2);
}

std::vector<double> SampleBatch::radii() const
{
    std::vector<double> out;
    out.reserve(samples.size());
    for (const auto& p : samples) out.push_back(p.radius);
    return out;
}

std::vector<double> SampleBatch::angles() const
{
    std::vector<double> out;
    out.reserve(samples.size());
    for (const auto& p : samples) out.push_back(p.angle);
    return out;
}

SampleBatch sample_walk(const WalkConfig& cfg, std::int64_t count, std::uint64_t seed, int threads)
{
    if (count < 1) throw DomainError("sample count must be >= 1, got " + std::to_string(count));
    SampleBatch batch{cfg, seed, std::vector<PolarPoint>(static_cast<std::size_t>(count))};
    int const n = cfg.n_steps();
    double const a = cfg.max_angle();

    auto fill = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            CounterRng rng(seed, i);
            double x = 0;
            double y = 0;
            for (int k = 0; k < n; ++k) {
                double const phi = a * (2 * rng.uniform() - 1);
                x += std::cos(phi);
                y += std::sin(phi);
            }
            batch.samples[i] = {std::hypot(x, y), std::atan2(y, x)};
        }
    };

    auto const total = static_cast<std::size_t>(count);
    auto const workers = static_cast<std::size_t>(
        std::clamp<std::int64_t>(threads > 0 ? threads : default_thread_count(), 1, count));
    if (workers == 1) {
        fill(0, total);
        return batch;
    }
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back(fill, total * w / workers, total * (w + 1) / workers);
    }
    return batch;
}

double Histogram::density(std::size_t bin) const
{
    if (total == 0) return 0.0;
    return static_cast<double>(counts[bin]) / (static_cast<double>(total) * width(bin));
}

double Histogram::density_std_error(std::size_t bin) const
{
    if (total == 0) return 0.0;
    double const p = static_cast<double>(counts[bin]) / static_cast<double>(total);
    return std::sqrt(p * (1 - p) / static_cast<double>(total)) / width(bin);
}

EmpiricalDistribution::EmpiricalDistribution(std::vector<double> values) : sorted_(std::move(values))
{
    if (sorted_.empty()) throw EmptyInputError("empirical distribution needs at least one value");
    std::sort(sorted_.begin(), sorted_.end());
}

double EmpiricalDistribution::cdf(double x) const
{
    auto const k = std::upper_bound(sorted_.begin(), sorted_.end(), x) - sorted_.begin();
    return static_cast<double>(k) / static_cast<double>(sorted_.size());
}

double EmpiricalDistribution::cdf_left(double x) const
{
    auto const k = std::lower_bound(sorted_.begin(), sorted_.end(), x) - sorted_.begin();
    return static_cast<double>(k) / static_cast<double>(sorted_.size());
}

Histogram EmpiricalDistribution::histogram(int bins, double lo, double hi) const
{
    if (bins < 1 || !(hi > lo)) throw DomainError("histogram needs bins >= 1 and hi > lo");
    Histogram h;
    h.edges.resize(static_cast<std::size_t>(bins) + 1);
    for (int b = 0; b <= bins; ++b) h.edges[static_cast<std::size_t>(b)] = lo + (hi - lo) * b / bins;
    h.counts.assign(static_cast<std::size_t>(bins), 0);
    h.total = static_cast<std::int64_t>(sorted_.size());
    for (double v : sorted_) {
        if (v < lo || v > hi) continue;
        auto b = static_cast<std::size_t>((v - lo) / (hi - lo) * bins);
        b = std::min(b, static_cast<std::size_t>(bins) - 1);
        ++h.counts[b];
    }
    return h;
}

Histogram EmpiricalDistribution::histogram(int bins) const
{
    double lo = sorted_.front();
    double hi = sorted_.back();
    if (!(hi > lo)) {
        lo -= 0.5;
        hi += 0.5;
    }
    return histogram(bins, lo, hi);
}

EmpiricalDistribution empirical_cdf(std::vector<double> values)
{
    return EmpiricalDistribution(std::move(values));
}

double ks_distance(const EmpiricalDistribution& emp, const CdfFunction& cdf)
{
    auto const xs = emp.sorted();
    auto const n = static_cast<double>(xs.size());
    double worst = 0;
    std::size_t i = 0;
    while (i < xs.size()) {
        std::size_t j = i;
        while (j + 1 < xs.size() && xs[j + 1] == xs[i]) ++j;
        // F just below the jump, so a step-function F is handled exactly too.
        double const below = cdf(std::nextafter(xs[i], -std::numeric_limits<double>::infinity()));
        double const at = cdf(xs[i]);
        worst = std::max({worst, std::abs(below - static_cast<double>(i) / n),
                          std::abs(at - static_cast<double>(j + 1) / n)});
        i = j + 1;
    }
    return worst;
}

KsBracket ks_distance_bracket(const EmpiricalDistribution& emp, const CdfFunction& cdf, int checkpoints)
{
    if (checkpoints < 2) throw DomainError("KS bracket needs at least two checkpoints");
    auto const xs = emp.sorted();
    std::vector<double> cps;
    cps.reserve(static_cast<std::size_t>(checkpoints) + 2);
    for (int c = 0; c <= checkpoints; ++c) {
        auto const idx = static_cast<std::size_t>(
            std::llround(static_cast<double>(xs.size() - 1) * c / checkpoints));
        cps.push_back(xs[idx]);
    }
    cps.erase(std::unique(cps.begin(), cps.end()), cps.end());

    KsBracket out;
    std::vector<double> f(cps.size());
    for (std::size_t k = 0; k < cps.size(); ++k) {
        f[k] = cdf(cps[k]);
        double const right = emp.cdf(cps[k]);
        double const left = emp.cdf_left(cps[k]);
        double const below = cdf(std::nextafter(cps[k], -std::numeric_limits<double>::infinity()));
        out.lower = std::max({out.lower, std::abs(f[k] - right), std::abs(below - left)});
    }
    out.upper = out.lower;
    // Between consecutive checkpoints both CDFs are monotone.
    for (std::size_t k = 0; k + 1 < cps.size(); ++k) {
        double const emp_lo = emp.cdf(cps[k]);
        double const emp_hi = emp.cdf_left(cps[k + 1]);
        out.upper = std::max({out.upper, emp_hi - f[k], f[k + 1] - emp_lo});
    }
    return out;
}

}  // namespace arcwalk
