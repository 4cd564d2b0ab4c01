#include "arcwalk/genchi2.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "arcwalk/errors.hpp"
#include "arcwalk/quadrature.hpp"

namespace arcwalk {
namespace {

constexpr double integral_tol = 1e-13;
constexpr int max_chunks = 4000;

}  // namespace

double normal_cdf(double x)
{
    return 0.5 * std::erfc(-x / std::numbers::sqrt2);
}

double normal_pdf(double x)
{
    return std::exp(-0.5 * x * x) * (0.5 * std::numbers::inv_sqrtpi * std::numbers::sqrt2);
}

GeneralizedChiSquare::GeneralizedChiSquare(GenChi2Params params) : p_(std::move(params))
{
    std::size_t const n = p_.weights.size();
    if (n == 0 || p_.dofs.size() != n || p_.noncentralities.size() != n) {
        throw DomainError("weights, dofs and noncentralities need equal nonzero length");
    }
    for (std::size_t j = 0; j < n; ++j) {
        if (p_.dofs[j] < 1) throw DomainError("degrees of freedom must be >= 1");
        if (!(p_.noncentralities[j] >= 0)) throw DomainError("noncentralities must be >= 0");
        if (!std::isfinite(p_.weights[j])) throw DomainError("weights must be finite");
    }
    if (!(p_.gaussian_sd >= 0) || !std::isfinite(p_.offset)) {
        throw DomainError("gaussian sd must be >= 0 and the offset finite");
    }
    bool any_pos = false;
    bool any_neg = false;
    for (std::size_t j = 0; j < n; ++j) {
        if (p_.weights[j] > 0) any_pos = true;
        if (p_.weights[j] < 0) any_neg = true;
        if (p_.weights[j] != 0) total_dof_ += p_.dofs[j];
    }
    if (!any_pos && !any_neg && p_.gaussian_sd == 0) {
        throw DomainError("law is a point mass: all weights and the gaussian sd are zero");
    }
    all_positive_ = any_pos && !any_neg && p_.gaussian_sd == 0;
    all_negative_ = any_neg && !any_pos && p_.gaussian_sd == 0;
    single_central_ = n == 1 && p_.noncentralities[0] == 0 && p_.weights[0] != 0
                      && p_.gaussian_sd == 0;
}

double GeneralizedChiSquare::mean() const
{
    double m = p_.offset;
    for (std::size_t j = 0; j < p_.weights.size(); ++j) {
        m += p_.weights[j] * (p_.dofs[j] + p_.noncentralities[j]);
    }
    return m;
}

double GeneralizedChiSquare::variance() const
{
    double v = p_.gaussian_sd * p_.gaussian_sd;
    for (std::size_t j = 0; j < p_.weights.size(); ++j) {
        v += 2 * p_.weights[j] * p_.weights[j] * (p_.dofs[j] + 2 * p_.noncentralities[j]);
    }
    return v;
}

double GeneralizedChiSquare::cdf(double x) const
{
    if (all_positive_ && x <= p_.offset) return 0.0;
    if (all_negative_ && x >= p_.offset) return 1.0;
    if (single_central_) {
        double const w = p_.weights[0];
        double const k = 0.5 * p_.dofs[0];
        double const p = boost::math::gamma_p(k, (x - p_.offset) / (2 * w));
        return w > 0 ? p : 1 - p;
    }
    return cdf_by_inversion(x);
}

double GeneralizedChiSquare::pdf(double x) const
{
    if (all_positive_ && x <= p_.offset) return 0.0;
    if (all_negative_ && x >= p_.offset) return 0.0;
    if (single_central_) {
        double const w = std::abs(p_.weights[0]);
        double const k = 0.5 * p_.dofs[0];
        double const y = (x - p_.offset) / p_.weights[0];
        return boost::math::gamma_p_derivative(k, y / 2) / (2 * w);
    }
    return pdf_by_inversion(x);
}

double GeneralizedChiSquare::cdf_by_inversion(double x) const
{
    return std::clamp(0.5 - invert(x, Kind::sine) / std::numbers::pi, 0.0, 1.0);
}

double GeneralizedChiSquare::pdf_by_inversion(double x) const
{
    return std::max(0.0, invert(x, Kind::cosine) / std::numbers::pi);
}

double GeneralizedChiSquare::invert(double x, Kind kind) const
{
    std::size_t const n = p_.weights.size();
    double const s = p_.gaussian_sd;
    double const m = p_.offset;

    // Characteristic function in polar form: log modulus and argument.
    auto integrand = [&](double t) {
        double log_mod = -0.5 * s * s * t * t;
        double arg = t * m;
        for (std::size_t j = 0; j < n; ++j) {
            double const w = p_.weights[j];
            double const k = p_.dofs[j];
            double const lam = p_.noncentralities[j];
            double const q = 4 * w * w * t * t;
            log_mod -= 0.25 * k * std::log1p(q) + 2 * lam * w * w * t * t / (1 + q);
            arg += 0.5 * k * std::atan(2 * w * t) + lam * w * t / (1 + q);
        }
        double const mod = std::exp(log_mod);
        if (kind == Kind::sine) return mod * std::sin(arg - t * x) / t;
        return mod * std::cos(arg - t * x);
    };

    // Bound on the integral of the envelope beyond T.
    auto tail_bound = [&](double T) {
        double const inf = std::numeric_limits<double>::infinity();
        double const order = 0.5 * total_dof_ + (kind == Kind::sine ? 0.0 : -1.0);
        if (!(order > 0)) return inf;
        double log_b = -0.5 * s * s * T * T;
        for (std::size_t j = 0; j < n; ++j) {
            double const w = p_.weights[j];
            if (w == 0) continue;
            log_b -= 0.5 * p_.dofs[j] * std::log(2 * std::abs(w) * T);
            log_b -= 2 * p_.noncentralities[j] * w * w * T * T / (1 + 4 * w * w * T * T);
        }
        double const reach = kind == Kind::sine ? 1.0 : T;
        return std::exp(log_b) * reach / order;
    };

    // Every factor is nonincreasing in t, so once this underflows the rest
    // of an oscillating integrand is below anything representable.
    auto log_envelope = [&](double t) {
        double v = -0.5 * s * s * t * t;
        for (std::size_t j = 0; j < n; ++j) {
            double const w = p_.weights[j];
            double const q = 4 * w * w * t * t;
            v -= 0.25 * p_.dofs[j] * std::log1p(q) + 2 * p_.noncentralities[j] * w * w * t * t / (1 + q);
        }
        return v;
    };

    double const omega = std::abs(x - m);
    double scale = s;
    for (std::size_t j = 0; j < n; ++j) scale = std::max(scale, 2 * std::abs(p_.weights[j]));

    if (omega * 1e12 < scale) {
        // No oscillation to speak of.
        if (kind == Kind::cosine && total_dof_ <= 2 && s == 0) {
            throw ConvergenceError("genchi2: density diverges at the offset");
        }
        boost::math::quadrature::exp_sinh<double> integrator;
        double err = 0;
        double const v = integrator.integrate(integrand, integral_tol, &err);
        if (!std::isfinite(v) || err > 1e-7) {
            throw ConvergenceError("genchi2: inversion at the offset did not converge");
        }
        return v;
    }

    // Bound on how fast phase and log-envelope change at t; nonincreasing
    // in t. The s^2 t envelope term is capped by the cutoff below.
    double const cutoff = s > 0 ? 9.6 / s : std::numeric_limits<double>::infinity();
    auto speed = [&](double t) {
        double v = omega + 11 * s;
        for (std::size_t j = 0; j < n; ++j) {
            double const w = std::abs(p_.weights[j]);
            v += 2 * w * (p_.dofs[j] + p_.noncentralities[j] + 1) / (1 + 2 * w * t);
        }
        return v;
    };
    const auto& rule = quad::gauss_legendre(20);
    auto chunk = [&](double lo, double hi) {
        double sum = 0;
        while (lo < hi) {
            double const next = std::min(hi, lo + 2 / speed(lo));
            sum += quad::integrate(integrand, lo, next, rule);
            lo = next;
        }
        return sum;
    };

    // Half periods of the asymptotic oscillation, summed and extrapolated.
    double const half_period = std::numbers::pi / omega;
    quad::WynnEpsilon wynn;
    double partial = 0;
    double lo = 0;
    // Wynn is only trusted once the chunks alternate in sign. Before the
    // asymptotic regime the phase can be slow and the decay Gaussian, and
    // there it settles on a slightly wrong limit.
    double prev_piece = 0;
    int settled = 0;
    for (int c = 0; c < max_chunks; ++c) {
        double const hi = lo + half_period;
        double const piece = chunk(lo, hi);
        partial += piece;
        lo = hi;
        if (lo >= cutoff || tail_bound(lo) < integral_tol || log_envelope(lo) < -700) return partial;
        double const est = wynn.push(partial);
        bool const alternating = piece * prev_piece < 0;
        prev_piece = piece;
        settled = alternating && wynn.error_estimate() < integral_tol ? settled + 1 : 0;
        if (wynn.size() >= 6 && settled >= 3) return est;
    }
    throw ConvergenceError("genchi2: inversion did not converge within " + std::to_string(max_chunks)
                           + " half periods at x=" + std::to_string(x));
}

}  // namespace arcwalk
