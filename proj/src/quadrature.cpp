#include "arcwalk/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include <boost/math/special_functions/legendre.hpp>

namespace arcwalk::quad {
namespace {

GaussRule build_rule(std::size_t n)
{
    GaussRule rule;
    rule.nodes.reserve(n);
    rule.weights.reserve(n);
    auto const order = static_cast<unsigned>(n);
    // Nonnegative zeros, ascending.
    std::vector<double> const zeros = boost::math::legendre_p_zeros<double>(static_cast<int>(order));
    auto weight = [order](double x) {
        double const dp = boost::math::legendre_p_prime<double>(static_cast<int>(order), x);
        return 2.0 / ((1 - x * x) * dp * dp);
    };
    for (auto it = zeros.rbegin(); it != zeros.rend(); ++it) {
        if (*it == 0.0) continue;
        rule.nodes.push_back(-*it);
        rule.weights.push_back(weight(*it));
    }
    for (double z : zeros) {
        if (z == 0.0 && n % 2 == 0) continue;
        rule.nodes.push_back(z);
        rule.weights.push_back(weight(z));
    }
    return rule;
}

}  // namespace

const GaussRule& gauss_legendre(std::size_t n)
{
    static std::mutex mutex;
    static std::map<std::size_t, GaussRule> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end()) {
        it = cache.emplace(n, build_rule(n)).first;
    }
    return it->second;
}

double WynnEpsilon::push(double s)
{
    // row_[k] holds eps_k on the latest anti-diagonal of the epsilon table:
    //   eps_{k+1}^{(m)} = eps_{k-1}^{(m+1)} + 1 / (eps_k^{(m+1)} - eps_k^{(m)}).
    // Even columns are the limit estimates.
    ++count_;
    std::vector<double> next(row_.size() + 1);
    next[0] = s;
    std::size_t filled = 1;
    for (std::size_t k = 0; k < row_.size(); ++k) {
        double const diff = next[k] - row_[k];
        if (diff == 0.0) break;  // column converged exactly
        double const below = k == 0 ? 0.0 : row_[k - 1];
        next[k + 1] = below + 1.0 / diff;
        filled = k + 2;
    }
    next.resize(filled);
    row_ = std::move(next);
    std::size_t const top = row_.size() - 1;
    double const est = row_[top - top % 2];
    error_ = count_ > 1 ? std::abs(est - last_) : std::abs(est);
    last_ = est;
    return est;
}

}  // namespace arcwalk::quad
