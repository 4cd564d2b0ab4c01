#pragma once

#include <vector>

namespace arcwalk {

double normal_cdf(double x);
double normal_pdf(double x);

/// Law of sum_j w_j chi2(k_j, lambda_j) + s Z + m.
struct GenChi2Params {
    std::vector<double> weights;
    std::vector<int> dofs;
    std::vector<double> noncentralities;
    double gaussian_sd = 0;
    double offset = 0;
};

/// Generalized chi-square distribution evaluated by inverting its
/// characteristic function (Gil-Pelaez). Throws DomainError on invalid
/// parameters and ConvergenceError when an inversion misses its target.
class GeneralizedChiSquare {
  public:
    explicit GeneralizedChiSquare(GenChi2Params params);

    const GenChi2Params& params() const noexcept { return p_; }
    double mean() const;
    double variance() const;

    double cdf(double x) const;
    double pdf(double x) const;

    /// The inversion path with all closed-form shortcuts disabled.
    double cdf_by_inversion(double x) const;
    double pdf_by_inversion(double x) const;

  private:
    enum class Kind { sine, cosine };
    double invert(double x, Kind kind) const;

    GenChi2Params p_;
    bool all_positive_ = false;
    bool all_negative_ = false;
    bool single_central_ = false;
    int total_dof_ = 0;  // over nonzero weights
};

}  // namespace arcwalk
