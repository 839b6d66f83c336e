#pragma once

#include <cstddef>
#include <vector>

namespace peelkit {

struct MeanResult {
    double mean = 0.0;
    double stderr_ = 0.0; // standard error of the mean
    std::size_t n = 0;
};

MeanResult mean_and_stderr(const std::vector<double>& xs);

// |a - b| <= z * sqrt(se_a^2 + se_b^2)
bool agree_within_z(const MeanResult& a, const MeanResult& b, double z);

struct HillResult {
    double index = 0.0; // tail exponent estimate (alpha of P[X>x] ~ x^-alpha)
    double ci_low = 0.0;
    double ci_high = 0.0;
    std::size_t k = 0; // order statistics used
};

// Hill estimator on the upper tail of positive samples, top k order stats.
// 95% CI via asymptotic normality: alpha * (1 +/- 1.96/sqrt(k)).
HillResult hill_tail_index(std::vector<double> samples, std::size_t k);

// Two-sample Kolmogorov–Smirnov distance (sup norm between empirical CDFs).
double ks_distance(std::vector<double> a, std::vector<double> b);

struct ChiSquareResult {
    double statistic = 0.0;
    std::size_t dof = 0;
    double p_value = 0.0;
};

// Pearson chi-square of observed counts against expected probabilities
// (probabilities need not sum to 1; the remainder is pooled into a ghost
// cell only if leftover_count > 0).
ChiSquareResult chi_square(const std::vector<std::size_t>& observed,
                           const std::vector<double>& expected_probs,
                           std::size_t total_draws);

// Regularized upper incomplete gamma Q(a, x); used for chi-square p-values.
double gamma_q(double a, double x);

} // namespace peelkit
