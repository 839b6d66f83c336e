#include "peelkit/util/stats.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace peelkit {

MeanResult mean_and_stderr(const std::vector<double>& xs) {
    MeanResult r;
    r.n = xs.size();
    if (r.n == 0) return r;
    double s = 0.0;
    for (double x : xs) s += x;
    r.mean = s / double(r.n);
    double v = 0.0;
    for (double x : xs) v += (x - r.mean) * (x - r.mean);
    if (r.n > 1) v /= double(r.n - 1);
    r.stderr_ = std::sqrt(v / double(r.n));
    return r;
}

bool agree_within_z(const MeanResult& a, const MeanResult& b, double z) {
    double gap = std::abs(a.mean - b.mean);
    double se = std::sqrt(a.stderr_ * a.stderr_ + b.stderr_ * b.stderr_);
    return gap <= z * se;
}

HillResult hill_tail_index(std::vector<double> samples, std::size_t k) {
    HillResult r;
    samples.erase(std::remove_if(samples.begin(), samples.end(),
                                 [](double x) { return !(x > 0.0); }),
                  samples.end());
    if (samples.size() < k + 1 || k < 2)
        throw std::runtime_error("hill_tail_index: not enough positive samples");
    std::nth_element(samples.begin(), samples.begin() + k, samples.end(),
                     std::greater<double>());
    double xk = samples[k]; // (k+1)-th largest
    double s = 0.0;
    for (std::size_t i = 0; i < k; ++i) s += std::log(samples[i] / xk);
    double gamma = s / double(k); // mean log-excess
    r.index = 1.0 / gamma;
    r.k = k;
    double half = 1.96 / std::sqrt(double(k));
    r.ci_low = r.index * (1.0 - half);
    r.ci_high = r.index * (1.0 + half);
    return r;
}

double ks_distance(std::vector<double> a, std::vector<double> b) {
    if (a.empty() || b.empty()) throw std::runtime_error("ks_distance: empty sample");
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    std::size_t i = 0, j = 0;
    double d = 0.0;
    while (i < a.size() && j < b.size()) {
        double x = std::min(a[i], b[j]);
        while (i < a.size() && a[i] == x) ++i; // step over ties together
        while (j < b.size() && b[j] == x) ++j;
        double fa = double(i) / double(a.size());
        double fb = double(j) / double(b.size());
        d = std::max(d, std::abs(fa - fb));
    }
    return d;
}

namespace {

// Lanczos log-gamma (only used inside gamma_q; std::lgamma is fine too but
// keeping one implementation makes the p-values bit-stable across libms).
double lgamma_local(double x) {
    static const double c[9] = {0.99999999999980993,  676.5203681218851,
                                -1259.1392167224028,  771.32342877765313,
                                -176.61502916214059,  12.507343278686905,
                                -0.13857109526572012, 9.9843695780195716e-6,
                                1.5056327351493116e-7};
    if (x < 0.5) {
        // reflection
        return std::log(M_PI / std::sin(M_PI * x)) - lgamma_local(1.0 - x);
    }
    x -= 1.0;
    double a = c[0];
    double t = x + 7.5;
    for (int i = 1; i < 9; ++i) a += c[i] / (x + double(i));
    return 0.5 * std::log(2.0 * M_PI) + (x + 0.5) * std::log(t) - t + std::log(a);
}

double gamma_p_series(double a, double x) {
    double ap = a, sum = 1.0 / a, del = sum;
    for (int n = 0; n < 500; ++n) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::abs(del) < std::abs(sum) * 1e-15) break;
    }
    return sum * std::exp(-x + a * std::log(x) - lgamma_local(a));
}

double gamma_q_contfrac(double a, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - a, c = 1.0 / tiny, d = 1.0 / b, h = d;
    for (int i = 1; i < 500; ++i) {
        double an = -double(i) * (double(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < 1e-15) break;
    }
    return std::exp(-x + a * std::log(x) - lgamma_local(a)) * h;
}

} // namespace

double gamma_q(double a, double x) {
    if (x < 0.0 || a <= 0.0) throw std::runtime_error("gamma_q: bad arguments");
    if (x == 0.0) return 1.0;
    if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
    return gamma_q_contfrac(a, x);
}

ChiSquareResult chi_square(const std::vector<std::size_t>& observed,
                           const std::vector<double>& expected_probs,
                           std::size_t total_draws) {
    if (observed.size() != expected_probs.size())
        throw std::runtime_error("chi_square: size mismatch");
    ChiSquareResult r;
    double p_sum = 0.0;
    std::size_t o_sum = 0;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        double e = expected_probs[i] * double(total_draws);
        if (e <= 0.0) throw std::runtime_error("chi_square: nonpositive expectation");
        double d = double(observed[i]) - e;
        r.statistic += d * d / e;
        p_sum += expected_probs[i];
        o_sum += observed[i];
    }
    std::size_t leftover = total_draws - o_sum;
    double p_left = 1.0 - p_sum;
    std::size_t cells = observed.size();
    if (p_left > 1e-12 && leftover + cells > 0) {
        double e = p_left * double(total_draws);
        double d = double(leftover) - e;
        r.statistic += d * d / e;
        ++cells;
    }
    r.dof = cells - 1;
    r.p_value = gamma_q(double(r.dof) / 2.0, r.statistic / 2.0);
    return r;
}

} // namespace peelkit
