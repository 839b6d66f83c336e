#include "peelkit/bl_process/stats.h"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace peelkit::bl_process {

double boundary_scale() { return 2.0 * std::sqrt(2.0) / 3.0; }

double increment_tail_coefficient() {
    return 0.5 * std::sqrt(2.0 / (3.0 * std::numbers::pi));
}

double time_scale() {
    return 1.5 * std::pow(boundary_scale(), 1.5) / increment_tail_coefficient();
}

RescaledProcess rescale(const BoundaryLengthSeries& s, long long n) {
    if (n < 1)
        throw std::invalid_argument("rescale: volume parameter must be >= 1");

    RescaledProcess p;
    p.n = n;
    p.space_unit = boundary_scale() * std::sqrt(static_cast<double>(n));
    p.time_unit = time_scale() * std::pow(static_cast<double>(n), 0.75);
    p.terminated = s.terminated;
    p.terminal_time = static_cast<double>(s.steps()) / p.time_unit;

    p.times.push_back(0.0);
    p.l.push_back(0.0);
    p.r.push_back(0.0);
    for (std::size_t j = 1; j < s.wl.size(); ++j) {
        if (s.wl[j] == s.wl[j - 1] && s.wr[j] == s.wr[j - 1]) continue;
        p.times.push_back(static_cast<double>(j) / p.time_unit);
        p.l.push_back(static_cast<double>(s.wl[j]) / p.space_unit);
        p.r.push_back(static_cast<double>(s.wr[j]) / p.space_unit);
    }
    return p;
}

std::pair<double, double> RescaledProcess::at(double t) const {
    if (t < 0.0)
        throw std::invalid_argument("RescaledProcess::at: negative time");
    if (t > terminal_time && !terminated)
        throw std::invalid_argument(
            "RescaledProcess::at: beyond the recorded horizon of a partial run");
    auto it = std::upper_bound(times.begin(), times.end(), t);
    const std::size_t idx = static_cast<std::size_t>(it - times.begin()) - 1;
    return {l[idx], r[idx]};
}

void write_rescaled_csv(std::ostream& out, const RescaledProcess& p) {
    out << "t,L,R\n";
    for (std::size_t i = 0; i < p.times.size(); ++i)
        out << p.times[i] << ',' << p.l[i] << ',' << p.r[i] << '\n';
}

namespace {

void require_finite_series(const BoundaryLengthSeries& s, const char* who) {
    if (s.bc.half_plane())
        throw std::invalid_argument(std::string(who) +
                                    ": finite-boundary series required");
}

double tau_of(std::uint64_t step, long long n) {
    return static_cast<double>(step) /
           (time_scale() * std::pow(static_cast<double>(n), 0.75));
}

} // namespace

StoppingTime arc_depletion_time(const BoundaryLengthSeries& s, long long n,
                                double r) {
    require_finite_series(s, "arc_depletion_time");
    if (n < 1)
        throw std::invalid_argument("arc_depletion_time: volume must be >= 1");
    if (r < 0.0)
        throw std::invalid_argument("arc_depletion_time: negative margin");

    const double margin = r * boundary_scale() * std::sqrt(static_cast<double>(n));
    const double thr_l = static_cast<double>(s.bc.l_left) - margin;
    const double thr_r = static_cast<double>(s.bc.l_right) - margin;

    StoppingTime st;
    for (std::size_t j = 0; j < s.yl.size(); ++j) {
        if (static_cast<double>(s.yl[j]) >= thr_l ||
            static_cast<double>(s.yr[j]) >= thr_r) {
            st.step = j;
            st.tau = tau_of(j, n);
            break;
        }
    }
    return st;
}

StoppingTime comparable_lengths_time(const BoundaryLengthSeries& s, long long n,
                                     double a0, double a1) {
    require_finite_series(s, "comparable_lengths_time");
    if (n < 1)
        throw std::invalid_argument("comparable_lengths_time: volume must be >= 1");
    if (a0 < 0.0 || a1 < a0)
        throw std::invalid_argument(
            "comparable_lengths_time: need 0 <= a0 <= a1");

    const double u = boundary_scale() * std::sqrt(static_cast<double>(n));
    StoppingTime st;
    for (std::size_t j = 0; j < s.yl.size(); ++j) {
        const double left_arc = static_cast<double>(s.bc.l_left - s.yl[j]);
        const double right_arc = static_cast<double>(s.bc.l_right - s.yr[j]);
        const double left_len = static_cast<double>(s.wl[j] + s.bc.l_left);
        const double right_len = static_cast<double>(s.wr[j] + s.bc.l_right);
        if (a0 * u <= left_arc && left_len <= a1 * u && a0 * u <= right_arc &&
            right_len <= a1 * u) {
            st.step = j;
            st.tau = tau_of(j, n);
            break;
        }
    }
    return st;
}

double rn_weight(const BoundaryLengthSeries& s, std::uint64_t stop_step,
                 long long l_left, long long l_right) {
    if (l_left < 1 || l_right < 1)
        throw std::invalid_argument("rn_weight: target arcs must be positive");
    if (stop_step > s.steps())
        throw std::invalid_argument("rn_weight: stop_step beyond the record");

    for (std::uint64_t j = 0; j <= stop_step; ++j) {
        if (s.wl[j] <= -l_left || s.wr[j] <= -l_right) return 0.0;
    }
    const double base = static_cast<double>(s.wl[stop_step] + s.wr[stop_step]) /
                            static_cast<double>(l_left + l_right) +
                        1.0;
    if (base <= 0.0) return 0.0;
    return std::pow(base, -2.5);
}

std::uint64_t big_jump_count(const BoundaryLengthSeries& s, std::uint64_t m,
                             double c) {
    if (m < 1 || m > s.steps())
        throw std::invalid_argument("big_jump_count: m outside the record");
    if (c <= 0.0)
        throw std::invalid_argument("big_jump_count: threshold factor must be > 0");

    const double thr = -c * std::pow(static_cast<double>(m), 2.0 / 3.0);
    std::uint64_t count = 0;
    for (std::uint64_t j = 1; j <= m; ++j) {
        const long long d =
            (s.wl[j] - s.wl[j - 1]) + (s.wr[j] - s.wr[j - 1]);
        if (static_cast<double>(d) <= thr) ++count;
    }
    return count;
}

TailReport tail_and_limit_stats(const std::vector<BoundaryLengthSeries>& runs) {
    if (runs.empty())
        throw std::invalid_argument("tail_and_limit_stats: empty ensemble");

    TailReport rep;
    rep.runs = runs.size();

    std::vector<double> incs;
    std::vector<double> downs;
    double ratio_sum = 0.0;
    std::size_t both_big = 0;

    for (const BoundaryLengthSeries& s : runs) {
        if (!s.bc.half_plane())
            throw std::invalid_argument(
                "tail_and_limit_stats: half-plane runs expected");
        if (s.steps() == 0)
            throw std::invalid_argument("tail_and_limit_stats: empty run");

        const double m23 =
            std::pow(static_cast<double>(s.steps()), 2.0 / 3.0);
        const double big = rep.simultaneous_threshold_factor * m23;
        bool big_left = false;
        bool big_right = false;
        long long max_exposed = 0;

        for (std::size_t j = 1; j < s.wl.size(); ++j) {
            const long long dl = s.wl[j] - s.wl[j - 1];
            const long long dr = s.wr[j] - s.wr[j - 1];
            incs.push_back(static_cast<double>(dl));
            if (dl < 0) downs.push_back(static_cast<double>(-dl));
            if (static_cast<double>(dl) <= -big) big_left = true;
            if (static_cast<double>(dr) <= -big) big_right = true;
            max_exposed = std::max({max_exposed, s.xl[j], s.xr[j]});
        }

        const double ratio = static_cast<double>(max_exposed) / m23;
        ratio_sum += ratio;
        rep.max_exposed_ratio_max = std::max(rep.max_exposed_ratio_max, ratio);
        if (big_left && big_right) ++both_big;
    }

    rep.increments = incs.size();
    rep.left_increment_mean = mean_and_stderr(incs);
    rep.down_steps = downs.size();
    rep.max_exposed_ratio_mean = ratio_sum / static_cast<double>(rep.runs);
    rep.simultaneous_run_fraction =
        static_cast<double>(both_big) / static_cast<double>(rep.runs);
    rep.simultaneous_envelope =
        std::pow(rep.simultaneous_threshold_factor, -3.0);

    if (downs.size() >= 20) {
        rep.hill_k = std::min<std::size_t>(1000, downs.size() / 10);
        rep.hill_k = std::max<std::size_t>(rep.hill_k, 10);
        rep.down_tail = hill_tail_index(downs, rep.hill_k);
        rep.pmf_exponent = 1.0 + rep.down_tail.index;
    } else {
        rep.warnings.push_back(
            "too few downward steps for a tail exponent estimate");
    }
    if (rep.increments < 100000)
        rep.warnings.push_back(
            "fewer than 1e5 pooled increments; tail statistics are noisy");

    return rep;
}

void write_tail_report_json(std::ostream& out, const TailReport& rep) {
    nlohmann::ordered_json j;
    j["runs"] = rep.runs;
    j["increments"] = rep.increments;
    j["left_increment_mean"] = rep.left_increment_mean.mean;
    j["left_increment_stderr"] = rep.left_increment_mean.stderr_;
    j["down_steps"] = rep.down_steps;
    j["down_tail_index"] = rep.down_tail.index;
    j["down_tail_ci"] = {rep.down_tail.ci_low, rep.down_tail.ci_high};
    j["pmf_exponent"] = rep.pmf_exponent;
    j["hill_k"] = rep.hill_k;
    j["max_exposed_ratio_mean"] = rep.max_exposed_ratio_mean;
    j["max_exposed_ratio_max"] = rep.max_exposed_ratio_max;
    j["simultaneous_threshold_factor"] = rep.simultaneous_threshold_factor;
    j["simultaneous_run_fraction"] = rep.simultaneous_run_fraction;
    j["simultaneous_envelope"] = rep.simultaneous_envelope;
    j["warnings"] = rep.warnings;
    out << j.dump(2) << '\n';
}

} // namespace peelkit::bl_process
