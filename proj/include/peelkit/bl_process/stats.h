#pragma once

#include "peelkit/bl_process/series.h"
#include "peelkit/util/stats.h"

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace peelkit::bl_process {

// Space constant: one unit of boundary length at volume n corresponds to
// boundary_scale() * sqrt(n) edges.  Exact value 2^{3/2} / 3.
double boundary_scale();

// Common k^{-5/2} coefficient of the one-sided down-step mass after
// averaging the two parity classes, (1/2) * sqrt(2 / (3 pi)).  The survival
// function P[step <= -k] then decays like (2/3) of it times k^{-3/2}.
double increment_tail_coefficient();

// Time constant: time_scale() * n^{3/4} peel steps make one unit of rescaled
// time, chosen as (3/2) * boundary_scale()^{3/2} / increment_tail_coefficient()
// (~ 5.9617) so that the rescaled net-budget walk converges to the spectrally
// negative 3/2-stable process with unit Levy tail.
double time_scale();

// Piecewise-constant cadlag path (L_t, R_t) obtained from a series by
// dividing space by space_unit and time by time_unit.  Stored as a jump
// ledger: the state is (l[i], r[i]) for t in [times[i], times[i+1]), with
// times[0] = 0 and steps that leave both coordinates unchanged skipped.
struct RescaledProcess {
    long long n = 1;
    double space_unit = 0;
    double time_unit = 0;
    double terminal_time = 0; // recorded steps / time_unit
    bool terminated = false;

    std::vector<double> times;
    std::vector<double> l;
    std::vector<double> r;

    // Value at time t >= 0.  Terminated paths stay at their final value past
    // terminal_time; querying a partial record beyond it is an error.
    std::pair<double, double> at(double t) const;
};

RescaledProcess rescale(const BoundaryLengthSeries& s, long long n);

// One line per jump: t,L,R (header included).
void write_rescaled_csv(std::ostream& out, const RescaledProcess& p);

inline constexpr std::uint64_t kNeverStep =
    std::numeric_limits<std::uint64_t>::max();

// A stopping time in both clocks: raw step index and rescaled time
// step / (time_scale() * n^{3/4}).  step == kNeverStep means the condition
// never held within the recorded horizon.
struct StoppingTime {
    std::uint64_t step = kNeverStep;
    double tau = std::numeric_limits<double>::infinity();

    bool finite() const { return step != kNeverStep; }
};

// First step j at which either original arc is consumed to within
// r * boundary_scale() * sqrt(n) edges of its end, i.e.
// y_l >= l_left - r * c * sqrt(n) or y_r >= l_right - r * c * sqrt(n).
// With r = 0 this is a lower bound for the terminal step, typically equal to
// it but strictly smaller when the last event consumes the final original
// edges of one side early.  Finite-boundary series only.
StoppingTime arc_depletion_time(const BoundaryLengthSeries& s, long long n,
                                double r);

// First step j at which both remaining arcs and both net budgets are of the
// scale-n boundary order: with u = boundary_scale() * sqrt(n),
//   a0 * u <= l_left  - y_l  and  w_l + l_left  <= a1 * u,
//   a0 * u <= l_right - y_r  and  w_r + l_right <= a1 * u.
// Requires 0 <= a0 <= a1.  Weakening a0 can only make the time earlier, so
// it is monotone in a0 pathwise.  Finite-boundary series only.
StoppingTime comparable_lengths_time(const BoundaryLengthSeries& s, long long n,
                                     double a0, double a1);

// Importance weight carried by a half-plane run observed up to stop_step
// when it stands in for a finite run with arcs (l_left, l_right):
//   ((w_l + w_r) / (l_left + l_right) + 1)^{-5/2}
// times the indicator that neither coordinate has breached its arc, i.e.
// w_l > -l_left and w_r > -l_right at every step up to stop_step.
double rn_weight(const BoundaryLengthSeries& s, std::uint64_t stop_step,
                 long long l_left, long long l_right);

// Number of steps j <= m whose combined increment dW_l + dW_r is <= -c * m^{2/3}.
// The chance of seeing k of them decays geometrically in k.
std::uint64_t big_jump_count(const BoundaryLengthSeries& s, std::uint64_t m,
                             double c);

// Ensemble diagnostics for half-plane runs: centred increments, the
// downward-tail exponent, the size of the largest exposed block relative to
// m^{2/3}, and how often both coordinates take a macroscopic down-step in the
// same run.
struct TailReport {
    std::size_t runs = 0;
    std::size_t increments = 0; // pooled left-coordinate steps

    MeanResult left_increment_mean; // exact mean is 0
    HillResult down_tail;           // survival exponent, expect 3/2
    double pmf_exponent = 0;              // 1 + down_tail.index, expect 5/2
    std::size_t hill_k = 0;
    std::size_t down_steps = 0;

    double max_exposed_ratio_mean = 0; // mean_j of max (X_l v X_r) / m^{2/3}
    double max_exposed_ratio_max = 0;

    double simultaneous_threshold_factor = 2.0; // k = factor * m^{2/3}
    double simultaneous_run_fraction = 0; // runs with <= -k steps on both sides
    double simultaneous_envelope = 0;     // m^2 * k^{-3} at that threshold

    std::vector<std::string> warnings;
};

TailReport tail_and_limit_stats(const std::vector<BoundaryLengthSeries>& runs);

void write_tail_report_json(std::ostream& out, const TailReport& rep);

} // namespace peelkit::bl_process
