#pragma once

#include "peelkit/peeling/indicator.h"
#include "peelkit/util/bigrat.h"
#include "peelkit/util/rng.h"

#include <vector>

namespace peelkit::peeling {

// One-step law of peeling a Boltzmann quadrangulation with a simple boundary
// of even perimeter p.  Writing w(q) for Z(q) 54^{-q/2}, the catalogue is
//
//   trivial close        1 / Z(2)                  only at p = 2
//   free                 (54/144) w(p+2) / w(p)          2 new inner vertices
//   pocket right (m)     (54/12) w(m+1) w(p+1-m) / w(p)  m odd, 1 new vertex
//   pocket left  (m)     same mass, mirrored
//   two pockets (m1,m2)  54 w(m1+1) w(m2+1) w(m3+1) / w(p), all odd,
//                        m3 = p-1-m1-m2 >= 1, no new vertex
//
// These sum to exactly 1 (the one-step decomposition of Z); construction
// fails if the floating-point total drifts.
class FinitePeelLaw {
public:
    explicit FinitePeelLaw(unsigned perimeter);

    unsigned perimeter() const { return p_; }

    // One configuration; consumes one uniform, plus a second when the step
    // splits off two pockets.
    PeelIndicator sample_indicator(Rng& rng) const;

    // Exact transition probability of a configuration (0 if impossible here).
    double indicator_prob(const PeelIndicator& ind) const;

    double trivial_close_prob() const { return trivial_; }
    double free_prob() const { return free_; }
    double pocket_right_prob(long long m) const; // indicator (m, p-1-m)
    double pocket_left_prob(long long m) const;  // indicator (p-1-m, m)
    double two_pocket_prob(long long m1, long long m2) const;

    double total() const { return total_; }

private:
    unsigned p_;
    double trivial_ = 0, free_ = 0;
    std::vector<double> pocket_cum_; // over m = 1, 3, ..., p-1
    std::vector<double> split_cum_;  // marginal of m1 over m1 = 1, 3, ..., p-3
    double pocket_sum_ = 0, split_sum_ = 0, total_ = 0;
};

// Shared per-perimeter instances (built once each, thread-safe).
const FinitePeelLaw& finite_law(unsigned perimeter);

// One peeling event of the finite-boundary map.  `s_star` is the boundary
// slot carrying the target marker, counted 1..p-1 counterclockwise from the
// peeled edge; -1 selects the conventional default p-1 (the edge just left
// of the peeled one).  Perimeter 0 returns the terminal empty event.
PeelEvent sample_indicator_fb(unsigned perimeter, Rng& rng, long long s_star = -1);

// Exact rational total of the catalogue weights relative to Z(p); equals 1
// for every even perimeter (checked in tests, used as a library invariant).
BigRat finite_law_total_exact(unsigned perimeter);

} // namespace peelkit::peeling
