#pragma once

#include "peelkit/percolation/exploration.h"

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace peelkit::bl_process {

// Per-step boundary bookkeeping of one exploration run.  Entry j of every
// array is the value after the first j events, so all arrays have
// steps() + 1 entries and start at 0.  x counts the fresh (exposed) frontier
// edges currently alive on each side of the marker, y the original boundary
// edges consumed so far on each side, and w = x - y is the net budget.
struct BoundaryLengthSeries {
    percolation::BoundaryConditions bc;
    bool terminated = false;
    bool partial = false;

    std::vector<long long> xl, xr; // exposed, currently on the frontier
    std::vector<long long> yl, yr; // covered originals, cumulative
    std::vector<long long> wl, wr; // net: w = x - y

    std::uint64_t steps() const { return xl.size() - 1; }
};

// Rebuilds the six arrays from the event log alone and cross-checks three
// exact integer identities at every step, as hard errors (a violation means
// the sampler itself is broken, not the caller):
//   * the unexplored boundary length, re-accumulated from the raw event
//     fields, equals w_l + w_r + l_L + l_R (finite runs);
//   * each step's (dw_l, dw_r) increment matches the event:
//     face (1{white}·Ex - Co_L - 1, 1{black}·Ex - Co_R), trivial close
//     (-1, -1), terminal swallow (0, -(Co_R + 1));
//   * the running minimum of w stays within [-y, -y + 3] on both sides and
//     w - min stays within [x - 3, x] (the fresh block in front of the
//     originals never exceeds the last face's contribution).
// Terminated runs must end at w = (-l_L, -l_R) exactly.
BoundaryLengthSeries boundary_series(const percolation::ExplorationRecord& rec);

// One line per step: step,XL,XR,YL,YR,WL,WR (header included).
void write_series_csv(std::ostream& out, const BoundaryLengthSeries& s);

} // namespace peelkit::bl_process
