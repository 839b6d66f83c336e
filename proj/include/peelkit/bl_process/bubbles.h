#pragma once

#include "peelkit/bl_process/series.h"
#include "peelkit/percolation/exploration.h"

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace peelkit::bl_process {

// Side of the marker on which a bubble was pinched off the unexplored
// boundary: Left is the root-edge side, Right the marked-edge side.
enum class CutSide : std::uint8_t { Left, Right };

// One connected region cut away from the unexplored boundary by a peel step.
struct BubbleCut {
    std::uint64_t step = 0; // 1-based event index that produced the cut
    double tau = 0;         // step / (time_scale() * n^{3/4})
    CutSide side = CutSide::Left;
    long long perimeter = 0;
    double rescaled = 0; // perimeter / (boundary_scale() * sqrt(n))
};

// Everything pinched off up to rescaled time t, largest perimeter first,
// plus the perimeter still unexplored at that step.  The exact accounting
// identity (cut perimeters + unexplored = initial perimeter + 2 * face steps
// - 2 * close steps) is enforced as a hard error during the census.
struct BubbleCensus {
    long long n = 1;
    double t = 0;
    std::uint64_t step_limit = 0; // events actually consumed
    double delta0 = 0; // unexplored perimeter / (boundary_scale() * sqrt(n))

    std::vector<BubbleCut> cuts; // sorted by perimeter, descending
    long long unexplored_perimeter = 0;
    std::uint64_t face_steps = 0;
    std::uint64_t close_steps = 0;
};

// Replays a finite-boundary record up to floor(t * time_scale() * n^{3/4})
// events.  Face steps cut one bubble per off-target indicator part (parts
// before the target sit on the marked-edge side, parts after it on the
// root-edge side); the final swallow step cuts the whole remaining hole on
// the marked-edge side; trivial closes cut nothing.  Asking for a time past
// the recorded horizon of an unfinished run is an error; terminated runs
// saturate at their final state.
BubbleCensus bubble_census(const percolation::ExplorationRecord& rec, double t,
                           long long n);

// One line per cut: step,tau,side,perimeter,rescaled (header included).
void write_census_csv(std::ostream& out, const BubbleCensus& census);

} // namespace peelkit::bl_process
