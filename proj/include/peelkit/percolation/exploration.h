#pragma once

#include "peelkit/map_core/map.h"
#include "peelkit/peeling/engine.h"
#include "peelkit/peeling/indicator.h"

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

namespace peelkit::percolation {

// Boundary condition of a face-percolation exploration.  The boundary of the
// disk is split into `l_left` edges counted weakly left of the root edge
// (root included) and `l_right` edges strictly right of it (marked edge
// included).  External quadrangles hang off every boundary edge; the one on
// the root edge, the ones on the left arc and the one on the marked edge are
// white, the remaining `l_right - 1` are black.  Negative arc lengths select
// the half-plane variant, where both arcs are infinite.
struct BoundaryConditions {
    long long l_left = 1;
    long long l_right = 1;

    bool half_plane() const { return l_left < 0 || l_right < 0; }
    long long perimeter() const { return l_left + l_right; }
    void validate() const;
};

BoundaryConditions finite_bc(long long l_left, long long l_right);
BoundaryConditions half_plane_bc();

// Replays peel events against the frontier decomposition of the unexplored
// boundary.  In ccw order from the current tip edge the frontier reads:
// tip, `xb` fresh edges on the black side, `ob` surviving original black
// edges, the marked edge, `ow` surviving original white edges, `xw` fresh
// edges on the white side.  Both fresh blocks behave as stacks: newly
// exposed edges enter at the tip end and coverage consumes from the tip end,
// so original edges are only reached once the fresh ones in front of them
// are gone.  The exposed/covered tallies of Definition-style bookkeeping
// (x/y below) are exact functions of this state; any mismatch with the
// closed-form identities is a hard error.
class BoundaryTracker {
  public:
    explicit BoundaryTracker(const BoundaryConditions& bc);

    void apply(const peeling::PeelEvent& ev);

    bool terminal() const { return terminal_; }
    // Set after a black step leaves no white edge on the frontier; the next
    // event must be the swallow step that consumes the rest of the hole.
    bool pending_swallow() const { return pending_swallow_; }

    long long perimeter() const;   // current hole length (finite case)
    long long marker_slot() const; // ccw slots from the tip to the marked edge

    long long x_left() const;  // fresh frontier edges on the white side
    long long x_right() const; // fresh frontier edges on the black side
    long long y_left() const;  // consumed original edges, root-edge side
    long long y_right() const; // consumed original edges, marked-edge side
    long long w_left() const { return x_left() - y_left(); }
    long long w_right() const { return x_right() - y_right(); }

  private:
    enum class Tip : std::uint8_t { None, Fresh, Original };

    BoundaryConditions bc_;
    long long xw_ = 0, ow_ = 0, xb_ = 0, ob_ = 0;
    long long yl_ = 0, yr_ = 0;
    Tip tip_ = Tip::Original;
    bool pending_swallow_ = false;
    bool terminal_ = false;

    void check() const;
};

// Full transcript of one exploration run.  Events carry the quad colour in
// face_color (Uncolored for the trivial close and for the final swallow
// step, which reveal no coloured quad through the percolation rule).
struct ExplorationRecord {
    BoundaryConditions bc;
    peeling::PeelMode mode = peeling::PeelMode::Lazy;
    std::uint64_t seed = 0;
    std::uint64_t step_budget = 0;

    std::vector<peeling::PeelEvent> events;
    bool terminated = false; // boundary fully explored
    bool partial = false;    // stopped by the step budget instead

    // Explicit mode only: the realized map plus per-step geometry.
    std::shared_ptr<map_core::PlanarMap> map;
    int root_dart = -1;   // original hole-side dart of the root edge
    int target_dart = -1; // original hole-side dart of the marked edge
    std::vector<int> peeled_darts; // hole-side dart peeled at each event
    std::vector<int> peeled_heads; // its head vertex at peel time
    std::vector<std::pair<int, int>> face_ranges; // faces created per event

    std::uint64_t terminal_step() const { return events.size(); }
};

// Runs the percolation-adapted peeling exploration.  Two independent rng
// streams are derived from `seed`: one feeds the peel indicators and quad
// colours (identical across modes), the other feeds explicit-mode pocket
// fills.  Finite runs go until the boundary is exhausted, erroring out past
// 1000 * perimeter^{3/2} steps; a nonzero `step_budget` stops earlier and
// flags the record partial.  The half-plane case requires lazy mode and a
// positive budget.
ExplorationRecord run_exploration(const BoundaryConditions& bc,
                                  peeling::PeelMode mode,
                                  std::uint64_t step_budget,
                                  std::uint64_t seed);

} // namespace peelkit::percolation
