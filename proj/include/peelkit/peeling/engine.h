#pragma once

#include "peelkit/boltzmann/sample.h"
#include "peelkit/map_core/map.h"
#include "peelkit/peeling/indicator.h"
#include "peelkit/util/rng.h"

#include <memory>

namespace peelkit::peeling {

enum class PeelMode : std::uint8_t { Lazy, Explicit };

// Exploration frontier of a peeling run.  Lazy states carry only the
// boundary bookkeeping; explicit states also realize the revealed part of
// the map, keeping the bookkeeping mirrored for cross-checks.
//
// The unexplored region is a hole of length `perimeter`; the peel edge is
// slot 0 of its boundary cycle and `target_slot` (1..perimeter-1, counted
// ccw from the peel edge) carries the marker the exploration is aimed at.
// Half-plane states have no finite perimeter and aim at infinity.
struct PeelingState {
    PeelMode mode = PeelMode::Lazy;
    bool half_plane = false;
    long long perimeter = 0;
    long long target_slot = 0;
    std::uint64_t steps = 0;
    bool terminal = false;

    std::shared_ptr<map_core::PlanarMap> map; // explicit mode only
    int cursor_dart = -1;                     // peel edge, hole side
    int target_dart = -1;                     // marked boundary edge

    boltzmann::FillOptions fill_options;      // passed through to pocket fills
    int last_face = -1;                       // face revealed by the latest step
};

// target_slot -1 selects the default marker, the edge just left of the peel
// edge (slot perimeter-1).
PeelingState make_lazy_state(unsigned perimeter, long long target_slot = -1);
PeelingState make_explicit_state(unsigned perimeter, long long target_slot = -1);
PeelingState make_lazy_half_plane_state();

// Advances the exploration by one peeling step and returns the event
// (face colour left Uncolored).  In explicit mode the revealed face is
// carved into the map and every region not containing the marker is filled
// in place, consuming further draws from the same rng; the two modes
// therefore realize different runs from equal seeds but follow the same
// one-step law.  Throws std::logic_error on a terminal state.
PeelEvent peel_step(PeelingState& st, Rng& rng);

// Same step, but explicit-mode fills draw from `fill_rng` instead of `rng`,
// so the indicator stream is identical in the two modes under equal seeds.
PeelEvent peel_step(PeelingState& st, Rng& rng, Rng& fill_rng);

// Recomputes the marker slot of an explicit state by walking the hole cycle
// from the cursor; must agree with target_slot (used by consistency checks).
long long explicit_marker_slot(const PeelingState& st);

} // namespace peelkit::peeling
