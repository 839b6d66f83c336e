#pragma once

#include "peelkit/peeling/engine.h"

#include <vector>

namespace peelkit::peeling {

// Radius-r cluster grown by peeling the hole of an explicit state layer by
// layer from a seed arc, aimed away from the state's marker edge.
struct LayerResult {
    std::vector<int> cluster_vertices;   // vertex ids
    std::vector<int> cluster_edge_darts; // one dart per cluster edge (lower id)
    std::vector<int> outer_arc_darts;   // hole-side darts of the fresh frontier
    std::uint64_t steps_used = 0;       // peeling events consumed
    bool swallowed_marker = false;      // the hole closed before reaching r
};

// Grows the cluster B_r from `seed_darts` (a contiguous arc of the hole
// cycle, hole side): repeatedly peels the hole edge whose endpoints are
// nearest the seed in the explored subgraph, until every frontier edge has
// both endpoints at explored distance > radius.  Pockets split off on the
// far side of the marker are filled and absorbed, so the cluster's
// complement stays connected and the remainder is again Boltzmann given its
// perimeter.  The result is squeezed between filled metric balls:
// B_radius(filled) lies inside the cluster, which lies inside
// B_{radius+2}(filled).
//
// radius 0 returns the seed arc itself as both cluster and outer arc.
// `target_dart` >= 0 re-aims the state at that boundary edge first.
// Throws std::invalid_argument for a negative radius, a lazy or terminal
// state, or a seed that is not a contiguous arc of the hole avoiding the
// marker.
LayerResult peel_by_layers(PeelingState& st, const std::vector<int>& seed_darts,
                           int radius, Rng& rng, int target_dart = -1);

} // namespace peelkit::peeling
