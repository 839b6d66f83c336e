#pragma once

#include "peelkit/map_core/map.h"
#include "peelkit/util/rng.h"

namespace peelkit::boltzmann {

struct FillOptions {
    bool color_faces = false; // draw an iid colour per revealed face
    double p_white = 0.75;
};

// Fills the hole containing `hole_dart` with a Boltzmann-distributed
// quadrangulation of matching perimeter, working depth-first through the
// pockets each step splits off.  Consumes rng draws one face at a time:
// one uniform per revealed face (two when the step splits off two pockets),
// plus one per face when colouring.
void fill_hole(map_core::PlanarMap& m, int hole_dart, Rng& rng,
               const FillOptions& opt = {});

// A Boltzmann quadrangulation with a simple boundary of perimeter 2l,
// rooted at the boundary (vertices 0..2l-1 in ccw order).
map_core::PlanarMap sample_fb_map(unsigned l, Rng& rng, const FillOptions& opt = {});

} // namespace peelkit::boltzmann
