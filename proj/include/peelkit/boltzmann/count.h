#pragma once

#include "peelkit/util/bigrat.h"

namespace peelkit::boltzmann {

// Number of rooted quadrangulations with a simple boundary of perimeter 2l
// and n inner vertices:
//
//   count = 3^{n-1} (3l)! (3l-3+2n)! / (n! l! (2l-1)! (n+3l-1)!)
//
// (an integer despite the 3^{-1} at n = 0).  count(0, 1) = 1 is the map with
// a single edge and no faces.
BigInt count_maps(unsigned n_inner, unsigned l_half_perimeter);

// Same quantity computed by the one-step root-face decomposition, with no
// shared code with the closed form: a map either is the trivial edge map,
// or removing the face behind the root edge leaves one, two or three maps
// whose sizes add up.  Used as an independent route in tests.
BigInt count_maps_recursive(unsigned n_inner, unsigned l_half_perimeter);

} // namespace peelkit::boltzmann
