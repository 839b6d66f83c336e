#pragma once

#include "peelkit/map_core/map.h"

#include <array>
#include <cstdint>
#include <string>

namespace peelkit::peeling {

// Marks the component of a half-plane decomposition that keeps the infinite
// boundary.  Finite arcs are >= 0.
inline constexpr long long kInfiniteArc = -1;

// One-step decomposition of the unexplored region at a boundary edge: the
// revealed quadrilateral splits the old boundary into at most three
// components, recorded as the number of old boundary edges each keeps, in
// counterclockwise order starting from the peeled edge.  n_parts == 0 is the
// degenerate step that closes a perimeter-2 region with no revealed face.
struct PeelIndicator {
    std::uint8_t n_parts = 0;
    std::array<long long, 3> arc{{0, 0, 0}};

    bool operator==(const PeelIndicator& o) const {
        if (n_parts != o.n_parts) return false;
        for (int i = 0; i < n_parts; ++i)
            if (arc[i] != o.arc[i]) return false;
        return true;
    }
    bool operator!=(const PeelIndicator& o) const { return !(*this == o); }

    bool trivial_close() const { return n_parts == 0; }

    // Index of the infinite component, or -1 if all parts are finite.
    int infinite_part() const {
        for (int i = 0; i < n_parts; ++i)
            if (arc[i] == kInfiniteArc) return i;
        return -1;
    }

    long long finite_arc_total() const {
        long long s = 0;
        for (int i = 0; i < n_parts; ++i)
            if (arc[i] != kInfiniteArc) s += arc[i];
        return s;
    }

    // Edges the revealed face contributes to component i: 3 for a lone
    // component, 1 for an odd arc, 2 for an even arc.
    int fresh_edges(int i) const;

    // Total boundary length of component i after the step (arc + fresh),
    // or kInfiniteArc for the infinite component.
    long long component_perimeter(int i) const;

    std::string to_string() const; // e.g. "(3,inf)"; "()" for a trivial close
};

constexpr std::uint8_t kStepFace = 0;     // a quadrilateral was revealed
constexpr std::uint8_t kStepClose = 1;    // trivial close of a 2-gon
constexpr std::uint8_t kStepSwallow = 2;  // peel at the target: rest engulfed

// Everything a single peeling step reports.  covered_left / covered_right
// count the old boundary edges engulfed on each side of the peeled edge
// (left = clockwise of it, the side holding the target by convention);
// the peeled edge itself is counted by the identity
// covered_total = covered_left + covered_right + 1.
struct PeelEvent {
    std::uint64_t step = 0; // index within a run; the first event is step 0
    std::uint8_t kind = kStepFace;
    PeelIndicator indicator;
    int target_part = -1; // component that keeps the target, -1 if none
    int exposed = 0;      // new edges on the kept component, in {1,2,3}
    long long covered_left = 0;
    long long covered_right = 0;
    map_core::FaceColor face_color = map_core::FaceColor::Uncolored;
    int new_interior_vertices = 0; // fresh corners of the revealed face

    long long covered_total() const { return covered_left + covered_right + 1; }

    bool operator==(const PeelEvent& o) const;
    bool operator!=(const PeelEvent& o) const { return !(*this == o); }
};

// Which component contains the boundary slot s_star (counted ccw from the
// peeled edge, 1 <= s_star <= old perimeter - 1).  Requires all-finite arcs.
int target_part_at(const PeelIndicator& ind, long long s_star);

// Fills exposed / covered / fresh-vertex fields from an indicator and the
// index of the kept component.  kind must be kStepFace.
PeelEvent complete_event(const PeelIndicator& ind, int target_part);

// One line of the event log; parse round-trips byte-identically.
std::string event_to_json(const PeelEvent& ev);
PeelEvent event_from_json(const std::string& line);

} // namespace peelkit::peeling
