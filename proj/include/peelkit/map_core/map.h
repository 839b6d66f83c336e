#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace peelkit::map_core {

enum class FaceKind : uint8_t { Interior, Hole, Outer };
enum class FaceColor : uint8_t { Uncolored, White, Black };

struct Face {
    FaceKind kind = FaceKind::Hole;
    FaceColor color = FaceColor::Uncolored;
    int any_dart = -1;
    int degree = 0;
    bool alive = true;
};

// Planar map stored as darts (half-edges).  nxt walks a face cycle with that
// face on the left; for the hole/outer cycles built by make_boundary the
// region lies to the left of the darts listed in ccw boundary order.  Twins
// are explicit because closing a 2-gon identifies two formerly distinct
// edges, which rewires the pairing.
class PlanarMap {
public:
    std::vector<int> twin, nxt, prv, vert, face;
    std::vector<bool> dart_alive;
    std::vector<Face> faces;
    int n_vertices = 0;
    int root_dart = -1;
    int target_dart = -1;  // optional distinguished boundary edge

    int add_vertex() { return n_vertices++; }

    // Allocates a twin pair (d, d+1) with d running v_from -> v_to; the pair
    // is not linked into any face cycle yet.
    int add_edge(int v_from, int v_to);

    int new_face(FaceKind kind, FaceColor color = FaceColor::Uncolored);

    void kill_dart(int d);
    void kill_face(int f);

    int alive_dart_count() const;
    int alive_face_count() const;
    int edge_count() const { return alive_dart_count() / 2; }

    // Walks the face cycle starting at d.
    std::vector<int> face_cycle(int d) const;
    // Recomputes face ids, degrees and any_dart for the cycle through d.
    void assign_face(int d, int f);

    std::vector<int> face_vertices(int f) const;

    // Vertex adjacency (neighbors may repeat when there are multi-edges).
    std::vector<std::vector<int>> vertex_darts() const;
};

// Structural checks; returns a human-readable list of violations (empty =
// valid).  `expect` lets callers require quad-only or triangle-only interior
// faces; 0 skips the degree check.
struct ValidateOptions {
    int interior_degree = 4;   // 4 for quadrangulations, 3 for triangulations, 0 = skip
    bool require_bipartite = true;
    bool require_simple_boundary = true;
};
std::vector<std::string> validate(const PlanarMap& m, const ValidateOptions& opt = {});

// Boundary cycle of perimeter p: one Hole face (the unexplored interior, to
// be peeled or filled) and one Outer face.  Returns the map; the root dart
// (edge 0, hole side) is map.root_dart and vertices 0..p-1 appear in ccw
// order along the hole cycle.
PlanarMap make_boundary(int p, FaceKind inside = FaceKind::Hole);

// BFS canonical encoding of a rooted map; equal codes <=> same rooted map.
// Face kinds are folded in so that hole/outer markings distinguish maps.
std::string canonical_code(const PlanarMap& m);

} // namespace peelkit::map_core
