#pragma once

#include <vector>

#include "peelkit/map_core/map.h"

namespace peelkit::map_core {

// A subgraph of a parent map: explicit vertex and edge sets.  Edges are
// named by their canonical dart, the smaller of the two twin ids (stable
// even after 2-gon closures rewire the twin pairing).
struct Subgraph {
    std::vector<int> vertices;
    std::vector<int> edges;

    // Sorts and dedups both sets; all queries below assume this ran.
    void normalize();
    bool contains_vertex(int v) const;
    bool contains_edge(int e) const;
};

inline int edge_id(const PlanarMap& m, int dart) {
    return dart < m.twin[dart] ? dart : m.twin[dart];
}

// Canonical darts of all live edges, ascending.
std::vector<int> all_edge_ids(const PlanarMap& m);

Subgraph whole_map_subgraph(const PlanarMap& m);

// Every listed edge live with both endpoints listed, vertex ids in range.
bool subgraph_valid(const PlanarMap& m, const Subgraph& s);

// Boundary edge sequence: outer-face darts in ccw order starting from the
// root edge.  Length equals the perimeter; the trivial one-edge map yields
// its edge twice.
std::vector<int> boundary_path(const PlanarMap& m);

// BFS distances from a source set to every vertex (-1 = unreachable).  An
// edge in the source contributes both endpoints at distance 0.
std::vector<int> distance_field(const PlanarMap& m, const Subgraph& src);

// min over a-vertices/b-vertices of the vertex distance; edges enter
// through their endpoints.  Throws on an empty side.
int graph_distance(const PlanarMap& m, const Subgraph& a, const Subgraph& b);

// Vertices within distance r of the center plus every edge whose two
// endpoints both lie within distance r.
Subgraph metric_ball(const PlanarMap& m, const Subgraph& center, int r);

// metric_ball together with everything it cuts off from the target edge:
// only the complement component reaching an endpoint of target_dart
// survives; all other vertices, and all edges touching none of the
// surviving vertices, are absorbed.  Whole map when the ball swallows the
// target.  r must be >= 0.
Subgraph filled_ball(const PlanarMap& m, const Subgraph& center, int r,
                     int target_dart);

// Vertices of s lying on a non-interior face or meeting an edge outside s,
// plus the edges of s joining two such vertices.
Subgraph subgraph_boundary(const PlanarMap& m, const Subgraph& s);

}  // namespace peelkit::map_core
