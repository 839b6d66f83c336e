#include "peelkit/map_core/geometry.h"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace peelkit::map_core {

namespace {

// Source vertices of a query set: listed vertices plus edge endpoints.
std::vector<int> seed_vertices(const PlanarMap& m, const Subgraph& s) {
    std::vector<int> out = s.vertices;
    for (int e : s.edges) {
        out.push_back(m.vert[e]);
        out.push_back(m.vert[m.twin[e]]);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

void Subgraph::normalize() {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

bool Subgraph::contains_vertex(int v) const {
    return std::binary_search(vertices.begin(), vertices.end(), v);
}

bool Subgraph::contains_edge(int e) const {
    return std::binary_search(edges.begin(), edges.end(), e);
}

std::vector<int> all_edge_ids(const PlanarMap& m) {
    std::vector<int> out;
    for (int d = 0; d < int(m.twin.size()); ++d)
        if (m.dart_alive[d] && d < m.twin[d]) out.push_back(d);
    return out;
}

Subgraph whole_map_subgraph(const PlanarMap& m) {
    Subgraph s;
    s.vertices.resize(m.n_vertices);
    for (int v = 0; v < m.n_vertices; ++v) s.vertices[v] = v;
    s.edges = all_edge_ids(m);
    return s;
}

bool subgraph_valid(const PlanarMap& m, const Subgraph& s) {
    for (int v : s.vertices)
        if (v < 0 || v >= m.n_vertices) return false;
    for (int e : s.edges) {
        if (e < 0 || e >= int(m.twin.size()) || !m.dart_alive[e]) return false;
        if (e != edge_id(m, e)) return false;
        if (!s.contains_vertex(m.vert[e]) || !s.contains_vertex(m.vert[m.twin[e]]))
            return false;
    }
    return true;
}

std::vector<int> boundary_path(const PlanarMap& m) {
    int outer = -1;
    for (int f = 0; f < int(m.faces.size()); ++f)
        if (m.faces[f].alive && m.faces[f].kind == FaceKind::Outer) {
            if (outer >= 0) throw std::logic_error("boundary_path: two outer faces");
            outer = f;
        }
    if (outer < 0) throw std::logic_error("boundary_path: no outer face");
    if (m.root_dart < 0 || !m.dart_alive[m.root_dart])
        throw std::logic_error("boundary_path: no live root dart");

    int start = m.root_dart;
    if (m.face[start] != outer) start = m.twin[start];
    if (m.face[start] != outer)
        throw std::logic_error("boundary_path: root edge is not on the boundary");

    // The outer cycle runs clockwise around the map, so prv steps trace the
    // boundary counterclockwise.
    std::vector<int> path;
    int cur = start;
    do {
        path.push_back(cur);
        cur = m.prv[cur];
    } while (cur != start);
    return path;
}

std::vector<int> distance_field(const PlanarMap& m, const Subgraph& src) {
    std::vector<int> dist(m.n_vertices, -1);
    std::queue<int> q;
    for (int v : seed_vertices(m, src)) {
        if (v < 0 || v >= m.n_vertices)
            throw std::invalid_argument("distance_field: vertex out of range");
        if (dist[v] == -1) {
            dist[v] = 0;
            q.push(v);
        }
    }
    auto adj = m.vertex_darts();
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int d : adj[v]) {
            int u = m.vert[m.twin[d]];
            if (dist[u] == -1) {
                dist[u] = dist[v] + 1;
                q.push(u);
            }
        }
    }
    return dist;
}

int graph_distance(const PlanarMap& m, const Subgraph& a, const Subgraph& b) {
    std::vector<int> bv = seed_vertices(m, b);
    if (bv.empty() || seed_vertices(m, a).empty())
        throw std::invalid_argument("graph_distance: empty query set");
    auto dist = distance_field(m, a);
    int best = -1;
    for (int v : bv)
        if (dist[v] >= 0 && (best < 0 || dist[v] < best)) best = dist[v];
    if (best < 0) throw std::logic_error("graph_distance: sets are disconnected");
    return best;
}

Subgraph metric_ball(const PlanarMap& m, const Subgraph& center, int r) {
    if (r < 0) throw std::invalid_argument("metric_ball: negative radius");
    auto dist = distance_field(m, center);
    Subgraph ball;
    for (int v = 0; v < m.n_vertices; ++v)
        if (dist[v] >= 0 && dist[v] <= r) ball.vertices.push_back(v);
    for (int e : all_edge_ids(m)) {
        int u = m.vert[e], w = m.vert[m.twin[e]];
        if (dist[u] >= 0 && dist[u] <= r && dist[w] >= 0 && dist[w] <= r)
            ball.edges.push_back(e);
    }
    return ball;
}

Subgraph filled_ball(const PlanarMap& m, const Subgraph& center, int r,
                     int target_dart) {
    if (r < 0) throw std::invalid_argument("filled_ball: negative radius");
    if (target_dart < 0 || target_dart >= int(m.twin.size()) ||
        !m.dart_alive[target_dart])
        throw std::invalid_argument("filled_ball: bad target dart");

    auto dist = distance_field(m, center);
    std::vector<bool> in_ball(m.n_vertices, false);
    for (int v = 0; v < m.n_vertices; ++v)
        if (dist[v] >= 0 && dist[v] <= r) in_ball[v] = true;

    // Component of the ball complement that still reaches the target edge.
    std::vector<bool> outside(m.n_vertices, false);
    auto adj = m.vertex_darts();
    std::queue<int> q;
    for (int t : {m.vert[target_dart], m.vert[m.twin[target_dart]]})
        if (!in_ball[t] && !outside[t]) {
            outside[t] = true;
            q.push(t);
        }
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int d : adj[v]) {
            int u = m.vert[m.twin[d]];
            if (!in_ball[u] && !outside[u]) {
                outside[u] = true;
                q.push(u);
            }
        }
    }

    Subgraph filled;
    for (int v = 0; v < m.n_vertices; ++v)
        if (!outside[v]) filled.vertices.push_back(v);
    for (int e : all_edge_ids(m))
        if (!outside[m.vert[e]] && !outside[m.vert[m.twin[e]]])
            filled.edges.push_back(e);
    return filled;
}

Subgraph subgraph_boundary(const PlanarMap& m, const Subgraph& s) {
    auto adj = m.vertex_darts();
    auto on_map_boundary = [&](int v) {
        for (int d : adj[v])
            if (m.faces[m.face[d]].kind != FaceKind::Interior) return true;
        return false;
    };
    auto meets_outside_edge = [&](int v) {
        for (int d : adj[v])
            if (!s.contains_edge(edge_id(m, d))) return true;
        return false;
    };

    Subgraph bd;
    for (int v : s.vertices)
        if (on_map_boundary(v) || meets_outside_edge(v)) bd.vertices.push_back(v);
    bd.normalize();
    for (int e : s.edges)
        if (bd.contains_vertex(m.vert[e]) && bd.contains_vertex(m.vert[m.twin[e]]))
            bd.edges.push_back(e);
    return bd;
}

}  // namespace peelkit::map_core
