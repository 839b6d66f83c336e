#include "peelkit/peeling/layers.h"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>

namespace peelkit::peeling {

namespace {

constexpr int kUnreached = std::numeric_limits<int>::max();

// BFS distance from the seed endpoints through everything revealed so far
// (the original boundary counts as revealed).  Labels only shrink as more of
// the map is uncovered, and adjacent labels differ by at most 1.
std::vector<int> explored_distances(const map_core::PlanarMap& m,
                                    const std::vector<int>& seed_vertices) {
    std::vector<int> dist(m.n_vertices, kUnreached);
    auto adj = m.vertex_darts();
    std::deque<int> queue;
    for (int v : seed_vertices)
        if (dist[v] != 0) {
            dist[v] = 0;
            queue.push_back(v);
        }
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int d : adj[v]) {
            int w = m.vert[m.twin[d]];
            if (dist[w] > dist[v] + 1) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

std::vector<int> sorted_unique(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

} // namespace

LayerResult peel_by_layers(PeelingState& st, const std::vector<int>& seed_darts,
                           int radius, Rng& rng, int target_dart) {
    if (radius < 0) throw std::invalid_argument("peel_by_layers: negative radius");
    if (st.mode != PeelMode::Explicit || st.terminal || !st.map)
        throw std::invalid_argument("peel_by_layers: needs a live explicit state");
    map_core::PlanarMap& m = *st.map;
    if (target_dart >= 0) {
        st.target_dart = target_dart;
        m.target_dart = target_dart;
        st.target_slot = explicit_marker_slot(st);
    }
    if (seed_darts.empty())
        throw std::invalid_argument("peel_by_layers: empty seed arc");

    std::vector<int> cycle = m.face_cycle(st.cursor_dart);
    long long P = (long long)cycle.size();
    std::vector<long long> pos_of(m.twin.size(), -1);
    for (long long i = 0; i < P; ++i) pos_of[cycle[i]] = i;
    std::vector<long long> pos;
    for (int d : seed_darts) {
        if (d < 0 || d >= (int)pos_of.size() || pos_of[d] < 0)
            throw std::invalid_argument("peel_by_layers: seed dart not on the hole cycle");
        if (d == st.target_dart)
            throw std::invalid_argument("peel_by_layers: seed arc contains the marker");
        pos.push_back(pos_of[d]);
    }
    std::sort(pos.begin(), pos.end());
    if (std::adjacent_find(pos.begin(), pos.end()) != pos.end())
        throw std::invalid_argument("peel_by_layers: repeated seed dart");
    long long breaks = 0;
    for (std::size_t i = 0; i < pos.size(); ++i)
        if ((pos[i] + 1) % P != pos[(i + 1) % pos.size()]) ++breaks;
    if (breaks != 1)
        throw std::invalid_argument("peel_by_layers: seed is not a contiguous arc");

    std::vector<int> seed_vertices;
    for (int d : seed_darts) {
        seed_vertices.push_back(m.vert[d]);
        seed_vertices.push_back(m.vert[m.twin[d]]);
    }
    seed_vertices = sorted_unique(seed_vertices);

    LayerResult out;
    if (radius == 0) {
        out.outer_arc_darts = seed_darts;
        for (int d : seed_darts)
            out.cluster_edge_darts.push_back(std::min(d, m.twin[d]));
        out.cluster_vertices = seed_vertices;
        return out;
    }

    std::uint64_t steps0 = st.steps;
    while (!st.terminal) {
        std::vector<int> dist = explored_distances(m, seed_vertices);
        int best = -1, best_priority = kUnreached;
        for (int d : m.face_cycle(st.cursor_dart)) {
            if (d == st.target_dart) continue;
            int p = std::min(dist[m.vert[d]], dist[m.vert[m.twin[d]]]);
            if (p < best_priority) {
                best_priority = p;
                best = d;
            }
        }
        if (best < 0 || best_priority > radius) break;
        st.cursor_dart = best;
        st.target_slot = explicit_marker_slot(st);
        peel_step(st, rng);
    }
    out.steps_used = st.steps - steps0;
    out.swallowed_marker = st.terminal;

    std::vector<int> seed_reps;
    for (int s : seed_darts)
        if (m.dart_alive[s]) seed_reps.push_back(std::min(s, m.twin[s]));
    seed_reps = sorted_unique(seed_reps);

    std::vector<int> verts;
    for (int d = 0; d < (int)m.twin.size(); ++d) {
        if (!m.dart_alive[d] || m.twin[d] < d) continue;
        bool interior_side =
            m.faces[m.face[d]].kind == map_core::FaceKind::Interior ||
            m.faces[m.face[m.twin[d]]].kind == map_core::FaceKind::Interior;
        if (!interior_side && !std::binary_search(seed_reps.begin(), seed_reps.end(), d))
            continue;
        out.cluster_edge_darts.push_back(d);
        verts.push_back(m.vert[d]);
        verts.push_back(m.vert[m.twin[d]]);
    }
    out.cluster_vertices = sorted_unique(verts);
    if (!st.terminal)
        for (int d : m.face_cycle(st.cursor_dart))
            if (m.faces[m.face[m.twin[d]]].kind == map_core::FaceKind::Interior)
                out.outer_arc_darts.push_back(d);
    return out;
}

} // namespace peelkit::peeling
