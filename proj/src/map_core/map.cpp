#include "peelkit/map_core/map.h"

#include <algorithm>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace peelkit::map_core {

int PlanarMap::add_edge(int v_from, int v_to) {
    int d = int(twin.size());
    twin.push_back(d + 1);
    twin.push_back(d);
    nxt.push_back(-1);
    nxt.push_back(-1);
    prv.push_back(-1);
    prv.push_back(-1);
    vert.push_back(v_from);
    vert.push_back(v_to);
    face.push_back(-1);
    face.push_back(-1);
    dart_alive.push_back(true);
    dart_alive.push_back(true);
    return d;
}

int PlanarMap::new_face(FaceKind kind, FaceColor color) {
    Face f;
    f.kind = kind;
    f.color = color;
    faces.push_back(f);
    return int(faces.size()) - 1;
}

void PlanarMap::kill_dart(int d) { dart_alive[d] = false; }

void PlanarMap::kill_face(int f) { faces[f].alive = false; }

int PlanarMap::alive_dart_count() const {
    return int(std::count(dart_alive.begin(), dart_alive.end(), true));
}

int PlanarMap::alive_face_count() const {
    return int(std::count_if(faces.begin(), faces.end(),
                             [](const Face& f) { return f.alive; }));
}

std::vector<int> PlanarMap::face_cycle(int d) const {
    std::vector<int> cyc;
    int cur = d;
    do {
        cyc.push_back(cur);
        cur = nxt[cur];
        if (cur < 0 || cyc.size() > twin.size())
            throw std::logic_error("face_cycle: broken nxt chain");
    } while (cur != d);
    return cyc;
}

void PlanarMap::assign_face(int d, int f) {
    int degree = 0;
    int cur = d;
    do {
        face[cur] = f;
        ++degree;
        cur = nxt[cur];
    } while (cur != d);
    faces[f].any_dart = d;
    faces[f].degree = degree;
}

std::vector<int> PlanarMap::face_vertices(int f) const {
    std::vector<int> vs;
    for (int d : face_cycle(faces[f].any_dart)) vs.push_back(vert[d]);
    return vs;
}

std::vector<std::vector<int>> PlanarMap::vertex_darts() const {
    std::vector<std::vector<int>> out(n_vertices);
    for (int d = 0; d < int(twin.size()); ++d)
        if (dart_alive[d]) out[vert[d]].push_back(d);
    return out;
}

std::vector<std::string> validate(const PlanarMap& m, const ValidateOptions& opt) {
    std::vector<std::string> bad;
    auto complain = [&](const std::string& s) { bad.push_back(s); };

    int n_darts = int(m.twin.size());
    for (int d = 0; d < n_darts; ++d) {
        if (!m.dart_alive[d]) continue;
        if (!m.dart_alive[m.twin[d]] || m.twin[m.twin[d]] != d)
            complain("twin involution broken at dart " + std::to_string(d));
        if (m.nxt[d] < 0 || !m.dart_alive[m.nxt[d]] || m.prv[m.nxt[d]] != d)
            complain("nxt/prv inverse broken at dart " + std::to_string(d));
        // target of d = origin of its face successor
        if (m.vert[m.nxt[d]] != m.vert[m.twin[d]])
            complain("vertex chain broken at dart " + std::to_string(d));
        if (m.face[d] < 0 || !m.faces[m.face[d]].alive)
            complain("dart " + std::to_string(d) + " in a dead face");
    }
    if (!bad.empty()) return bad; // structure too broken for the rest

    // face bookkeeping and degrees
    std::vector<int> seen_degree(m.faces.size(), 0);
    for (int d = 0; d < n_darts; ++d)
        if (m.dart_alive[d]) ++seen_degree[m.face[d]];
    for (int f = 0; f < int(m.faces.size()); ++f) {
        const Face& fc = m.faces[f];
        if (!fc.alive) {
            if (seen_degree[f] != 0) complain("dead face has darts");
            continue;
        }
        if (seen_degree[f] != fc.degree)
            complain("face " + std::to_string(f) + " degree mismatch");
        if (fc.kind == FaceKind::Interior && opt.interior_degree != 0 &&
            fc.degree != opt.interior_degree)
            complain("interior face " + std::to_string(f) + " has degree " +
                     std::to_string(fc.degree));
    }

    // Euler characteristic (connected planar map)
    int V = m.n_vertices, E = m.edge_count(), F = m.alive_face_count();
    if (V - E + F != 2)
        complain("Euler characteristic violated: V=" + std::to_string(V) +
                 " E=" + std::to_string(E) + " F=" + std::to_string(F));

    // connectivity over darts via twin/nxt
    int start = -1;
    for (int d = 0; d < n_darts && start < 0; ++d)
        if (m.dart_alive[d]) start = d;
    if (start >= 0) {
        std::vector<bool> vis(n_darts, false);
        std::queue<int> q;
        q.push(start);
        vis[start] = true;
        int reached = 0;
        while (!q.empty()) {
            int d = q.front();
            q.pop();
            ++reached;
            for (int e : {m.twin[d], m.nxt[d]})
                if (!vis[e]) {
                    vis[e] = true;
                    q.push(e);
                }
        }
        if (reached != m.alive_dart_count()) complain("map is disconnected");
    }

    if (opt.require_bipartite) {
        std::vector<int> color(m.n_vertices, -1);
        auto adj = m.vertex_darts();
        for (int v0 = 0; v0 < m.n_vertices; ++v0) {
            if (color[v0] != -1 || adj[v0].empty()) continue;
            color[v0] = 0;
            std::queue<int> q;
            q.push(v0);
            while (!q.empty()) {
                int v = q.front();
                q.pop();
                for (int d : adj[v]) {
                    int u = m.vert[m.twin[d]];
                    if (color[u] == -1) {
                        color[u] = color[v] ^ 1;
                        q.push(u);
                    } else if (color[u] == color[v]) {
                        complain("odd cycle through vertex " + std::to_string(u));
                        break;
                    }
                }
            }
        }
    }

    if (opt.require_simple_boundary) {
        for (int f = 0; f < int(m.faces.size()); ++f) {
            const Face& fc = m.faces[f];
            if (!fc.alive || fc.kind == FaceKind::Interior) continue;
            if (fc.degree == 2) continue; // a 2-gon walks both sides of a path
            auto vs = m.face_vertices(f);
            std::sort(vs.begin(), vs.end());
            if (std::adjacent_find(vs.begin(), vs.end()) != vs.end())
                complain("face " + std::to_string(f) + " boundary not simple");
        }
    }

    return bad;
}

PlanarMap make_boundary(int p, FaceKind inside) {
    if (p < 2) throw std::invalid_argument("make_boundary: perimeter must be >= 2");
    PlanarMap m;
    for (int i = 0; i < p; ++i) m.add_vertex();
    int inner = m.new_face(inside);
    int outer = m.new_face(FaceKind::Outer);
    for (int i = 0; i < p; ++i) m.add_edge(i, (i + 1) % p);
    for (int i = 0; i < p; ++i) {
        int a = 2 * i, b = 2 * i + 1;
        int a_next = 2 * ((i + 1) % p);
        m.nxt[a] = a_next;
        m.prv[a_next] = a;
        int b_prev = 2 * ((i + 1) % p) + 1;
        m.nxt[b_prev] = b;
        m.prv[b] = b_prev;
    }
    m.assign_face(0, inner);
    m.assign_face(1, outer);
    m.root_dart = 0;
    return m;
}

std::string canonical_code(const PlanarMap& m) {
    if (m.root_dart < 0 || !m.dart_alive[m.root_dart])
        throw std::logic_error("canonical_code: no live root dart");
    int n_darts = int(m.twin.size());
    std::vector<int> id(n_darts, -1);
    std::vector<int> order;
    order.reserve(m.alive_dart_count());
    std::queue<int> q;
    id[m.root_dart] = 0;
    order.push_back(m.root_dart);
    q.push(m.root_dart);
    while (!q.empty()) {
        int d = q.front();
        q.pop();
        for (int e : {m.nxt[d], m.twin[d]}) {
            if (id[e] == -1) {
                id[e] = int(order.size());
                order.push_back(e);
                q.push(e);
            }
        }
    }
    std::ostringstream code;
    for (int d : order)
        code << id[m.nxt[d]] << ',' << id[m.twin[d]] << ','
             << int(m.faces[m.face[d]].kind) << ';';
    return code.str();
}

} // namespace peelkit::map_core
