#include "peelkit/percolation/paths.h"

#include <set>
#include <stdexcept>
#include <utility>

namespace peelkit::percolation {

namespace {

using map_core::FaceColor;
using map_core::FaceKind;
using map_core::PlanarMap;

// Some recorded darts die when a final 2-gon is glued shut; the surviving
// twin names the same edge.
int resolve_dart(const PlanarMap& m, int d) {
    if (d < 0 || d >= int(m.twin.size()))
        throw std::invalid_argument("lattice path: dart id out of range");
    if (m.dart_alive[d]) return d;
    int t = m.twin[d];
    if (!m.dart_alive[t])
        throw std::logic_error("lattice path: recorded edge vanished");
    return t;
}

bool shares_vertex(const PlanarMap& m, int a, int b) {
    int a0 = m.vert[a], a1 = m.vert[m.twin[a]];
    int b0 = m.vert[b], b1 = m.vert[m.twin[b]];
    return a0 == b0 || a0 == b1 || a1 == b0 || a1 == b1;
}

// First edge incident to both `a` and `b`, rotating around a's head and
// then a's tail starting from `a` itself; edges already sharing an endpoint
// bridge through `a`.
int leftmost_bridge(const PlanarMap& m, int a, int b) {
    if (shares_vertex(m, a, b)) return a;
    for (int start : {m.twin[a], a}) {
        int d = start;
        do {
            d = m.nxt[m.twin[d]]; // next dart out of the same vertex
            if (d == start) break;
            int far = m.vert[m.twin[d]];
            if (far == m.vert[b] || far == m.vert[m.twin[b]]) return d;
        } while (true);
    }
    throw std::logic_error("lattice path: no bridging edge between steps");
}

} // namespace

LatticePath exploration_path(const ExplorationRecord& rec) {
    if (rec.mode != peeling::PeelMode::Explicit)
        throw std::logic_error("exploration_path: needs an explicit-mode record");
    if (!rec.terminated || !rec.map)
        throw std::logic_error("exploration_path: needs a terminated run");
    const PlanarMap& m = *rec.map;

    std::vector<int> full;
    full.reserve(rec.peeled_darts.size() + 1);
    for (int d : rec.peeled_darts) full.push_back(resolve_dart(m, d));
    full.push_back(resolve_dart(m, rec.target_dart));

    std::vector<int> chain;
    chain.reserve(2 * full.size());
    for (std::size_t i = 0; i < full.size(); ++i) {
        if (i > 0) chain.push_back(leftmost_bridge(m, full[i - 1], full[i]));
        chain.push_back(full[i]);
    }

    LatticePath path;
    path.half_steps = true;
    path.convention = "leftmost";
    path.edges.reserve(chain.size());
    path.vertices.reserve(chain.size() + 1);
    for (std::size_t k = 0; k < chain.size(); ++k) {
        int d = chain[k];
        if (k > 0) {
            int prev = path.edges.back();
            int want_cont = m.vert[m.twin[prev]];
            int want_back = m.vert[prev];
            if (m.vert[d] != want_cont && m.vert[m.twin[d]] == want_cont)
                d = m.twin[d];
            else if (m.vert[d] != want_cont && m.vert[d] != want_back &&
                     m.vert[m.twin[d]] == want_back)
                d = m.twin[d];
            if (m.vert[d] != want_cont && m.vert[d] != want_back)
                throw std::logic_error(
                    "exploration_path: consecutive edges do not touch");
        }
        path.edges.push_back(d);
        path.vertices.push_back(m.vert[d]);
    }
    path.vertices.push_back(m.vert[m.twin[path.edges.back()]]);
    return path;
}

namespace {

// Colour of the material on dart d's side of its edge: the face colour for
// interior faces, the external-quadrangle colour for the outer face.
struct SideColours {
    const PlanarMap& m;
    long long l_right;
    long long p;

    bool outer(int d) const {
        return m.faces[m.face[d]].kind == FaceKind::Outer;
    }
    bool virtual_white(long long slot) const {
        return slot == 0 || slot >= l_right;
    }
    bool white(int d) const {
        const auto& f = m.faces[m.face[d]];
        if (f.kind == FaceKind::Outer) {
            if (d % 2 == 0 || d >= 2 * p)
                throw std::logic_error("interface: outer face reached through "
                                       "a non-boundary dart");
            return virtual_white(d / 2);
        }
        if (f.kind != FaceKind::Interior || f.color == FaceColor::Uncolored)
            throw std::invalid_argument(
                "interface: map must be complete and fully coloured");
        return f.color == FaceColor::White;
    }
};

} // namespace

LatticePath interface_path(const PlanarMap& m, const BoundaryConditions& bc) {
    bc.validate();
    if (bc.half_plane())
        throw std::invalid_argument("interface_path: finite boundary only");
    const long long p = bc.perimeter();
    if (int(m.twin.size()) < 2 * p)
        throw std::invalid_argument("interface_path: map lacks the boundary");
    for (const auto& f : m.faces)
        if (f.alive && f.kind == FaceKind::Hole)
            throw std::invalid_argument("interface_path: map has open holes");
    SideColours side{m, bc.l_right, p};

    // The walk keeps the white cluster of the root edge's external on its
    // left.  It starts in that external at the root edge's head and ends on
    // reaching the marked external at the marked edge's tail; in between it
    // pivots vertex by vertex, crossing white-white contacts and emitting
    // each edge whose far side is black.  Inside the outer face the virtual
    // colours vary by slot, so the walk tracks which external it occupies
    // and slides along the identified side edges one slot at a time.
    // Seed: conceptually the walk arrives at the root edge's head along the
    // virtual side edge of the root external; the first candidate in the
    // sweep is the root edge itself, approached from outside.
    std::vector<int> out;
    bool in_ext = false;
    long long slot = 0;
    int e = 1; // outer-side dart of the root edge
    std::size_t cap = 4 * m.twin.size() + 16;
    for (std::size_t iter = 0;; ++iter) {
        if (iter > cap)
            throw std::logic_error("interface_path: walk failed to close");
        if (in_ext) {
            if (slot == bc.l_right) break; // the marked external: path ends
            long long prev = (slot + p - 1) % p;
            if (!side.virtual_white(prev))
                throw std::logic_error(
                    "interface_path: walk strayed into the black arc");
            int cand = int(2 * prev + 1);
            int across = m.twin[cand];
            if (side.white(across)) {
                e = m.nxt[across]; // cross back into the map
                in_ext = false;
            } else {
                out.push_back(cand); // run along the outside of the edge
                slot = prev;
            }
            continue;
        }
        int across = m.twin[e];
        bool cross_white;
        if (side.outer(across)) {
            long long s = across / 2;
            if (side.virtual_white(s)) {
                in_ext = true; // conceptually inside the external at slot s
                slot = s;
                continue;
            }
            cross_white = false; // interior white against a black external
        } else {
            cross_white = side.white(across);
        }
        if (cross_white) {
            e = m.nxt[across]; // pivot across a white-white contact
            continue;
        }
        out.push_back(e);
        if (side.outer(e)) {
            // The walk ran along the outside of a boundary edge; it now sits
            // inside that edge's external quadrangle at the edge's far end.
            in_ext = true;
            slot = e / 2;
        } else {
            e = m.nxt[e];
        }
    }

    std::set<std::pair<int, int>> seen;
    for (int d : out) {
        auto key = std::minmax(d, m.twin[d]);
        if (!seen.insert(key).second)
            throw std::logic_error("interface_path: edge visited twice");
    }

    LatticePath path;
    path.half_steps = false;
    path.convention = "interface";
    path.edges.push_back(-1);
    path.vertices.push_back(-1);
    for (std::size_t k = 0; k < out.size(); ++k) {
        if (k > 0 && m.vert[out[k]] != m.vert[m.twin[out[k - 1]]])
            throw std::logic_error("interface_path: walk lost continuity");
        path.edges.push_back(out[k]);
        path.vertices.push_back(m.vert[out[k]]);
    }
    if (!out.empty()) {
        if (m.vert[out.front()] != 1)
            throw std::logic_error(
                "interface_path: walk does not start at the root edge's head");
        if (m.vert[m.twin[out.back()]] != bc.l_right)
            throw std::logic_error(
                "interface_path: walk does not end at the marked edge's tail");
    }
    path.edges.push_back(-1);
    path.vertices.push_back(int(bc.l_right));
    path.vertices.push_back(-1);
    return path;
}

LatticePath interface_path(const ExplorationRecord& rec) {
    if (rec.mode != peeling::PeelMode::Explicit)
        throw std::logic_error("interface_path: needs an explicit-mode record");
    if (!rec.terminated || !rec.map)
        throw std::logic_error("interface_path: needs a terminated run");
    return interface_path(*rec.map, rec.bc);
}

} // namespace peelkit::percolation
