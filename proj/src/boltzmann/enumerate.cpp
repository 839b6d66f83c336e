#include "peelkit/boltzmann/enumerate.h"

#include <algorithm>
#include <set>

#include "peelkit/map_core/builder.h"
#include "peelkit/map_core/map.h"

namespace peelkit::boltzmann {

using map_core::AttachResult;
using map_core::FaceColor;
using map_core::PlanarMap;

namespace {

struct Search {
    int n = 0;         // interior-vertex target
    int boundary = 0;  // perimeter 2l
    int quad_cap = 0;  // every completed map has exactly n + l - 1 quads
    long max_nodes = 0;
    long nodes = 0;
    long sequences = 0;
    std::set<std::string> seen;
    std::vector<EnumeratedMap> out;

    // holes: pending hole-side peel darts, processed LIFO; used: fresh
    // vertices so far; quads: faces attached so far.
    void go(const PlanarMap& m, std::vector<int> holes, int used, int quads) {
        if (++nodes > max_nodes)
            throw EnumerationOverflow("enumerate_maps: node budget exhausted");
        if (holes.empty()) {
            if (used != n) return;
            ++sequences;
            EnumeratedMap em;
            em.code = map_core::canonical_code(m);
            em.interior_vertices = m.n_vertices - boundary;
            em.quad_faces = quads;
            if (seen.insert(em.code).second) out.push_back(std::move(em));
            return;
        }
        int tip = holes.back();
        holes.pop_back();
        int p = m.faces[m.face[tip]].degree;

        if (p == 2) {
            PlanarMap next = m;
            map_core::close_trivial(next, tip);
            go(next, holes, used, quads);
        }
        if (quads + 1 > quad_cap) return;

        if (used + 2 <= n) {
            PlanarMap next = m;
            AttachResult r = map_core::attach_quad_free(next, tip, FaceColor::Uncolored);
            auto h = holes;
            h.push_back(r.region1_dart);
            go(next, std::move(h), used + 2, quads + 1);
        }
        if (used + 1 <= n) {
            for (int arc = 1; arc <= p - 1; arc += 2) {
                {
                    PlanarMap next = m;
                    AttachResult r =
                        map_core::attach_quad_c_glued(next, tip, arc, FaceColor::Uncolored);
                    auto h = holes;
                    h.push_back(r.region2_dart);
                    h.push_back(r.region1_dart);
                    go(next, std::move(h), used + 1, quads + 1);
                }
                {
                    PlanarMap next = m;
                    AttachResult r =
                        map_core::attach_quad_d_glued(next, tip, arc, FaceColor::Uncolored);
                    auto h = holes;
                    h.push_back(r.region2_dart);
                    h.push_back(r.region1_dart);
                    go(next, std::move(h), used + 1, quads + 1);
                }
            }
        }
        for (int a1 = 1; a1 <= p - 3; a1 += 2) {
            for (int a2 = 1; p - 1 - a1 - a2 >= 1; a2 += 2) {
                PlanarMap next = m;
                AttachResult r =
                    map_core::attach_quad_cd_glued(next, tip, a1, a2, FaceColor::Uncolored);
                auto h = holes;
                h.push_back(r.region3_dart);
                h.push_back(r.region2_dart);
                h.push_back(r.region1_dart);
                go(next, std::move(h), used, quads + 1);
            }
        }
    }
};

}  // namespace

EnumerationResult enumerate_maps(int n, int l, long max_nodes) {
    if (n < 0 || l < 1) throw std::invalid_argument("enumerate_maps: need n >= 0, l >= 1");
    Search s;
    s.n = n;
    s.boundary = 2 * l;
    s.quad_cap = n + l - 1;
    s.max_nodes = max_nodes;
    PlanarMap root = map_core::make_boundary(2 * l);
    s.go(root, {root.root_dart}, 0, 0);
    std::sort(s.out.begin(), s.out.end(),
              [](const EnumeratedMap& a, const EnumeratedMap& b) { return a.code < b.code; });
    EnumerationResult res;
    res.maps = std::move(s.out);
    res.sequences = s.sequences;
    res.nodes = s.nodes;
    return res;
}

}  // namespace peelkit::boltzmann
