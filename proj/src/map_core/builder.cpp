#include "peelkit/map_core/builder.h"

#include <stdexcept>

namespace peelkit::map_core {

namespace {

void link(PlanarMap& m, int a, int b) {
    m.nxt[a] = b;
    m.prv[b] = a;
}

int dart_at(const PlanarMap& m, int tip, int pos) {
    int d = tip;
    for (int i = 0; i < pos; ++i) d = m.nxt[d];
    return d;
}

void check_hole(const PlanarMap& m, int tip) {
    int h = m.face[tip];
    if (h < 0 || !m.faces[h].alive || m.faces[h].kind == FaceKind::Interior)
        throw std::logic_error("attach: tip is not on a hole or outer face");
}

} // namespace

AttachResult attach_quad_free(PlanarMap& m, int tip, FaceColor color) {
    check_hole(m, tip);
    int h = m.face[tip];
    int a = m.vert[tip], b = m.vert[m.twin[tip]];
    int first = m.nxt[tip], old_prev = m.prv[tip];
    int p = m.faces[h].degree;
    if (p < 2) throw std::logic_error("attach_quad_free: degenerate hole");

    int c = m.add_vertex(), d = m.add_vertex();
    int p1 = m.add_edge(b, c), q1 = p1 + 1;
    int p2 = m.add_edge(c, d), q2 = p2 + 1;
    int p3 = m.add_edge(d, a), q3 = p3 + 1;

    int F = m.new_face(FaceKind::Interior, color);
    link(m, tip, p1);
    link(m, p1, p2);
    link(m, p2, p3);
    link(m, p3, tip);
    m.assign_face(tip, F);

    link(m, old_prev, q3);
    link(m, q3, q2);
    link(m, q2, q1);
    link(m, q1, first);
    m.face[q1] = m.face[q2] = m.face[q3] = h;
    m.faces[h].degree = p + 2;
    m.faces[h].any_dart = q1;

    AttachResult r;
    r.face_new = F;
    r.region1 = h;
    r.region1_dart = q1;
    r.fresh_vertices = 2;
    return r;
}

AttachResult attach_quad_c_glued(PlanarMap& m, int tip, int arc_m, FaceColor color) {
    check_hole(m, tip);
    int h = m.face[tip];
    int p = m.faces[h].degree;
    if (arc_m < 1 || arc_m > p - 1 || arc_m % 2 == 0)
        throw std::invalid_argument("attach_quad_c_glued: arc must be odd in [1, p-1]");
    int a = m.vert[tip], b = m.vert[m.twin[tip]];
    int first = m.nxt[tip], old_prev = m.prv[tip];
    int dart_c = dart_at(m, tip, arc_m);
    int after_pocket = m.nxt[dart_c];
    int c = m.vert[m.twin[dart_c]];

    int d = m.add_vertex();
    int p1 = m.add_edge(b, c), q1 = p1 + 1;
    int p2 = m.add_edge(c, d), q2 = p2 + 1;
    int p3 = m.add_edge(d, a), q3 = p3 + 1;

    int F = m.new_face(FaceKind::Interior, color);
    link(m, tip, p1);
    link(m, p1, p2);
    link(m, p2, p3);
    link(m, p3, tip);
    m.assign_face(tip, F);

    int P = m.new_face(FaceKind::Hole);
    link(m, dart_c, q1);
    link(m, q1, first);
    m.assign_face(q1, P);

    if (after_pocket == tip) { // arc_m == p-1: the main region is a 2-gon
        link(m, q3, q2);
        link(m, q2, q3);
    } else {
        link(m, old_prev, q3);
        link(m, q3, q2);
        link(m, q2, after_pocket);
    }
    m.face[q2] = m.face[q3] = h;
    m.faces[h].degree = p + 1 - arc_m;
    m.faces[h].any_dart = q3;

    AttachResult r;
    r.face_new = F;
    r.region1 = P;
    r.region1_dart = q1;
    r.region2 = h;
    r.region2_dart = q3;
    r.fresh_vertices = 1;
    return r;
}

AttachResult attach_quad_d_glued(PlanarMap& m, int tip, int arc_m, FaceColor color) {
    check_hole(m, tip);
    int h = m.face[tip];
    int p = m.faces[h].degree;
    if (arc_m < 1 || arc_m > p - 1 || arc_m % 2 == 0)
        throw std::invalid_argument("attach_quad_d_glued: arc must be odd in [1, p-1]");
    int a = m.vert[tip], b = m.vert[m.twin[tip]];
    int first = m.nxt[tip], old_prev = m.prv[tip];
    int pocket_start = dart_at(m, tip, p - arc_m);
    int before_pocket = m.prv[pocket_start];
    int d = m.vert[pocket_start];

    int c = m.add_vertex();
    int p1 = m.add_edge(b, c), q1 = p1 + 1;
    int p2 = m.add_edge(c, d), q2 = p2 + 1;
    int p3 = m.add_edge(d, a), q3 = p3 + 1;

    int F = m.new_face(FaceKind::Interior, color);
    link(m, tip, p1);
    link(m, p1, p2);
    link(m, p2, p3);
    link(m, p3, tip);
    m.assign_face(tip, F);

    int P = m.new_face(FaceKind::Hole);
    link(m, old_prev, q3);
    link(m, q3, pocket_start);
    m.assign_face(q3, P);

    if (before_pocket == tip) { // arc_m == p-1: main region is a 2-gon on (c, d=b)
        link(m, q2, q1);
        link(m, q1, q2);
    } else {
        link(m, before_pocket, q2);
        link(m, q2, q1);
        link(m, q1, first);
    }
    m.face[q1] = m.face[q2] = h;
    m.faces[h].degree = p + 1 - arc_m;
    m.faces[h].any_dart = q1;

    AttachResult r;
    r.face_new = F;
    r.region1 = h; // ccw-first region is the main one for a cw pocket
    r.region1_dart = q1;
    r.region2 = P;
    r.region2_dart = q3;
    r.fresh_vertices = 1;
    return r;
}

AttachResult attach_quad_cd_glued(PlanarMap& m, int tip, int arc_m1, int arc_m2,
                                  FaceColor color) {
    check_hole(m, tip);
    int h = m.face[tip];
    int p = m.faces[h].degree;
    int arc_m3 = p - 1 - arc_m1 - arc_m2;
    if (arc_m1 < 1 || arc_m2 < 1 || arc_m3 < 1 || arc_m1 % 2 == 0 ||
        arc_m2 % 2 == 0 || arc_m3 % 2 == 0)
        throw std::invalid_argument("attach_quad_cd_glued: arcs must be odd and >= 1");
    int a = m.vert[tip], b = m.vert[m.twin[tip]];
    int first = m.nxt[tip], old_prev = m.prv[tip];
    int dart_c = dart_at(m, tip, arc_m1);
    int after1 = m.nxt[dart_c];
    int dart_d = dart_at(m, dart_c, arc_m2);
    int after2 = m.nxt[dart_d];
    int c = m.vert[m.twin[dart_c]], d = m.vert[m.twin[dart_d]];

    int p1 = m.add_edge(b, c), q1 = p1 + 1;
    int p2 = m.add_edge(c, d), q2 = p2 + 1;
    int p3 = m.add_edge(d, a), q3 = p3 + 1;

    int F = m.new_face(FaceKind::Interior, color);
    link(m, tip, p1);
    link(m, p1, p2);
    link(m, p2, p3);
    link(m, p3, tip);
    m.assign_face(tip, F);

    int P1 = m.new_face(FaceKind::Hole);
    link(m, dart_c, q1);
    link(m, q1, first);
    m.assign_face(q1, P1);

    int P2 = m.new_face(FaceKind::Hole);
    link(m, dart_d, q2);
    link(m, q2, after1);
    m.assign_face(q2, P2);

    link(m, old_prev, q3);
    link(m, q3, after2);
    m.face[q3] = h;
    m.faces[h].degree = arc_m3 + 1;
    m.faces[h].any_dart = q3;

    AttachResult r;
    r.face_new = F;
    r.region1 = P1;
    r.region1_dart = q1;
    r.region2 = P2;
    r.region2_dart = q2;
    r.region3 = h;
    r.region3_dart = q3;
    r.fresh_vertices = 0;
    return r;
}

AttachResult attach_tri_apex_free(PlanarMap& m, int tip, FaceColor color) {
    check_hole(m, tip);
    int h = m.face[tip];
    int p = m.faces[h].degree;
    int a = m.vert[tip], b = m.vert[m.twin[tip]];
    int first = m.nxt[tip], old_prev = m.prv[tip];

    int c = m.add_vertex();
    int p1 = m.add_edge(b, c), q1 = p1 + 1;
    int p2 = m.add_edge(c, a), q2 = p2 + 1;

    int F = m.new_face(FaceKind::Interior, color);
    link(m, tip, p1);
    link(m, p1, p2);
    link(m, p2, tip);
    m.assign_face(tip, F);

    link(m, old_prev, q2);
    link(m, q2, q1);
    link(m, q1, first);
    m.face[q1] = m.face[q2] = h;
    m.faces[h].degree = p + 1;
    m.faces[h].any_dart = q1;

    AttachResult r;
    r.face_new = F;
    r.region1 = h;
    r.region1_dart = q1;
    r.fresh_vertices = 1;
    return r;
}

AttachResult attach_tri_apex_glued(PlanarMap& m, int tip, int arc_m, FaceColor color) {
    check_hole(m, tip);
    int h = m.face[tip];
    int p = m.faces[h].degree;
    if (arc_m < 0 || arc_m > p - 1)
        throw std::invalid_argument("attach_tri_apex_glued: arc must lie in [0, p-1]");
    int a = m.vert[tip], b = m.vert[m.twin[tip]];
    int first = m.nxt[tip], old_prev = m.prv[tip];
    int dart_c = dart_at(m, tip, arc_m); // arc_m == 0 gives the tip: apex = b, loop chord
    int after = m.nxt[dart_c];
    int c = m.vert[m.twin[dart_c]];

    int p1 = m.add_edge(b, c), q1 = p1 + 1;
    int p2 = m.add_edge(c, a), q2 = p2 + 1;

    int F = m.new_face(FaceKind::Interior, color);
    link(m, tip, p1);
    link(m, p1, p2);
    link(m, p2, tip);
    m.assign_face(tip, F);

    int P1 = m.new_face(FaceKind::Hole);
    if (arc_m == 0) {
        link(m, q1, q1); // 1-gon inside the loop at b
    } else {
        link(m, dart_c, q1);
        link(m, q1, first);
    }
    m.assign_face(q1, P1);

    if (arc_m == p - 1) { // second region is a 1-gon at a (covers p == 1 too)
        link(m, q2, q2);
    } else {
        link(m, old_prev, q2);
        link(m, q2, arc_m == 0 ? first : after);
    }
    m.face[q2] = h;
    m.faces[h].degree = p - arc_m;
    m.faces[h].any_dart = q2;

    AttachResult r;
    r.face_new = F;
    r.region1 = P1;
    r.region1_dart = q1;
    r.region2 = h;
    r.region2_dart = q2;
    r.fresh_vertices = 0;
    return r;
}

void close_trivial(PlanarMap& m, int hole_dart) {
    int h = m.face[hole_dart];
    if (m.faces[h].degree != 2)
        throw std::logic_error("close_trivial: hole is not a 2-gon");
    int u = hole_dart, w = m.nxt[u];
    if (m.twin[u] == w)
        throw std::logic_error("close_trivial: 2-gon bounded by a single edge");
    int U = m.twin[u], W = m.twin[w];
    m.twin[U] = W;
    m.twin[W] = U;
    if (m.root_dart == u) m.root_dart = U;
    if (m.root_dart == w) m.root_dart = W;
    if (m.target_dart == u) m.target_dart = U;
    if (m.target_dart == w) m.target_dart = W;
    m.kill_dart(u);
    m.kill_dart(w);
    m.kill_face(h);
}

} // namespace peelkit::map_core
