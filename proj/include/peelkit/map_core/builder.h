#pragma once

#include "peelkit/map_core/map.h"

namespace peelkit::map_core {

// Result of carving one interior face out of a hole.  Regions are listed in
// ccw order from the peel edge; ids of regions that do not exist are -1.
struct AttachResult {
    int face_new = -1;       // the revealed interior face
    int region1 = -1;        // hole cut off by the first ccw arc (or the single region)
    int region2 = -1;
    int region3 = -1;
    int region1_dart = -1;   // a dart of each surviving hole, on the hole side
    int region2_dart = -1;
    int region3_dart = -1;
    int fresh_vertices = 0;
};

// All attach_* operations consume the hole containing `tip` (a hole-side
// dart, the peel edge) and carve a quadrilateral face whose corners are
// a = origin(tip), b = target(tip), then c, d continuing around the face.
//
// attach_quad_free:      c and d are fresh; the hole keeps its id, degree p+2.
// attach_quad_c_glued:   c lands on the boundary at ccw arc distance m from b
//                        (m odd); splits off a pocket of perimeter m+1 before
//                        the main hole of perimeter p+1-m.
// attach_quad_d_glued:   mirror image: d lands at cw arc distance m from a.
// attach_quad_cd_glued:  both land, at ccw distances m1 and m1+m2; three
//                        holes of perimeters m1+1, m2+1, p-1-m1-m2+1.
AttachResult attach_quad_free(PlanarMap& m, int tip, FaceColor color);
AttachResult attach_quad_c_glued(PlanarMap& m, int tip, int arc_m, FaceColor color);
AttachResult attach_quad_d_glued(PlanarMap& m, int tip, int arc_m, FaceColor color);
AttachResult attach_quad_cd_glued(PlanarMap& m, int tip, int arc_m1, int arc_m2,
                                  FaceColor color);

// Triangle analogues: corners a = origin(tip), b = target(tip), apex c.
// attach_tri_apex_free: fresh apex, hole perimeter p+1.
// attach_tri_apex_glued: apex at ccw arc distance m from b (0 and p-1 allowed
// only for maps with loops); pockets of perimeter m+1 and p-m.
AttachResult attach_tri_apex_free(PlanarMap& m, int tip, FaceColor color);
AttachResult attach_tri_apex_glued(PlanarMap& m, int tip, int arc_m, FaceColor color);

// Closes a 2-gon hole by identifying its two edges.  The hole face dies and
// the surviving twin pair is rewired; no vertices merge.
void close_trivial(PlanarMap& m, int hole_dart);

} // namespace peelkit::map_core
