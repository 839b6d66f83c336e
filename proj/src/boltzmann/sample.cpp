#include "peelkit/boltzmann/sample.h"

#include "peelkit/map_core/builder.h"
#include "peelkit/peeling/finite_law.h"

#include <stdexcept>
#include <vector>

namespace peelkit::boltzmann {

void fill_hole(map_core::PlanarMap& m, int hole_dart, Rng& rng,
               const FillOptions& opt) {
    using namespace map_core;
    std::vector<int> pending{hole_dart};
    while (!pending.empty()) {
        int d = pending.back();
        pending.pop_back();
        int p = m.faces[m.face[d]].degree;
        peeling::PeelIndicator ind =
            peeling::finite_law(unsigned(p)).sample_indicator(rng);
        if (ind.trivial_close()) {
            close_trivial(m, d);
            continue;
        }
        FaceColor color = FaceColor::Uncolored;
        if (opt.color_faces)
            color = rng.bernoulli(opt.p_white) ? FaceColor::White : FaceColor::Black;
        AttachResult res;
        switch (ind.n_parts) {
        case 1:
            res = attach_quad_free(m, d, color);
            break;
        case 2:
            res = (ind.arc[0] % 2 != 0)
                      ? attach_quad_c_glued(m, d, int(ind.arc[0]), color)
                      : attach_quad_d_glued(m, d, int(ind.arc[1]), color);
            break;
        default:
            res = attach_quad_cd_glued(m, d, int(ind.arc[0]), int(ind.arc[1]), color);
            break;
        }
        if (res.region3_dart >= 0) pending.push_back(res.region3_dart);
        if (res.region2_dart >= 0) pending.push_back(res.region2_dart);
        if (res.region1_dart >= 0) pending.push_back(res.region1_dart);
    }
}

map_core::PlanarMap sample_fb_map(unsigned l, Rng& rng, const FillOptions& opt) {
    if (l < 1) throw std::invalid_argument("sample_fb_map: need boundary half-length >= 1");
    map_core::PlanarMap m = map_core::make_boundary(int(2 * l));
    fill_hole(m, m.root_dart, rng, opt);
    return m;
}

} // namespace peelkit::boltzmann
