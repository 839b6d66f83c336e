#include "peelkit/peeling/engine.h"

#include "peelkit/boltzmann/sample.h"
#include "peelkit/map_core/builder.h"
#include "peelkit/peeling/finite_law.h"
#include "peelkit/peeling/uihpq_law.h"

#include <stdexcept>

namespace peelkit::peeling {

namespace {

long long checked_slot(unsigned perimeter, long long s) {
    if (perimeter < 2 || perimeter % 2 != 0)
        throw std::invalid_argument("peeling state: perimeter must be even and positive");
    if (s < 0) s = (long long)perimeter - 1;
    if (s < 1 || s >= (long long)perimeter)
        throw std::invalid_argument("peeling state: marker slot out of range");
    return s;
}

// Carves the revealed face into the map, fills every region not holding the
// marker, and moves the cursor to the first fresh edge of the marker's hole.
void apply_explicit(PeelingState& st, const PeelIndicator& ind, int t, Rng& fill_rng) {
    using namespace map_core;
    PlanarMap& m = *st.map;
    int before = (int)m.twin.size();
    AttachResult res;
    switch (ind.n_parts) {
    case 1:
        res = attach_quad_free(m, st.cursor_dart, FaceColor::Uncolored);
        break;
    case 2:
        res = (ind.arc[0] % 2 != 0)
                  ? attach_quad_c_glued(m, st.cursor_dart, int(ind.arc[0]),
                                        FaceColor::Uncolored)
                  : attach_quad_d_glued(m, st.cursor_dart, int(ind.arc[1]),
                                        FaceColor::Uncolored);
        break;
    default:
        res = attach_quad_cd_glued(m, st.cursor_dart, int(ind.arc[0]),
                                   int(ind.arc[1]), FaceColor::Uncolored);
        break;
    }
    int region[3] = {res.region1, res.region2, res.region3};
    int rdart[3] = {res.region1_dart, res.region2_dart, res.region3_dart};
    if (m.face[st.target_dart] != region[t])
        throw std::logic_error("peel_step: marker not in the expected region");
    for (int i = 0; i < ind.n_parts; ++i)
        if (i != t && region[i] >= 0)
            boltzmann::fill_hole(m, rdart[i], fill_rng, st.fill_options);
    int cur = -1;
    for (int d : m.face_cycle(rdart[t]))
        if (d >= before && m.prv[d] < before) {
            cur = d;
            break;
        }
    if (cur < 0) throw std::logic_error("peel_step: no fresh edge on the marker hole");
    st.cursor_dart = cur;
    st.last_face = res.face_new;
    if (m.faces[region[t]].degree != (long long)ind.arc[t] + ind.fresh_edges(t))
        throw std::logic_error("peel_step: hole degree drifted from bookkeeping");
}

} // namespace

PeelingState make_lazy_state(unsigned perimeter, long long target_slot) {
    PeelingState st;
    st.perimeter = perimeter;
    st.target_slot = checked_slot(perimeter, target_slot);
    return st;
}

PeelingState make_explicit_state(unsigned perimeter, long long target_slot) {
    PeelingState st = make_lazy_state(perimeter, target_slot);
    st.mode = PeelMode::Explicit;
    st.map = std::make_shared<map_core::PlanarMap>(
        map_core::make_boundary(int(perimeter)));
    st.cursor_dart = st.map->root_dart;
    int d = st.cursor_dart;
    for (long long i = 0; i < st.target_slot; ++i) d = st.map->nxt[d];
    st.target_dart = d;
    st.map->target_dart = d;
    return st;
}

PeelingState make_lazy_half_plane_state() {
    PeelingState st;
    st.half_plane = true;
    st.perimeter = kInfiniteArc;
    st.target_slot = kInfiniteArc;
    return st;
}

PeelEvent peel_step(PeelingState& st, Rng& rng, Rng& fill_rng) {
    if (st.terminal) throw std::logic_error("peel_step: state is terminal");
    st.last_face = -1;
    if (st.half_plane) {
        PeelEvent ev = sample_indicator_uihpq(rng);
        ev.step = st.steps++;
        return ev;
    }
    PeelEvent ev = sample_indicator_fb(unsigned(st.perimeter), rng, st.target_slot);
    ev.step = st.steps++;
    if (ev.kind == kStepClose) {
        if (st.mode == PeelMode::Explicit)
            map_core::close_trivial(*st.map, st.cursor_dart);
        st.perimeter = 0;
        st.target_slot = 0;
        st.cursor_dart = st.target_dart = -1;
        st.terminal = true;
        return ev;
    }
    int t = ev.target_part;
    long long pre = 0;
    for (int i = 0; i < t; ++i) pre += ev.indicator.arc[i];
    if (st.mode == PeelMode::Explicit) apply_explicit(st, ev.indicator, t, fill_rng);
    st.perimeter = ev.exposed + ev.indicator.arc[t];
    st.target_slot = st.target_slot - pre + ev.exposed - 1;
    return ev;
}

PeelEvent peel_step(PeelingState& st, Rng& rng) { return peel_step(st, rng, rng); }

long long explicit_marker_slot(const PeelingState& st) {
    if (st.mode != PeelMode::Explicit || st.terminal)
        throw std::logic_error("explicit_marker_slot: needs a live explicit state");
    const map_core::PlanarMap& m = *st.map;
    int d = st.cursor_dart;
    for (long long i = 0; i <= st.perimeter; ++i) {
        if (d == st.target_dart) return i;
        d = m.nxt[d];
    }
    throw std::logic_error("explicit_marker_slot: marker not on the hole cycle");
}

} // namespace peelkit::peeling
