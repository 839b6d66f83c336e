#include "peelkit/percolation/exploration.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace peelkit::percolation {

namespace {

using map_core::FaceColor;
using peeling::PeelEvent;

constexpr double kWhiteProbability = 0.75;

// Steps allowed before a finite run is declared stuck.
std::uint64_t alarm_budget(const BoundaryConditions& bc) {
    double p = double(bc.perimeter());
    return std::uint64_t(1000.0 * p * std::sqrt(p)) + 1000;
}

} // namespace

void BoundaryConditions::validate() const {
    if (half_plane()) {
        if (l_left >= 0 || l_right >= 0)
            throw std::invalid_argument(
                "boundary conditions: half-plane needs both arcs infinite");
        return;
    }
    if (l_left < 1 || l_right < 1)
        throw std::invalid_argument("boundary conditions: arcs must be >= 1");
}

BoundaryConditions finite_bc(long long l_left, long long l_right) {
    BoundaryConditions bc{l_left, l_right};
    bc.validate();
    return bc;
}

BoundaryConditions half_plane_bc() {
    BoundaryConditions bc{-1, -1};
    return bc;
}

BoundaryTracker::BoundaryTracker(const BoundaryConditions& bc) : bc_(bc) {
    bc_.validate();
    if (!bc_.half_plane()) {
        ow_ = bc_.l_left - 1;
        ob_ = bc_.l_right - 1;
    }
    tip_ = Tip::Original; // the root edge
    check();
}

long long BoundaryTracker::perimeter() const {
    if (bc_.half_plane())
        throw std::logic_error("boundary tracker: half-plane has no perimeter");
    if (terminal_) return 0;
    return (tip_ == Tip::None ? 1 : 2) + xw_ + ow_ + xb_ + ob_;
}

long long BoundaryTracker::marker_slot() const {
    if (bc_.half_plane() || terminal_ || tip_ == Tip::None)
        throw std::logic_error("boundary tracker: no tip to count slots from");
    return 1 + xb_ + ob_;
}

long long BoundaryTracker::x_left() const {
    return xw_ + (tip_ == Tip::Fresh ? 1 : 0);
}

long long BoundaryTracker::x_right() const { return xb_; }

long long BoundaryTracker::y_left() const { return yl_; }

long long BoundaryTracker::y_right() const { return yr_; }

void BoundaryTracker::check() const {
    if (xw_ < 0 || ow_ < 0 || xb_ < 0 || ob_ < 0 || yl_ < 0 || yr_ < 0)
        throw std::logic_error("boundary tracker: negative block size");
    if (bc_.half_plane()) return;
    long long img_l = bc_.l_left - ow_ - (tip_ == Tip::Original ? 1 : 0);
    long long img_r = bc_.l_right - ob_ - (terminal_ ? 0 : 1);
    if (yl_ != img_l || yr_ != img_r)
        throw std::logic_error("boundary tracker: covered counts drifted");
    if (terminal_ && (xw_ || ow_ || xb_ || ob_ || tip_ != Tip::None))
        throw std::logic_error("boundary tracker: terminal state not empty");
}

void BoundaryTracker::apply(const PeelEvent& ev) {
    if (terminal_) throw std::logic_error("boundary tracker: already terminal");
    const bool finite = !bc_.half_plane();

    if (ev.kind == peeling::kStepClose) {
        if (!finite)
            throw std::logic_error("boundary tracker: close in the half-plane");
        if (pending_swallow_ || xw_ + ow_ + xb_ + ob_ != 0)
            throw std::logic_error("boundary tracker: close needs a 2-gon");
        if (tip_ == Tip::Original) yl_ += 1;
        yr_ += 1; // the marked edge, glued onto the tip
        tip_ = Tip::None;
        terminal_ = true;
        check();
        return;
    }

    if (ev.kind == peeling::kStepSwallow) {
        if (!finite || !pending_swallow_)
            throw std::logic_error("boundary tracker: unexpected swallow step");
        if (ev.exposed != 0 || ev.covered_left != 0 ||
            ev.covered_right != xb_ + ob_)
            throw std::logic_error("boundary tracker: malformed swallow step");
        yr_ += ob_ + 1; // remaining originals plus the marked edge
        xb_ = ob_ = 0;
        pending_swallow_ = false;
        terminal_ = true;
        check();
        return;
    }

    if (ev.kind != peeling::kStepFace)
        throw std::invalid_argument("boundary tracker: unknown event kind");
    if (pending_swallow_)
        throw std::logic_error("boundary tracker: swallow step expected");

    long long col = ev.covered_left;
    long long cor = ev.covered_right;
    long long ex = ev.exposed;
    if (ex < 1 || ex > 3 || col < 0 || cor < 0)
        throw std::invalid_argument("boundary tracker: malformed face step");

    // Coverage pops fresh edges first, then originals.
    long long db = std::min(cor, xb_);
    xb_ -= db;
    long long rb = cor - db;
    if (finite) {
        if (rb > ob_)
            throw std::logic_error("boundary tracker: right coverage overflow");
        ob_ -= rb;
    }
    yr_ += rb;

    long long dw = std::min(col, xw_);
    xw_ -= dw;
    long long rw = col - dw;
    if (finite) {
        if (rw > ow_)
            throw std::logic_error("boundary tracker: left coverage overflow");
        ow_ -= rw;
    }
    yl_ += rw;

    // The tip edge itself is consumed by the peel.
    if (tip_ == Tip::Original) yl_ += 1;
    tip_ = Tip::None;

    // Push the exposed edges onto the revealed quad's side and pick the new
    // tip: the white-incident edge whose ccw arc to the marked edge is black.
    if (ev.face_color == FaceColor::White) {
        xw_ += ex - 1;
        tip_ = Tip::Fresh;
    } else if (ev.face_color == FaceColor::Black) {
        xb_ += ex;
        if (xw_ > 0) {
            xw_ -= 1;
            tip_ = Tip::Fresh;
        } else if (!finite || ow_ > 0) {
            if (finite) ow_ -= 1;
            tip_ = Tip::Original;
        } else {
            pending_swallow_ = true;
        }
    } else {
        throw std::invalid_argument("boundary tracker: face step needs a colour");
    }
    check();
}

ExplorationRecord run_exploration(const BoundaryConditions& bc,
                                  peeling::PeelMode mode,
                                  std::uint64_t step_budget,
                                  std::uint64_t seed) {
    bc.validate();
    ExplorationRecord rec;
    rec.bc = bc;
    rec.mode = mode;
    rec.seed = seed;
    rec.step_budget = step_budget;

    Rng event_rng(split_seed(seed, 0));
    Rng fill_rng(split_seed(seed, 1));

    if (bc.half_plane()) {
        if (mode != peeling::PeelMode::Lazy)
            throw std::invalid_argument(
                "run_exploration: half-plane runs must be lazy");
        if (step_budget == 0)
            throw std::invalid_argument(
                "run_exploration: half-plane runs need a step budget");
        peeling::PeelingState st = peeling::make_lazy_half_plane_state();
        BoundaryTracker tracker(bc);
        rec.events.reserve(size_t(std::min<std::uint64_t>(step_budget, 1 << 20)));
        for (std::uint64_t i = 0; i < step_budget; ++i) {
            PeelEvent ev = peel_step(st, event_rng, fill_rng);
            ev.face_color = event_rng.bernoulli(kWhiteProbability)
                                ? FaceColor::White
                                : FaceColor::Black;
            tracker.apply(ev);
            rec.events.push_back(ev);
        }
        rec.partial = true;
        return rec;
    }

    const bool expl = mode == peeling::PeelMode::Explicit;
    unsigned p = unsigned(bc.perimeter());
    peeling::PeelingState st = expl
                                   ? peeling::make_explicit_state(p, bc.l_right)
                                   : peeling::make_lazy_state(p, bc.l_right);
    if (expl) {
        st.fill_options.color_faces = true;
        st.fill_options.p_white = kWhiteProbability;
        rec.map = st.map;
        rec.root_dart = st.map->root_dart;
        rec.target_dart = st.target_dart;
    }
    BoundaryTracker tracker(bc);
    const std::uint64_t alarm = alarm_budget(bc);

    while (!tracker.terminal()) {
        if (step_budget > 0 && rec.events.size() >= step_budget) {
            rec.partial = true;
            return rec;
        }
        if (rec.events.size() > alarm)
            throw std::runtime_error(
                "run_exploration: step alarm tripped, run did not terminate");

        if (tracker.pending_swallow()) {
            // The frontier has no white edge left: the peel at the marked
            // edge engulfs the rest of the hole in one stroke.
            PeelEvent ev;
            ev.step = rec.events.size();
            ev.kind = peeling::kStepSwallow;
            ev.covered_right = tracker.perimeter() - 1;
            int swallowed = st.target_dart;
            if (expl) {
                map_core::PlanarMap& m = *st.map;
                rec.peeled_darts.push_back(swallowed);
                rec.peeled_heads.push_back(m.vert[m.twin[swallowed]]);
                int before = int(m.faces.size());
                boltzmann::fill_hole(m, st.cursor_dart, fill_rng,
                                     st.fill_options);
                rec.face_ranges.emplace_back(before, int(m.faces.size()));
            }
            tracker.apply(ev);
            rec.events.push_back(ev);
            st.steps += 1;
            st.perimeter = 0;
            st.target_slot = 0;
            st.cursor_dart = st.target_dart = -1;
            st.terminal = true;
            break;
        }

        int cursor_before = st.cursor_dart;
        int faces_before = expl ? int(st.map->faces.size()) : 0;
        PeelEvent ev = peel_step(st, event_rng, fill_rng);

        if (ev.kind == peeling::kStepFace) {
            ev.face_color = event_rng.bernoulli(kWhiteProbability)
                                ? FaceColor::White
                                : FaceColor::Black;
            if (expl) st.map->faces[st.last_face].color = ev.face_color;
        }
        tracker.apply(ev);

        if (expl) {
            map_core::PlanarMap& m = *st.map;
            rec.peeled_darts.push_back(cursor_before);
            rec.peeled_heads.push_back(m.vert[m.twin[cursor_before]]);
            rec.face_ranges.emplace_back(faces_before, int(m.faces.size()));
        }
        rec.events.push_back(ev);

        if (ev.kind == peeling::kStepFace && !tracker.pending_swallow()) {
            if (expl) {
                map_core::PlanarMap& m = *st.map;
                if (ev.face_color == FaceColor::White) {
                    for (int i = 1; i < ev.exposed; ++i)
                        st.cursor_dart = m.nxt[st.cursor_dart];
                } else {
                    st.cursor_dart = m.prv[st.cursor_dart];
                }
            }
            st.target_slot = tracker.marker_slot();
        }
        if (!tracker.terminal() && st.perimeter != tracker.perimeter())
            throw std::logic_error(
                "run_exploration: engine and tracker disagree on perimeter");
    }

    rec.terminated = true;
    if (tracker.w_left() != -bc.l_left || tracker.w_right() != -bc.l_right)
        throw std::logic_error(
            "run_exploration: terminal boundary balance is off");
    return rec;
}

} // namespace peelkit::percolation
