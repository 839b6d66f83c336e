#include "peelkit/bl_process/series.h"

#include <ostream>
#include <stdexcept>
#include <string>

namespace peelkit::bl_process {

namespace {

[[noreturn]] void series_bug(std::uint64_t step, const std::string& what) {
    throw std::logic_error("boundary_series: step " + std::to_string(step) +
                           ": " + what);
}

} // namespace

BoundaryLengthSeries boundary_series(const percolation::ExplorationRecord& rec) {
    rec.bc.validate();

    BoundaryLengthSeries s;
    s.bc = rec.bc;
    s.terminated = rec.terminated;
    s.partial = rec.partial;

    const std::size_t n = rec.events.size();
    for (auto* v : {&s.xl, &s.xr, &s.yl, &s.yr, &s.wl, &s.wr}) {
        v->reserve(n + 1);
        v->push_back(0);
    }

    percolation::BoundaryTracker tracker(rec.bc);
    const bool finite = !rec.bc.half_plane();

    // Independent perimeter accumulator built from raw event fields only; it
    // must agree with w_l + w_r + l_L + l_R at every step of a finite run.
    long long hole = finite ? rec.bc.perimeter() : 0;
    long long min_wl = 0;
    long long min_wr = 0;

    for (std::size_t j = 0; j < n; ++j) {
        const peeling::PeelEvent& ev = rec.events[j];
        tracker.apply(ev);

        const long long xl = tracker.x_left();
        const long long xr = tracker.x_right();
        const long long yl = tracker.y_left();
        const long long yr = tracker.y_right();
        const long long wl = xl - yl;
        const long long wr = xr - yr;
        if (wl != tracker.w_left() || wr != tracker.w_right())
            series_bug(j + 1, "w != x - y");

        long long dwl = 0;
        long long dwr = 0;
        switch (ev.kind) {
        case peeling::kStepFace: {
            const bool white = ev.face_color == map_core::FaceColor::White;
            const bool black = ev.face_color == map_core::FaceColor::Black;
            if (!white && !black)
                series_bug(j + 1, "face event without a colour");
            dwl = (white ? ev.exposed : 0) - ev.covered_left - 1;
            dwr = (black ? ev.exposed : 0) - ev.covered_right;
            hole += ev.exposed - 1 - ev.covered_left - ev.covered_right;
            break;
        }
        case peeling::kStepClose:
            dwl = -1;
            dwr = -1;
            hole -= 2;
            break;
        case peeling::kStepSwallow:
            dwl = 0;
            dwr = -(ev.covered_right + 1);
            hole -= ev.covered_right + 1;
            break;
        default:
            series_bug(j + 1, "unknown event kind");
        }
        if (wl - s.wl.back() != dwl || wr - s.wr.back() != dwr)
            series_bug(j + 1, "increment does not match the event record");
        if (finite && hole != wl + wr + rec.bc.perimeter())
            series_bug(j + 1, "perimeter accumulator mismatch");

        min_wl = std::min(min_wl, wl);
        min_wr = std::min(min_wr, wr);
        // The running minimum never undershoots -y, and it catches up with
        // -y within 3 units: fresh edges are consumed before originals, so
        // any step that eats an original leaves at most one face's worth of
        // fresh edges (<= 3) in front on that side.
        if (min_wl < -yl || min_wl > -yl + 3)
            series_bug(j + 1, "left running minimum outside [-y, -y + 3]");
        if (min_wr < -yr || min_wr > -yr + 3)
            series_bug(j + 1, "right running minimum outside [-y, -y + 3]");
        if (wl - min_wl < xl - 3 || wl - min_wl > xl)
            series_bug(j + 1, "left drawdown outside [x - 3, x]");
        if (wr - min_wr < xr - 3 || wr - min_wr > xr)
            series_bug(j + 1, "right drawdown outside [x - 3, x]");

        s.xl.push_back(xl);
        s.xr.push_back(xr);
        s.yl.push_back(yl);
        s.yr.push_back(yr);
        s.wl.push_back(wl);
        s.wr.push_back(wr);
    }

    if (rec.terminated) {
        if (!finite)
            series_bug(n, "half-plane record marked terminated");
        if (!tracker.terminal())
            series_bug(n, "record claims termination before the tracker");
        if (hole != 0)
            series_bug(n, "terminated run left unexplored boundary");
        if (s.wl.back() != -rec.bc.l_left || s.wr.back() != -rec.bc.l_right)
            series_bug(n, "terminal value is not (-l_left, -l_right)");
    } else if (tracker.terminal()) {
        series_bug(n, "tracker reached the end of a run not marked terminated");
    }

    return s;
}

void write_series_csv(std::ostream& out, const BoundaryLengthSeries& s) {
    out << "step,XL,XR,YL,YR,WL,WR\n";
    for (std::size_t j = 0; j < s.xl.size(); ++j) {
        out << j << ',' << s.xl[j] << ',' << s.xr[j] << ',' << s.yl[j] << ','
            << s.yr[j] << ',' << s.wl[j] << ',' << s.wr[j] << '\n';
    }
}

} // namespace peelkit::bl_process
