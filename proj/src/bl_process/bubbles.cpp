#include "peelkit/bl_process/bubbles.h"

#include "peelkit/bl_process/stats.h"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace peelkit::bl_process {

BubbleCensus bubble_census(const percolation::ExplorationRecord& rec, double t,
                           long long n) {
    if (rec.bc.half_plane())
        throw std::invalid_argument(
            "bubble_census: finite-boundary record required");
    if (t < 0.0) throw std::invalid_argument("bubble_census: negative time");
    if (n < 1) throw std::invalid_argument("bubble_census: volume must be >= 1");

    const double space_unit =
        boundary_scale() * std::sqrt(static_cast<double>(n));
    const double time_unit =
        time_scale() * std::pow(static_cast<double>(n), 0.75);

    BubbleCensus census;
    census.n = n;
    census.t = t;

    double raw_steps = std::floor(t * time_unit);
    std::uint64_t limit =
        raw_steps > static_cast<double>(rec.events.size())
            ? rec.events.size() + 1
            : static_cast<std::uint64_t>(raw_steps);
    if (limit > rec.events.size()) {
        if (!rec.terminated)
            throw std::invalid_argument(
                "bubble_census: time lies beyond the recorded horizon of an "
                "unfinished run");
        limit = rec.events.size();
    }
    census.step_limit = limit;

    const BoundaryLengthSeries series = boundary_series(rec);
    census.unexplored_perimeter = series.wl[limit] + series.wr[limit] +
                                  rec.bc.perimeter();
    census.delta0 =
        static_cast<double>(census.unexplored_perimeter) / space_unit;

    long long cut_total = 0;
    for (std::uint64_t j = 0; j < limit; ++j) {
        const peeling::PeelEvent& ev = rec.events[j];
        const std::uint64_t step = j + 1;
        const double tau = static_cast<double>(step) / time_unit;

        switch (ev.kind) {
        case peeling::kStepFace: {
            ++census.face_steps;
            for (int part = 0; part < ev.indicator.n_parts; ++part) {
                if (part == ev.target_part) continue;
                BubbleCut cut;
                cut.step = step;
                cut.tau = tau;
                cut.side = part < ev.target_part ? CutSide::Right
                                                 : CutSide::Left;
                cut.perimeter = ev.indicator.component_perimeter(part);
                cut.rescaled = static_cast<double>(cut.perimeter) / space_unit;
                cut_total += cut.perimeter;
                census.cuts.push_back(cut);
            }
            break;
        }
        case peeling::kStepClose:
            ++census.close_steps;
            break;
        case peeling::kStepSwallow: {
            BubbleCut cut;
            cut.step = step;
            cut.tau = tau;
            cut.side = CutSide::Right;
            cut.perimeter = ev.covered_right + 1;
            cut.rescaled = static_cast<double>(cut.perimeter) / space_unit;
            cut_total += cut.perimeter;
            census.cuts.push_back(cut);
            break;
        }
        default:
            throw std::logic_error("bubble_census: unknown event kind");
        }
    }

    const long long expected = rec.bc.perimeter() +
                               2 * static_cast<long long>(census.face_steps) -
                               2 * static_cast<long long>(census.close_steps);
    if (cut_total + census.unexplored_perimeter != expected)
        throw std::logic_error(
            "bubble_census: cut perimeters and unexplored boundary do not "
            "balance the peeled faces");

    std::sort(census.cuts.begin(), census.cuts.end(),
              [](const BubbleCut& a, const BubbleCut& b) {
                  if (a.perimeter != b.perimeter)
                      return a.perimeter > b.perimeter;
                  return a.step < b.step;
              });
    return census;
}

void write_census_csv(std::ostream& out, const BubbleCensus& census) {
    out << "step,tau,side,perimeter,rescaled\n";
    for (const BubbleCut& cut : census.cuts) {
        out << cut.step << ',' << cut.tau << ','
            << (cut.side == CutSide::Left ? 'L' : 'R') << ',' << cut.perimeter
            << ',' << cut.rescaled << '\n';
    }
}

} // namespace peelkit::bl_process
