#pragma once

#include "peelkit/map_core/map.h"
#include "peelkit/percolation/exploration.h"

#include <string>
#include <vector>

namespace peelkit::percolation {

// A walk on edges of the realized map.  edges[k] is a dart id giving the
// edge and its traversal orientation; -1 marks the two virtual edges that
// cap an interface inside the external quadrangles.  vertices[k] is the
// initial endpoint of edges[k] (then one trailing terminal endpoint), with
// -1 for the unidentified outer endpoints of the virtual caps.  Consecutive
// edges always share the vertex between them.
struct LatticePath {
    bool half_steps = false;
    std::string convention;
    std::vector<int> edges;
    std::vector<int> vertices;

    // Number of whole time steps covered by the walk.
    std::size_t length() const {
        if (edges.empty()) return 0;
        return half_steps ? (edges.size() - 1) / 2 : edges.size() - 1;
    }
};

// The peeled edge of each step, interleaved with deterministic half-step
// edges so that consecutive entries always share an endpoint.  Each
// half-step bridge is the first edge incident to both neighbours found by
// rotating around the earlier edge's endpoints ("leftmost" convention;
// consecutive peeled edges that already touch bridge through the earlier
// one).  Requires an explicit, fully terminated record.
LatticePath exploration_path(const ExplorationRecord& rec);

// The percolation interface: the path separating the white cluster of the
// root edge's external quadrangle from the black material on its right,
// directed from the root edge's far endpoint to the marked edge's near one.
// Entries are darts with the white side on the left; the two -1 entries are
// the virtual side edges of the root and marked externals that cap the
// path.  Requires every interior face coloured.
LatticePath interface_path(const ExplorationRecord& rec);
LatticePath interface_path(const map_core::PlanarMap& m,
                           const BoundaryConditions& bc);

} // namespace peelkit::percolation
