#pragma once

#include "peelkit/percolation/exploration.h"
#include "peelkit/percolation/paths.h"

#include <cstdint>
#include <string>
#include <vector>

namespace peelkit::percolation {

// Consistency report tying an exploration to its interface: after j+1 peel
// steps the newly explored vertex must sit on the interface, at an index
// whose whole prefix is already inside the explored region.
struct InterfaceAudit {
    // Largest admissible interface index per step, -1 where none exists.
    std::vector<long long> s;
    std::vector<std::string> violations;
    // Steps where several interface indices were admissible; informational.
    std::uint64_t multi_candidates = 0;

    bool ok() const { return violations.empty(); }
};

// Checks, step by step, that the exploration only advances along the
// interface: the peeled edge's head vertex lies on the interface at an
// index reachable through edges the exploration had already revealed, and
// those indices never move backwards.  `interface` must come from
// interface_path on the same record.
InterfaceAudit verify_interface_consistency(const ExplorationRecord& rec,
                                            const LatticePath& interface);

} // namespace peelkit::percolation
