#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace peelkit::boltzmann {

struct EnumeratedMap {
    std::string code;  // canonical rooted encoding
    int interior_vertices = 0;
    int quad_faces = 0;
};

struct EnumerationOverflow : std::runtime_error {
    explicit EnumerationOverflow(const std::string& what)
        : std::runtime_error(what) {}
};

struct EnumerationResult {
    std::vector<EnumeratedMap> maps;  // deduplicated, sorted by code
    long sequences = 0;               // completed build sequences (= maps if the
                                      // one-step decomposition is a bijection)
    long nodes = 0;                   // search-tree nodes visited
};

// Exhaustively builds every rooted quadrangulation with simple boundary of
// perimeter 2l and exactly n interior vertices, by branching over all
// one-step face attachments of the root hole (depth-first, deterministic
// peel order) and deduplicating by canonical code.  Throws
// EnumerationOverflow once more than max_nodes nodes have been explored.
EnumerationResult enumerate_maps(int n, int l, long max_nodes = 2000000);

}  // namespace peelkit::boltzmann
