#include "peelkit/percolation/audit.h"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace peelkit::percolation {

namespace {

using map_core::FaceKind;
using map_core::PlanarMap;

constexpr long long kNever = std::numeric_limits<long long>::max();

// Step after which each face exists: faces created while handling events[k]
// are present once k+1 steps have been taken.
std::vector<long long> face_births(const ExplorationRecord& rec) {
    std::vector<long long> birth(rec.map->faces.size(), kNever);
    for (std::size_t k = 0; k < rec.face_ranges.size(); ++k)
        for (int f = rec.face_ranges[k].first; f < rec.face_ranges[k].second;
             ++f)
            birth[size_t(f)] = (long long)k + 1;
    return birth;
}

long long side_birth(const PlanarMap& m, const std::vector<long long>& birth,
                     int d) {
    const auto& f = m.faces[m.face[d]];
    if (f.kind != FaceKind::Interior) return kNever;
    return birth[size_t(m.face[d])];
}

} // namespace

InterfaceAudit verify_interface_consistency(const ExplorationRecord& rec,
                                            const LatticePath& interface) {
    if (rec.mode != peeling::PeelMode::Explicit || !rec.terminated || !rec.map)
        throw std::logic_error(
            "interface audit: needs a terminated explicit record");
    if (interface.edges.size() < 2 || interface.edges.front() != -1 ||
        interface.edges.back() != -1)
        throw std::invalid_argument(
            "interface audit: path is not a capped interface");
    if (rec.peeled_heads.size() != rec.events.size() ||
        rec.face_ranges.size() != rec.events.size())
        throw std::invalid_argument("interface audit: record lacks geometry");

    const PlanarMap& m = *rec.map;
    const std::vector<long long> birth = face_births(rec);
    const long long n = (long long)interface.edges.size() - 2; // real entries

    // exist_after[s]: steps needed before the interface prefix [0..s] lies
    // inside the explored region; nondecreasing in s.
    std::vector<long long> exist_after(size_t(n) + 2, 0);
    for (long long s = 1; s <= n; ++s) {
        int d = interface.edges[size_t(s)];
        long long b =
            std::min(side_birth(m, birth, d), side_birth(m, birth, m.twin[d]));
        if (b == kNever)
            throw std::logic_error(
                "interface audit: interface edge outside the explored region");
        exist_after[size_t(s)] = std::max(exist_after[size_t(s - 1)], b);
    }
    exist_after[size_t(n) + 1] = exist_after[size_t(n)];

    // Interface indices grouped by the vertex their edge lands on.
    std::unordered_map<int, std::vector<long long>> landing;
    for (long long s = 0; s <= n; ++s)
        landing[interface.vertices[size_t(s) + 1]].push_back(s);

    InterfaceAudit audit;
    audit.s.reserve(rec.events.size());
    long long prev = -1;
    for (std::size_t j = 0; j < rec.events.size(); ++j) {
        int v = rec.peeled_heads[j];
        long long best = -1;
        std::uint64_t hits = 0;
        auto it = landing.find(v);
        if (it != landing.end())
            for (long long s : it->second)
                if (exist_after[size_t(s)] <= (long long)j) {
                    ++hits;
                    best = std::max(best, s);
                }
        if (hits == 0) {
            std::ostringstream msg;
            msg << "step " << j << ": explored vertex " << v
                << " is not on the contained interface prefix";
            audit.violations.push_back(msg.str());
        } else if (hits > 1) {
            ++audit.multi_candidates;
        }
        if (best >= 0 && prev >= 0 && best < prev) {
            std::ostringstream msg;
            msg << "step " << j << ": interface index moved backwards ("
                << prev << " -> " << best << ")";
            audit.violations.push_back(msg.str());
        }
        if (best >= 0) prev = best;
        audit.s.push_back(best);
    }
    return audit;
}

} // namespace peelkit::percolation
