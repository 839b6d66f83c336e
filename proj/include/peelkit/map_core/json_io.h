#pragma once

#include <string>

#include "peelkit/map_core/map.h"

namespace peelkit::map_core {

// Lossless serialization of a map (darts, faces, root/target markers) with a
// stable key order, so serialize -> parse -> serialize is byte-identical.
std::string map_to_json(const PlanarMap& m);

// Throws std::runtime_error naming the offending field on schema errors.
PlanarMap map_from_json(const std::string& text);

void save_map(const PlanarMap& m, const std::string& path);
PlanarMap load_map(const std::string& path);

}  // namespace peelkit::map_core
