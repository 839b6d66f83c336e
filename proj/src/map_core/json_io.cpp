#include "peelkit/map_core/json_io.h"

#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace peelkit::map_core {

namespace {

const char* kind_name(FaceKind k) {
    switch (k) {
        case FaceKind::Interior: return "interior";
        case FaceKind::Hole: return "hole";
        case FaceKind::Outer: return "outer";
    }
    return "?";
}

const char* color_name(FaceColor c) {
    switch (c) {
        case FaceColor::Uncolored: return "uncolored";
        case FaceColor::White: return "white";
        case FaceColor::Black: return "black";
    }
    return "?";
}

FaceKind kind_from(const std::string& s) {
    if (s == "interior") return FaceKind::Interior;
    if (s == "hole") return FaceKind::Hole;
    if (s == "outer") return FaceKind::Outer;
    throw std::runtime_error("map json: unknown face kind '" + s + "'");
}

FaceColor color_from(const std::string& s) {
    if (s == "uncolored") return FaceColor::Uncolored;
    if (s == "white") return FaceColor::White;
    if (s == "black") return FaceColor::Black;
    throw std::runtime_error("map json: unknown face color '" + s + "'");
}

}  // namespace

std::string map_to_json(const PlanarMap& m) {
    nlohmann::ordered_json j;
    j["format"] = "peelkit-map";
    j["version"] = 1;
    j["vertex_count"] = m.n_vertices;
    j["root_dart"] = m.root_dart;
    j["target_dart"] = m.target_dart;
    auto darts = nlohmann::ordered_json::array();
    for (int d = 0; d < int(m.twin.size()); ++d)
        darts.push_back({m.twin[d], m.nxt[d], m.prv[d], m.vert[d], m.face[d],
                         int(m.dart_alive[d])});
    j["darts"] = std::move(darts);
    auto faces = nlohmann::ordered_json::array();
    for (const Face& f : m.faces)
        faces.push_back({kind_name(f.kind), color_name(f.color), f.any_dart,
                         f.degree, int(f.alive)});
    j["faces"] = std::move(faces);
    return j.dump(1);
}

PlanarMap map_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("map json: parse failure: ") + e.what());
    }
    if (!j.is_object() || j.value("format", "") != "peelkit-map")
        throw std::runtime_error("map json: missing format marker 'peelkit-map'");
    if (j.value("version", 0) != 1)
        throw std::runtime_error("map json: unsupported version");
    for (const char* key : {"vertex_count", "root_dart", "target_dart", "darts", "faces"})
        if (!j.contains(key))
            throw std::runtime_error(std::string("map json: missing field '") + key + "'");

    PlanarMap m;
    m.n_vertices = j["vertex_count"].get<int>();
    m.root_dart = j["root_dart"].get<int>();
    m.target_dart = j["target_dart"].get<int>();
    if (m.n_vertices < 0) throw std::runtime_error("map json: negative vertex_count");

    const auto& darts = j["darts"];
    if (!darts.is_array()) throw std::runtime_error("map json: 'darts' not an array");
    for (const auto& row : darts) {
        if (!row.is_array() || row.size() != 6)
            throw std::runtime_error("map json: dart rows need 6 entries");
        m.twin.push_back(row[0].get<int>());
        m.nxt.push_back(row[1].get<int>());
        m.prv.push_back(row[2].get<int>());
        m.vert.push_back(row[3].get<int>());
        m.face.push_back(row[4].get<int>());
        m.dart_alive.push_back(row[5].get<int>() != 0);
    }

    const auto& faces = j["faces"];
    if (!faces.is_array()) throw std::runtime_error("map json: 'faces' not an array");
    for (const auto& row : faces) {
        if (!row.is_array() || row.size() != 5)
            throw std::runtime_error("map json: face rows need 5 entries");
        Face f;
        f.kind = kind_from(row[0].get<std::string>());
        f.color = color_from(row[1].get<std::string>());
        f.any_dart = row[2].get<int>();
        f.degree = row[3].get<int>();
        f.alive = row[4].get<int>() != 0;
        m.faces.push_back(f);
    }

    int n_darts = int(m.twin.size());
    for (int d = 0; d < n_darts; ++d) {
        if (!m.dart_alive[d]) continue;
        for (int ref : {m.twin[d], m.nxt[d], m.prv[d]})
            if (ref < 0 || ref >= n_darts)
                throw std::runtime_error("map json: dart reference out of range");
        if (m.vert[d] < 0 || m.vert[d] >= m.n_vertices)
            throw std::runtime_error("map json: dart vertex out of range");
        if (m.face[d] < 0 || m.face[d] >= int(m.faces.size()))
            throw std::runtime_error("map json: dart face out of range");
    }
    return m;
}

void save_map(const PlanarMap& m, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("save_map: cannot open " + path);
    out << map_to_json(m) << '\n';
}

PlanarMap load_map(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("load_map: cannot open " + path);
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    return map_from_json(text);
}

}  // namespace peelkit::map_core
