#include "peelkit/peeling/indicator.h"

#include <json.hpp>

#include <stdexcept>

namespace peelkit::peeling {

namespace {

const char* color_tag(map_core::FaceColor c) {
    switch (c) {
    case map_core::FaceColor::White: return "w";
    case map_core::FaceColor::Black: return "b";
    default: return "u";
    }
}

map_core::FaceColor color_from_tag(const std::string& s) {
    if (s == "w") return map_core::FaceColor::White;
    if (s == "b") return map_core::FaceColor::Black;
    if (s == "u") return map_core::FaceColor::Uncolored;
    throw std::runtime_error("event log: bad face color tag '" + s + "'");
}

} // namespace

int PeelIndicator::fresh_edges(int i) const {
    if (i < 0 || i >= n_parts) throw std::out_of_range("fresh_edges: part index");
    if (arc[i] == kInfiniteArc) {
        int taken = 0;
        for (int j = 0; j < n_parts; ++j)
            if (j != i) taken += (arc[j] % 2 != 0) ? 1 : 2;
        return 3 - taken;
    }
    if (n_parts == 1) return 3;
    return (arc[i] % 2 != 0) ? 1 : 2;
}

long long PeelIndicator::component_perimeter(int i) const {
    if (arc[i] == kInfiniteArc) return kInfiniteArc;
    return arc[i] + fresh_edges(i);
}

std::string PeelIndicator::to_string() const {
    std::string s = "(";
    for (int i = 0; i < n_parts; ++i) {
        if (i) s += ",";
        s += (arc[i] == kInfiniteArc) ? "inf" : std::to_string(arc[i]);
    }
    return s + ")";
}

bool PeelEvent::operator==(const PeelEvent& o) const {
    return step == o.step && kind == o.kind && indicator == o.indicator &&
           target_part == o.target_part && exposed == o.exposed &&
           covered_left == o.covered_left && covered_right == o.covered_right &&
           face_color == o.face_color &&
           new_interior_vertices == o.new_interior_vertices;
}

int target_part_at(const PeelIndicator& ind, long long s_star) {
    if (ind.n_parts == 0) return -1;
    if (ind.infinite_part() >= 0)
        throw std::invalid_argument("target_part_at: infinite arc present");
    long long cum = 0;
    for (int i = 0; i < ind.n_parts; ++i) {
        cum += ind.arc[i];
        if (s_star <= cum) return i;
    }
    throw std::invalid_argument("target_part_at: slot " + std::to_string(s_star) +
                                " beyond " + ind.to_string());
}

PeelEvent complete_event(const PeelIndicator& ind, int target_part) {
    if (target_part < 0 || target_part >= ind.n_parts)
        throw std::invalid_argument("complete_event: bad target part");
    PeelEvent ev;
    ev.kind = kStepFace;
    ev.indicator = ind;
    ev.target_part = target_part;
    int taken = 0;
    for (int i = 0; i < ind.n_parts; ++i) {
        if (i == target_part) continue;
        taken += ind.fresh_edges(i);
        if (ind.arc[i] == kInfiniteArc)
            throw std::invalid_argument("complete_event: infinite arc off target");
        if (i < target_part) ev.covered_right += ind.arc[i];
        else ev.covered_left += ind.arc[i];
    }
    ev.exposed = 3 - taken;
    ev.new_interior_vertices = 3 - ind.n_parts;
    return ev;
}

std::string event_to_json(const PeelEvent& ev) {
    nlohmann::ordered_json j;
    j["step"] = ev.step;
    j["kind"] = int(ev.kind);
    nlohmann::ordered_json arcs = nlohmann::ordered_json::array();
    for (int i = 0; i < ev.indicator.n_parts; ++i) arcs.push_back(ev.indicator.arc[i]);
    j["arc"] = std::move(arcs);
    j["part"] = ev.target_part;
    j["ex"] = ev.exposed;
    j["col"] = ev.covered_left;
    j["cor"] = ev.covered_right;
    j["color"] = color_tag(ev.face_color);
    j["v"] = ev.new_interior_vertices;
    return j.dump();
}

PeelEvent event_from_json(const std::string& line) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("event log: unparsable line: ") + e.what());
    }
    PeelEvent ev;
    try {
        ev.step = j.at("step").get<std::uint64_t>();
        ev.kind = std::uint8_t(j.at("kind").get<int>());
        const auto& arcs = j.at("arc");
        if (!arcs.is_array() || arcs.size() > 3)
            throw std::runtime_error("event log: bad arc list");
        ev.indicator.n_parts = std::uint8_t(arcs.size());
        for (std::size_t i = 0; i < arcs.size(); ++i)
            ev.indicator.arc[i] = arcs[i].get<long long>();
        ev.target_part = j.at("part").get<int>();
        ev.exposed = j.at("ex").get<int>();
        ev.covered_left = j.at("col").get<long long>();
        ev.covered_right = j.at("cor").get<long long>();
        ev.face_color = color_from_tag(j.at("color").get<std::string>());
        ev.new_interior_vertices = j.at("v").get<int>();
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("event log: missing field: ") + e.what());
    }
    return ev;
}

} // namespace peelkit::peeling
