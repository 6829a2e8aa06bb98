#include "smc/instance.hpp"

#include "smc/require.hpp"

#include "json.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace smc {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument(what); }

Rational weight_from_json(const json& w, int edge_id) {
    if (w.is_string()) {
        try {
            return parse_decimal(w.get<std::string>());
        } catch (const std::invalid_argument& e) {
            bad("edge " + std::to_string(edge_id) + ": " + e.what());
        }
    }
    if (w.is_number_integer()) return Rational(w.get<long long>());
    if (w.is_number_unsigned()) return Rational(w.get<unsigned long long>());
    bad("edge " + std::to_string(edge_id) +
        ": weight must be a decimal string or integer, not a float");
}

}  // namespace

Instance parse_instance(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        bad(std::string("instance is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) bad("instance must be a JSON object");
    for (const char* key : {"vertices", "edges", "rotations", "terminals", "pairs"})
        if (!j.contains(key)) bad(std::string("instance is missing \"") + key + "\"");

    Instance inst;
    for (const auto& v : j.at("vertices")) {
        if (!v.is_number_integer()) bad("vertex ids must be integers");
        inst.vertices.push_back(v.get<int>());
    }
    for (const auto& e : j.at("edges")) {
        if (!e.is_object()) bad("each edge must be an object");
        for (const char* key : {"id", "u", "v", "w", "sign"})
            if (!e.contains(key)) bad(std::string("edge is missing \"") + key + "\"");
        InstanceEdge rec;
        rec.id = e.at("id").get<int>();
        rec.u = e.at("u").get<int>();
        rec.v = e.at("v").get<int>();
        rec.w = weight_from_json(e.at("w"), rec.id);
        rec.sign = e.at("sign").get<int>();
        inst.edges.push_back(rec);
    }
    for (const auto& [key, ends] : j.at("rotations").items()) {
        int vertex = 0;
        try {
            vertex = std::stoi(key);
        } catch (...) {
            bad("rotation key \"" + key + "\" is not a vertex id");
        }
        if (!ends.is_array()) bad("rotation of vertex " + key + " must be an array");
        std::vector<int> list;
        for (const auto& end : ends) {
            if (!end.is_number_integer()) bad("edge-ends must be integers");
            list.push_back(end.get<int>());
        }
        inst.rotations[vertex] = std::move(list);
    }
    for (const auto& t : j.at("terminals")) inst.terminals.push_back(t.get<int>());
    for (const auto& p : j.at("pairs")) {
        if (!p.is_array() || p.size() != 2) bad("each pair must be a two-element array");
        inst.pairs.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
    }
    return inst;
}

std::string format_instance(const Instance& inst) {
    Instance c = inst;  // canonical order: everything sorted by id
    std::sort(c.vertices.begin(), c.vertices.end());
    std::sort(c.edges.begin(), c.edges.end(),
              [](const InstanceEdge& a, const InstanceEdge& b) { return a.id < b.id; });
    std::sort(c.terminals.begin(), c.terminals.end());
    for (auto& p : c.pairs)
        if (p.second < p.first) std::swap(p.first, p.second);
    std::sort(c.pairs.begin(), c.pairs.end());

    ordered_json j;
    j["vertices"] = c.vertices;
    j["edges"] = ordered_json::array();
    for (const auto& e : c.edges) {
        ordered_json rec;
        rec["id"] = e.id;
        rec["u"] = e.u;
        rec["v"] = e.v;
        rec["w"] = format_rational(e.w);
        rec["sign"] = e.sign;
        j["edges"].push_back(rec);
    }
    j["rotations"] = ordered_json::object();
    for (const auto& [v, ends] : c.rotations)  // std::map iterates in key order
        j["rotations"][std::to_string(v)] = ends;
    j["terminals"] = c.terminals;
    j["pairs"] = ordered_json::array();
    for (const auto& p : c.pairs) j["pairs"].push_back({p.first, p.second});
    return j.dump(2) + "\n";
}

Surface build_surface(const Instance& inst) {
    Surface s;

    for (int id : inst.vertices) {
        if (s.vertex_index.count(id)) bad("duplicate vertex id " + std::to_string(id));
        s.vertex_index[id] = kNone;  // filled after sorting
    }
    s.vertex_ids.assign(inst.vertices.begin(), inst.vertices.end());
    std::sort(s.vertex_ids.begin(), s.vertex_ids.end());
    for (int i = 0; i < static_cast<int>(s.vertex_ids.size()); ++i)
        s.vertex_index[s.vertex_ids[i]] = i;

    std::vector<InstanceEdge> edges = inst.edges;
    std::sort(edges.begin(), edges.end(),
              [](const InstanceEdge& a, const InstanceEdge& b) { return a.id < b.id; });
    for (const auto& e : edges) {
        if (s.edge_index.count(e.id)) bad("duplicate edge id " + std::to_string(e.id));
        if (!s.vertex_index.count(e.u) || !s.vertex_index.count(e.v))
            bad("edge " + std::to_string(e.id) + " references an unknown vertex");
        if (e.sign != 1 && e.sign != -1)
            bad("edge " + std::to_string(e.id) + ": sign must be +1 or -1");
        if (e.w <= 0) bad("edge " + std::to_string(e.id) + ": weight must be positive");
        s.edge_index[e.id] = static_cast<int>(s.edge_ids.size());
        s.edge_ids.push_back(e.id);
    }

    // Decode rotations into darts and check that every edge-end appears
    // exactly once, at the vertex it is attached to.
    std::map<int, std::vector<Dart>> rotation_darts;
    std::set<int> seen_ends;
    for (const auto& [vid, ends] : inst.rotations) {
        auto vit = s.vertex_index.find(vid);
        if (vit == s.vertex_index.end())
            bad("rotation lists unknown vertex " + std::to_string(vid));
        std::vector<Dart> darts;
        for (int end : ends) {
            const int orig_edge = end >> 1;
            const int bit = end & 1;
            auto eit = s.edge_index.find(orig_edge);
            if (eit == s.edge_index.end())
                bad("rotation of vertex " + std::to_string(vid) +
                    " lists unknown edge " + std::to_string(orig_edge));
            const InstanceEdge& rec = edges[eit->second];
            const int attached = bit == 0 ? rec.u : rec.v;
            if (attached != vid)
                bad("edge-end " + std::to_string(end) + " is attached to vertex " +
                    std::to_string(attached) + ", not " + std::to_string(vid));
            if (!seen_ends.insert(end).second)
                bad("edge-end " + std::to_string(end) + " appears twice");
            darts.push_back(dart_of(eit->second, bit));
        }
        rotation_darts[vit->second] = std::move(darts);
    }
    for (const auto& e : edges) {
        if (!seen_ends.count(2 * e.id))
            bad("edge " + std::to_string(e.id) + ": the u end is in no rotation");
        if (!seen_ends.count(2 * e.id + 1))
            bad("edge " + std::to_string(e.id) + ": the v end is in no rotation");
    }

    for (size_t i = 0; i < s.vertex_ids.size(); ++i) s.map.add_vertex();
    for (const auto& e : edges)
        s.map.add_edge(s.vertex_index.at(e.u), s.vertex_index.at(e.v), e.sign,
                       EdgeKind::kGraph, e.w, e.id);
    for (int v = 0; v < static_cast<int>(s.vertex_ids.size()); ++v) {
        auto it = rotation_darts.find(v);
        s.map.set_rotation(v, it == rotation_darts.end() ? std::vector<Dart>{}
                                                         : it->second);
    }
    s.map.seal();
    if (!s.map.is_connected()) bad("instance graph must be connected");

    std::set<int> terminal_set;
    for (int t : inst.terminals) {
        if (!s.vertex_index.count(t)) bad("unknown terminal " + std::to_string(t));
        if (!terminal_set.insert(t).second)
            bad("duplicate terminal " + std::to_string(t));
        s.terminals.push_back(s.vertex_index.at(t));
    }
    for (const auto& [a, b] : inst.pairs) {
        if (!terminal_set.count(a) || !terminal_set.count(b))
            bad("pair (" + std::to_string(a) + ", " + std::to_string(b) +
                ") is not between terminals");
        if (a == b) bad("pair endpoints must differ");
        s.pairs.emplace_back(s.vertex_index.at(a), s.vertex_index.at(b));
    }
    return s;
}

void carve_terminals(Surface& s) {
    require(s.terminal_holes.empty(), "carve_terminals: already carved");
    for (VertexId t : s.terminals) {
        require(s.map.degree(t) >= 1, "carve_terminals: isolated terminal");
        s.terminal_holes.push_back(s.map.carve_vertex(t));
    }
}

int punctured_euler(const Map& m) {
    return m.euler_characteristic_closed() - m.hole_count();
}

Rational curve_length(const Map& m, int curve_id) {
    const CurveRec& c = m.curve(curve_id);
    Rational total = 0;
    for (EdgeId crossed : c.crossed_before) {
        if (crossed == kNone) continue;
        const EdgeRec& rec = m.edge(crossed);
        if (rec.kind == EdgeKind::kGraph) total += rec.weight;
    }
    return total;
}

std::vector<int> overlay(Map& m, const std::vector<std::vector<CrossingStep>>& walks,
                         const std::vector<bool>& closed) {
    require(walks.size() == closed.size(), "overlay: walks/closed size mismatch");
    std::vector<int> ids;
    for (size_t i = 0; i < walks.size(); ++i)
        ids.push_back(m.draw_curve(walks[i], closed[i], EdgeKind::kCurve));
    return ids;
}

}  // namespace smc
