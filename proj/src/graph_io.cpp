#include "qgraph/graph_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qgraph/errors.hpp"

namespace qgraph {

using nlohmann::json;

namespace {

const json& field(const json& obj, const char* key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end()) throw ParseError(where + ": missing '" + key + "'");
    return *it;
}

PiecewisePotential parse_potential(const json& j, const std::string& where) {
    if (!j.is_object()) throw ParseError(where + ": potential must be an object");
    const auto kind = field(j, "kind", where).get<std::string>();
    if (kind == "zero") return PiecewisePotential::zero();
    const auto values = field(j, "values", where).get<std::vector<double>>();
    if (kind == "constant") {
        if (values.size() != 1) throw ParseError(where + ": constant potential takes exactly one value");
        return PiecewisePotential::constant(values.front());
    }
    if (kind == "piecewise") {
        auto bp = field(j, "breakpoints", where).get<std::vector<double>>();
        try {
            return {std::move(bp), values};
        } catch (const InputError& e) {
            throw ParseError(where + ": " + e.what());
        }
    }
    throw ParseError(where + ": unknown potential kind '" + kind + "'");
}

json potential_json(const PiecewisePotential& q) {
    const auto vals = q.values();
    if (vals.size() == 1 && vals[0] == 0.0) return {{"kind", "zero"}};
    if (vals.size() == 1) return {{"kind", "constant"}, {"values", {vals[0]}}};
    return {{"kind", "piecewise"},
            {"breakpoints", std::vector<double>(q.breakpoints().begin(), q.breakpoints().end())},
            {"values", std::vector<double>(vals.begin(), vals.end())}};
}

}  // namespace

GraphDescription parse_graph(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("graph file is not valid JSON: ") + e.what());
    }
    try {
        if (!doc.is_object()) throw ParseError("graph file must hold a JSON object");
        const auto version = field(doc, "version", "graph").get<std::string>();
        if (version != kGraphFormatVersion) throw ParseError("unsupported graph format version '" + version + "'");

        GraphDescription desc;
        desc.vertices = field(doc, "vertices", "graph").get<std::vector<std::string>>();
        const auto& edges = field(doc, "edges", "graph");
        if (!edges.is_array()) throw ParseError("graph: 'edges' must be an array");
        for (std::size_t i = 0; i < edges.size(); ++i) {
            const auto& e = edges[i];
            const std::string where = "edge #" + std::to_string(i);
            EdgeSpec spec;
            spec.id = field(e, "id", where).get<std::string>();
            spec.from = field(e, "from", where).get<std::string>();
            spec.to = field(e, "to", where).get<std::string>();
            if (e.contains("potential")) spec.potential = parse_potential(e["potential"], where);
            desc.edges.push_back(std::move(spec));
        }
        return desc;
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed graph file: ") + e.what());
    }
}

GraphDescription load_graph_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open graph file '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

std::string serialize_graph(const GraphDescription& desc) {
    json doc;
    doc["version"] = kGraphFormatVersion;
    doc["vertices"] = desc.vertices;
    doc["edges"] = json::array();
    for (const auto& e : desc.edges) {
        doc["edges"].push_back({{"id", e.id}, {"from", e.from}, {"to", e.to}, {"potential", potential_json(e.potential)}});
    }
    return doc.dump(2) + "\n";
}

}  // namespace qgraph
