#include <fstream>
#include <sstream>

#include "json.hpp"

#include "hcert/errors.hpp"
#include "hcert/hypergraph.hpp"

namespace hcert {

std::string to_json(const Hypergraph& h) {
    std::string out = "{\"n\":" + std::to_string(h.n()) + ",\"k\":" + std::to_string(h.k()) + ",\"edges\":[";
    for (std::size_t e = 0; e < h.num_edges(); ++e) {
        if (e > 0) out += ',';
        out += '[';
        auto edge = h.edge(e);
        for (std::size_t j = 0; j < edge.size(); ++j) {
            if (j > 0) out += ',';
            out += std::to_string(edge[j]);
        }
        out += ']';
    }
    out += "]}\n";
    return out;
}

Hypergraph from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("hypergraph JSON: ") + e.what());
    }
    if (!doc.is_object()) throw InputError("hypergraph JSON: top level must be an object");
    for (const auto& [key, _] : doc.items()) {
        if (key != "n" && key != "k" && key != "edges") throw InputError("hypergraph JSON: unknown field '" + key + "'");
    }
    for (const char* key : {"n", "k", "edges"}) {
        if (!doc.contains(key)) throw InputError(std::string("hypergraph JSON: missing field '") + key + "'");
    }
    if (!doc["n"].is_number_unsigned() || !doc["k"].is_number_unsigned()) {
        throw InputError("hypergraph JSON: 'n' and 'k' must be non-negative integers");
    }
    if (!doc["edges"].is_array()) throw InputError("hypergraph JSON: 'edges' must be an array");
    const auto n = doc["n"].get<std::uint64_t>();
    const auto k = doc["k"].get<std::uint64_t>();
    if (n > 100000 || k < 1 || k > 64) throw InputError("hypergraph JSON: n or k out of supported range");

    std::vector<Vertex> flat;
    flat.reserve(doc["edges"].size() * k);
    for (const auto& edge : doc["edges"]) {
        if (!edge.is_array() || edge.size() != k) throw InputError("hypergraph JSON: every edge must list exactly k vertices");
        for (const auto& v : edge) {
            if (!v.is_number_unsigned()) throw InputError("hypergraph JSON: vertices must be non-negative integers");
            const auto value = v.get<std::uint64_t>();
            if (value >= n) throw InputError("hypergraph JSON: vertex " + std::to_string(value) + " out of range");
            flat.push_back(static_cast<Vertex>(value));
        }
    }
    return Hypergraph::from_flat(static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(k), std::move(flat));
}

void save(const Hypergraph& h, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot open '" + path.string() + "' for writing");
    out << to_json(h);
}

Hypergraph load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_json(buf.str());
}

}  // namespace hcert
