#include "relturan/json_io.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace relturan {

using nlohmann::json;

std::string to_json(const Hypergraph& h) {
    json j;
    j["r"] = h.uniformity();
    j["n"] = h.vertex_count();
    j["edges"] = h.edges();
    if (h.partition()) {
        j["partition"] = *h.partition();
    } else {
        j["partition"] = nullptr;
    }
    return j.dump();
}

Hypergraph hypergraph_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("hypergraph JSON parse error: ") + e.what());
    }
    if (!j.contains("r") || !j.contains("n") || !j.contains("edges"))
        throw std::invalid_argument("hypergraph JSON: missing r/n/edges");
    std::optional<Partition> partition;
    if (j.contains("partition") && !j["partition"].is_null())
        partition = j["partition"].get<Partition>();
    return Hypergraph(j["r"].get<int>(), j["n"].get<int>(),
                      j["edges"].get<std::vector<Edge>>(), std::move(partition));
}

Hypergraph load_hypergraph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open hypergraph file: " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return hypergraph_from_json(text);
}

void save_hypergraph(const Hypergraph& h, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write hypergraph file: " + path);
    out << to_json(h) << "\n";
}

}  // namespace relturan
