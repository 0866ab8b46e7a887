#pragma once

#include <string>

#include "relturan/hypergraph.hpp"

namespace relturan {

// Interchange format used by every CLI command:
// {"r": int, "n": int, "edges": [[int,...],...], "partition": [[int,...],...] | null}
std::string to_json(const Hypergraph& h);
Hypergraph hypergraph_from_json(const std::string& text);

Hypergraph load_hypergraph(const std::string& path);
void save_hypergraph(const Hypergraph& h, const std::string& path);

}  // namespace relturan
