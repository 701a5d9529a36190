#pragma once

#include <iosfwd>
#include <string>

#include "regspan/bipartite_graph.hpp"

namespace regspan {

/// Edge-list text format: first line `n`, then one `a b` pair per line
/// (0-based A-index and B-index, whitespace-separated). Duplicate pairs are
/// rejected. Throws std::runtime_error on malformed input.
BipartiteGraph read_edge_list(std::istream& in);
BipartiteGraph read_edge_list_file(const std::string& path);

/// Canonical writer: edges sorted by (a, b), so equal graphs serialize to
/// byte-identical files.
void write_edge_list(std::ostream& out, const BipartiteGraph& g);
void write_edge_list_file(const std::string& path, const BipartiteGraph& g);

}  // namespace regspan
