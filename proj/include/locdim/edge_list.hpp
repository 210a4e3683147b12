#pragma once

#include <iosfwd>
#include <string>

#include "locdim/graph.hpp"

namespace locdim {

/// Edge-list text format: optional first line "n <count>", then one "u v"
/// pair per line; '#' starts a comment. If any vertex token is a bare word,
/// every token is treated as a label and indexed in first-appearance order;
/// otherwise tokens are raw indices.
Graph parse_edge_list(const std::string& text);
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);

/// Writes "n <count>" followed by the sorted edge pairs.
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace locdim
