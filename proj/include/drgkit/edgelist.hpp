#pragma once

#include <iosfwd>
#include <string>

#include "drgkit/graph.hpp"

namespace drgkit {

// Edge-list text format: one edge per line as two 0-indexed base-10 vertex
// ids separated by whitespace.  Blank lines and lines starting with '#' are
// ignored.  An optional leading header line "n <count>" fixes the vertex
// count; otherwise it is 1 + the maximum index seen.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);

// Canonical form: header line, then edges with u < v in ascending order.
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace drgkit
