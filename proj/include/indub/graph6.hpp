#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <string_view>

#include "indub/graph.hpp"

namespace indub {

/// Decodes one graph6 line (no trailing newline needed; an optional
/// ">>graph6<<" prefix is accepted). Throws ParseError with the byte offset
/// of the first offending byte.
Graph parse_graph6(std::string_view text);

/// Canonical graph6 encoding without header or newline.
std::string write_graph6(const Graph& g);

/// Edge-list text: first line "n m", then m lines "u v". Throws ParseError
/// carrying the 1-based line number.
Graph parse_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

/// Reads a single graph, choosing graph6 or edge-list by the first line.
Graph read_graph(std::istream& in);

} // namespace indub
