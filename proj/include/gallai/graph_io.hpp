#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "gallai/graph.hpp"

namespace gallai {

// graph6 (McKay). Accepts an optional ">>graph6<<" prefix and a trailing
// newline. Nonzero padding bits are ignored.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

// Edge-list text: first line "n m", then m lines "u v" (0-based). Lines whose
// first non-blank character is '#' are comments. Errors carry line numbers.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

// A graph file is either an edge list or one graph6 line; the first
// non-comment line decides.
Graph read_graph_file(const std::string& path);
Graph parse_graph_text(std::string_view text);

// One graph per non-empty line.
struct Graph6Line {
  std::size_t line_number = 0;
  std::string text;
};
std::vector<Graph6Line> read_graph6_lines(std::istream& in);

}  // namespace gallai
