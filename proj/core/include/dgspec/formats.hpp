#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "dgspec/graph.hpp"

namespace dgspec {

enum class GraphFormat { graph6, edgelist };

std::optional<GraphFormat> parse_format(std::string_view name);
std::string_view to_string(GraphFormat format);

// Inputs declaring more vertices than this are refused with ResourceError
// before anything is allocated.
inline constexpr std::size_t kDefaultMaxParseOrder = std::size_t{1} << 20;

// Standard graph6, one graph per document. An optional ">>graph6<<" header
// and trailing whitespace are accepted. Errors report line 1 and the 1-based
// byte column.
Graph parse_graph6(std::string_view text, std::size_t max_order = kDefaultMaxParseOrder);
std::string to_graph6(const Graph& g);

// "n m" header followed by m lines "u v" with 0-based endpoints. Blank lines
// and lines starting with '#' are skipped.
Graph parse_edgelist(std::string_view text, std::size_t max_order = kDefaultMaxParseOrder);
// Sorted edges, no trailing newline: K_2 is "2 1\n0 1".
std::string to_edgelist(const Graph& g);

Graph parse_graph(std::string_view text, GraphFormat format, std::size_t max_order = kDefaultMaxParseOrder);
std::string emit_graph(const Graph& g, GraphFormat format);

// A document whose first non-blank line contains whitespace is an edge list;
// anything else is taken as graph6.
GraphFormat sniff_format(std::string_view text);

// FNV-1a (64-bit) of the graph6 encoding, as 16 lowercase hex digits.
std::string graph_digest(const Graph& g);

}  // namespace dgspec
