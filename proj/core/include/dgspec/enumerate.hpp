#pragma once

#include <cstddef>
#include <functional>

#include "dgspec/graph.hpp"

namespace dgspec {

// Visits every labeled r-regular graph on n vertices in which vertex 0 is
// adjacent to exactly 1..r. Every isomorphism class of r-regular graphs on n
// vertices appears at least once. Graphs are produced in lexicographic order
// of their edge lists. Returns the number of graphs visited.
//
// n is limited to 32; larger n throws ParameterError.
std::size_t for_each_regular_graph(std::size_t n, std::size_t r, const std::function<void(const Graph&)>& visit);

}  // namespace dgspec
