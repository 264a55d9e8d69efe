#pragma once
#include <cstdint>
#include <optional>
#include <vector>

#include "tww/trigraph.hpp"

namespace tww {

// Greedy colouring in reverse degeneracy order over all edges (black and red) of g.
// Uses at most degeneracy + 1 <= max degree + 1 colours; colours are 0-based.
std::vector<int> greedy_degeneracy_coloring(const Trigraph& g);
int colors_used(const std::vector<int>& coloring);
std::vector<std::vector<int>> color_classes(const std::vector<int>& coloring);

struct EdgeColoring {
  std::vector<Edge> edges;  // lexicographic
  std::vector<int> color;   // parallel to edges
  int colors = 0;
};

// Proper colouring of the square of the line graph: edges sharing an endpoint or joined by an edge differ.
EdgeColoring distance2_edge_coloring(const Trigraph& g);
bool is_distance2_coloring(const Trigraph& g, const EdgeColoring& c);

// Colouring with `colors` colours whose monochromatic components have at most `cap` vertices,
// found by exhaustive backtracking within `node_limit`; nullopt when none is found.
std::optional<std::vector<int>> clustered_coloring(const Trigraph& g, int colors, int cap,
                                                   std::uint64_t node_limit = 2'000'000);

}  // namespace tww
