#pragma once
#include <cstdint>
#include <optional>

#include "tww/contraction.hpp"
#include "tww/trigraph.hpp"

namespace tww {

struct GeneratedInstance {
  Graph graph;
  ContractionSequence seq;
};

// The 7-vertex example graph on a..g (vertices 0..6) with its width-2 sequence.
GeneratedInstance gen_figure1();

// Random cotree realised as a graph; the sequence contracts modules bottom-up (width 0).
GeneratedInstance gen_cograph(int n, std::uint64_t seed);

// Random splits starting from K1, rejecting any split that pushes a red degree above d.
// Throws std::runtime_error naming the seed when the retry budget runs out.
GeneratedInstance gen_by_uncontraction(int n, int d, std::uint64_t seed);

struct GreedyResult {
  std::optional<ContractionSequence> seq;  // set iff width <= cap
  int width = 0;                           // replayed width of the attempted sequence
  ContractionSequence attempted;
};

// Repeatedly contracts the pair minimising the resulting max red degree
// (ties: fewest red edges afterwards, then lexicographic pair).
GreedyResult greedy_sequence(const Graph& g, int d_cap);

}  // namespace tww
