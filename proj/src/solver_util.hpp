#pragma once
#include <algorithm>
#include <numeric>
#include <vector>

#include "tww/coloring.hpp"
#include "tww/driver.hpp"
#include "tww/errors.hpp"

namespace tww::detail {

// One recursion level: the balanced partition, its quotient and a colouring of the quotient's red graph.
struct Level {
  BalancedPartitionResult bp;
  Trigraph quotient;
  std::vector<std::vector<int>> classes;  // parts per colour class, increasing
};

inline Level make_level(Driver& drv, const Graph& g, const Source& src, int depth) {
  Level lv;
  lv.bp = drv.partition(g, src, depth);
  lv.quotient = quotient(g, lv.bp.partition);
  lv.classes = color_classes(greedy_degeneracy_coloring(red_graph(lv.quotient)));
  return lv;
}

inline std::vector<int> union_of(const VertexPartition& p, const std::vector<int>& parts) {
  std::vector<int> out;
  for (int i : parts) out.insert(out.end(), p.parts[i].begin(), p.parts[i].end());
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<int> iota_vec(int k) {
  std::vector<int> out(k);
  std::iota(out.begin(), out.end(), 0);
  return out;
}

// Maps sub-instance vertex ids back through `vertices`.
inline std::vector<int> lift_ids(const std::vector<int>& local, const std::vector<int>& vertices) {
  std::vector<int> out;
  out.reserve(local.size());
  for (int v : local) out.push_back(vertices[v]);
  std::sort(out.begin(), out.end());
  return out;
}

inline Rational rmax(const Rational& a, const Rational& b) { return a < b ? b : a; }

// Top-level inputs must be graphs with a sequence over the same vertex set.
inline void require_graph_input(const Graph& g, const ContractionSequence& seq) {
  if (!g.is_graph()) throw InputError("the input must be a graph (no red edges)");
  if (seq.origin != g.n()) throw InputError("sequence origin does not match the graph");
}

}  // namespace tww::detail
