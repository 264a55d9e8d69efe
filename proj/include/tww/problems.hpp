#pragma once
#include <map>
#include <set>
#include <string>
#include <vector>

#include "tww/rational.hpp"
#include "tww/trigraph.hpp"

namespace tww {

struct WmisInstance {
  Graph graph;
  std::vector<Rational> weight;
};

struct SetColoringInstance {
  Graph graph;
  std::vector<int> demand;
};

// Y together with its weights: only listed edges may be used.
struct MsimInstance {
  Graph graph;
  std::map<Edge, Rational> y_weight;
};

struct Star {
  int root = -1;
  std::vector<int> leaves;  // sorted
  bool operator==(const Star&) const = default;
};

struct StarForestInstance {
  Graph graph;
  std::vector<Rational> weight;
  std::set<Edge> y;
};

// Ordered h-tuple weights. Unlisted tuples fall back to the label-preserving isomorphism
// indicator (or to zero when indicator_default is false).
struct TupleWeights {
  bool indicator_default = true;
  std::map<std::vector<int>, Rational> table;
};

struct AihpInstance {
  Graph host;
  Graph pattern;
  std::vector<int> host_label;
  std::vector<int> pattern_label;
  TupleWeights weights;
};

using PaletteAssignment = std::vector<std::vector<int>>;  // sorted colour ids per vertex

// Feasibility checks; each returns an empty string on success, a reason otherwise.
std::string check_independent(const Graph& g, const std::vector<int>& set);
std::string check_set_coloring(const Graph& g, const std::vector<int>& demand, const PaletteAssignment& colors);
std::string check_induced_matching(const MsimInstance& inst, const std::vector<Edge>& edges);
std::string check_star_forest(const StarForestInstance& inst, const std::vector<Star>& stars);
std::string check_induced_forest(const StarForestInstance& inst, const std::vector<int>& vertices);
std::string check_packing(const AihpInstance& inst, const std::vector<int>& vertices);

Rational mis_value(const WmisInstance& inst, const std::vector<int>& set);
int color_count(const PaletteAssignment& colors);
Rational matching_value(const MsimInstance& inst, const std::vector<Edge>& edges);
Rational star_forest_value(const StarForestInstance& inst, const std::vector<Star>& stars);
// Edges of G[vertices] (the induced forest objective).
Rational induced_edge_count(const Graph& g, const std::vector<int>& vertices);

// Weight of one copy C (a vertex set inducing H): max over label-preserving isomorphisms H -> G[C]
// of the tuple weight of the image tuple. Returns -1 if C does not induce a labelled copy.
Rational copy_weight(const AihpInstance& inst, const std::vector<int>& copy);
// Splits G[vertices] into components and sums copy weights; throws InputError when infeasible.
Rational packing_value(const AihpInstance& inst, const std::vector<int>& vertices);
std::vector<std::vector<int>> components_of(const Graph& g, const std::vector<int>& vertices);

}  // namespace tww
