#pragma once
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tww/contraction.hpp"
#include "tww/rational.hpp"
#include "tww/trigraph.hpp"

namespace tww {

// Everything a graph file may carry. Absent lines leave the defaults.
struct InstanceData {
  Trigraph graph;
  std::vector<Rational> vertex_weight;    // `w v q`, default 1
  std::vector<int> demand;                // `d v k`, default 1
  std::map<Edge, Rational> edge_weight;   // `ew u v q`, default 1 for unlisted edges
  std::optional<std::set<Edge>> prescribed;  // `y u v`; nullopt means every edge
  std::vector<int> host_label;            // `g v k`, default 0
  std::map<int, int> pattern_label;       // `gh v k`, pattern vertex -> label
  std::map<std::vector<int>, Rational> tuple_weight;  // `tw v1 .. vh q`

  Rational edge_weight_of(int u, int v) const;
  bool in_prescribed(int u, int v) const;
  std::vector<Edge> prescribed_edges() const;  // Y as a sorted list (all edges when unset)
};

InstanceData read_instance(std::istream& in);
InstanceData read_instance_file(const std::string& path);
void write_instance(std::ostream& out, const InstanceData& data);

ContractionSequence read_sequence(std::istream& in);
ContractionSequence read_sequence_file(const std::string& path);
void write_sequence(std::ostream& out, const ContractionSequence& seq);

// Plain graph file with only `b`/`r` lines.
void write_trigraph(std::ostream& out, const Trigraph& g);

}  // namespace tww
