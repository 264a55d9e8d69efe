#pragma once
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "tww/problems.hpp"
#include "tww/trigraph.hpp"

namespace tww {

struct CompatibleTrigraph {
  Trigraph trigraph;            // vertices are the parts of `part_of`, numbered by first appearance
  std::vector<int> part_of;     // pattern vertex -> trigraph vertex
  Trigraph witness;             // the pattern quotiented by `part_of`
  std::vector<Edge> added_red;  // pairs that are red in `trigraph` but not in `witness`
};

// Every partition of the pattern with every red augmentation of its quotient, one representative per
// orbit of the label-preserving automorphisms of the pattern. Throws InputError when h > cap.
std::vector<CompatibleTrigraph> compatible_trigraphs(const Graph& pattern, const std::vector<int>& pattern_label,
                                                     int cap = 4);

// Rebuilds the witness by resolving the added red pairs and compares.
bool witness_holds(const CompatibleTrigraph& ct);

// Injective maps from the compatible trigraph's vertices to parts that are trigraph isomorphisms onto the
// induced quotient and leave room for every pattern label. Lexicographic order.
std::vector<std::vector<int>> compatible_maps(const Trigraph& quotient, const VertexPartition& partition,
                                              const std::vector<int>& host_label,
                                              const std::vector<int>& pattern_label, const CompatibleTrigraph& ct);

// Calls visit(phi) for every injective phi: V(pattern) -> V(host) with allowed(x, phi(x)) that is an
// isomorphism onto host[phi(V)]. The pattern must be connected.
void for_each_embedding(const Graph& host, const Graph& pattern, const std::function<bool(int, int)>& allowed,
                        const std::function<void(const std::vector<int>&)>& visit);

// The heaviest image tuple of a copy (labels and isomorphism checked), nullopt if the set is not a copy.
std::optional<std::pair<std::vector<int>, Rational>> best_tuple(const AihpInstance& inst, const std::vector<int>& copy);

}  // namespace tww
