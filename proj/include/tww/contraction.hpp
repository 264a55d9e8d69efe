#pragma once
#include <vector>

#include "tww/trigraph.hpp"

namespace tww {

struct ContractionStep {
  int u = 0;
  int v = 0;
  int w = 0;  // fresh id, starting at origin and increasing by one per step
  bool operator==(const ContractionStep&) const = default;
};

struct ContractionSequence {
  int origin = 0;  // vertex count of the starting trigraph
  std::vector<ContractionStep> steps;

  bool full() const { return origin == 0 || static_cast<int>(steps.size()) == origin - 1; }
  bool operator==(const ContractionSequence&) const = default;
};

struct WidthReport {
  std::vector<int> per_step;  // max red degree after each step
  int width = 0;              // max over per_step (and the start trigraph)
  int argmax_step = -1;       // first step attaining width, -1 if attained before any step
};

// Contracts u and v. Output vertices: all others in increasing order, then the merged vertex last.
Trigraph apply_contraction(const Trigraph& g, int u, int v);

// Replays a sequence over an id universe [0, origin + steps). Vertex groups track original vertices.
class ContractionState {
 public:
  explicit ContractionState(const Trigraph& g);

  // Throws SequenceError(step_index, ...) on a dead, unknown or stale id.
  void contract(const ContractionStep& step, int step_index);

  int live_count() const { return live_; }
  int max_red_degree() const;
  bool alive(int id) const { return id >= 0 && id < static_cast<int>(alive_.size()) && alive_[id]; }
  const std::vector<int>& group(int id) const { return group_[id]; }
  std::vector<int> live_ids() const;
  Rel rel(int a, int b) const;

 private:
  int next_id_;
  int live_;
  std::vector<bool> alive_;
  std::vector<Bits> black_;
  std::vector<Bits> red_;
  std::vector<std::vector<int>> group_;
};

WidthReport verify_sequence(const Trigraph& g, const ContractionSequence& seq);

// Partition into the `parts` live groups after origin - parts steps; parts ordered by smallest member.
VertexPartition partition_at(const Trigraph& g, const ContractionSequence& seq, int parts);

// Contraction forest leaf order: children visited in (u, v) order, roots by increasing id.
std::vector<int> contraction_leaf_order(const ContractionSequence& seq);

}  // namespace tww
