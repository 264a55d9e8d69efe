#include "tww/contraction.hpp"

#include <algorithm>
#include <functional>

#include "tww/errors.hpp"

namespace tww {

Trigraph apply_contraction(const Trigraph& g, int u, int v) {
  if (u < 0 || v < 0 || u >= g.n() || v >= g.n()) throw InputError("contraction of a vertex out of range");
  if (u == v) throw InputError("contraction of a vertex with itself");
  std::vector<int> keep;
  for (int z = 0; z < g.n(); ++z)
    if (z != u && z != v) keep.push_back(z);
  Trigraph out(g.n() - 1);
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = i + 1; j < keep.size(); ++j) out.set(i, j, g.rel(keep[i], keep[j]));
  const int w = g.n() - 2;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    const Rel a = g.rel(u, keep[i]);
    const Rel b = g.rel(v, keep[i]);
    if (a == Rel::Black && b == Rel::Black) {
      out.set(i, w, Rel::Black);
    } else if (a != Rel::None || b != Rel::None) {
      out.set(i, w, Rel::Red);
    }
  }
  return out;
}

ContractionState::ContractionState(const Trigraph& g) : next_id_(g.n()), live_(g.n()) {
  const int cap = std::max(1, 2 * g.n() - 1);
  alive_.assign(cap, false);
  black_.assign(cap, Bits(cap));
  red_.assign(cap, Bits(cap));
  group_.assign(cap, {});
  for (int u = 0; u < g.n(); ++u) {
    alive_[u] = true;
    group_[u] = {u};
    for (int v = 0; v < g.n(); ++v) {
      if (g.black(u, v)) black_[u].set(v);
      if (g.red(u, v)) red_[u].set(v);
    }
  }
}

void ContractionState::contract(const ContractionStep& s, int step_index) {
  if (!alive(s.u)) throw SequenceError(step_index, "vertex " + std::to_string(s.u) + " is not live");
  if (!alive(s.v)) throw SequenceError(step_index, "vertex " + std::to_string(s.v) + " is not live");
  if (s.u == s.v) throw SequenceError(step_index, "contracts a vertex with itself");
  if (s.w != next_id_) {
    throw SequenceError(step_index, "fresh id " + std::to_string(s.w) + " expected " + std::to_string(next_id_));
  }
  const int w = s.w;
  Bits black = black_[s.u] & black_[s.v];
  Bits red = (red_[s.u] | red_[s.v] | (black_[s.u] ^ black_[s.v]));
  black.reset(s.u).reset(s.v);
  red.reset(s.u).reset(s.v);
  red -= black;
  for (int id : {s.u, s.v}) {
    for (auto z = black_[id].find_first(); z != Bits::npos; z = black_[id].find_next(z)) black_[z].reset(id);
    for (auto z = red_[id].find_first(); z != Bits::npos; z = red_[id].find_next(z)) red_[z].reset(id);
    black_[id].reset();
    red_[id].reset();
    alive_[id] = false;
  }
  black_[w] = black;
  red_[w] = red;
  for (auto z = black.find_first(); z != Bits::npos; z = black.find_next(z)) black_[z].set(w);
  for (auto z = red.find_first(); z != Bits::npos; z = red.find_next(z)) red_[z].set(w);
  alive_[w] = true;
  group_[w] = group_[s.u];
  group_[w].insert(group_[w].end(), group_[s.v].begin(), group_[s.v].end());
  std::sort(group_[w].begin(), group_[w].end());
  group_[s.u].clear();
  group_[s.v].clear();
  ++next_id_;
  --live_;
}

int ContractionState::max_red_degree() const {
  int best = 0;
  for (std::size_t id = 0; id < alive_.size(); ++id)
    if (alive_[id]) best = std::max(best, static_cast<int>(red_[id].count()));
  return best;
}

std::vector<int> ContractionState::live_ids() const {
  std::vector<int> out;
  for (std::size_t id = 0; id < alive_.size(); ++id)
    if (alive_[id]) out.push_back(static_cast<int>(id));
  return out;
}

Rel ContractionState::rel(int a, int b) const {
  if (black_[a][b]) return Rel::Black;
  if (red_[a][b]) return Rel::Red;
  return Rel::None;
}

static void check_origin(const Trigraph& g, const ContractionSequence& seq) {
  if (seq.origin != g.n()) {
    throw InputError("sequence origin " + std::to_string(seq.origin) + " does not match n = " + std::to_string(g.n()));
  }
  if (g.n() > 0 && static_cast<int>(seq.steps.size()) > g.n() - 1) throw InputError("sequence has too many steps");
}

WidthReport verify_sequence(const Trigraph& g, const ContractionSequence& seq) {
  check_origin(g, seq);
  ContractionState state(g);
  WidthReport report;
  report.width = g.max_red_degree();
  for (std::size_t i = 0; i < seq.steps.size(); ++i) {
    state.contract(seq.steps[i], static_cast<int>(i));
    const int d = state.max_red_degree();
    report.per_step.push_back(d);
    if (d > report.width) {
      report.width = d;
      report.argmax_step = static_cast<int>(i);
    }
  }
  return report;
}

VertexPartition partition_at(const Trigraph& g, const ContractionSequence& seq, int parts) {
  check_origin(g, seq);
  if (parts < 1 || parts > std::max(1, g.n())) throw InputError("partition_at: part count out of range");
  if (g.n() == 0) return VertexPartition{};
  const int steps = g.n() - parts;
  if (steps > static_cast<int>(seq.steps.size())) throw InputError("partition_at: sequence too short");
  ContractionState state(g);
  for (int i = 0; i < steps; ++i) state.contract(seq.steps[i], i);
  std::vector<std::vector<int>> out;
  for (int id : state.live_ids()) out.push_back(state.group(id));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return VertexPartition::from_parts(g.n(), std::move(out));
}

std::vector<int> contraction_leaf_order(const ContractionSequence& seq) {
  const int n = seq.origin;
  const int total = n + static_cast<int>(seq.steps.size());
  std::vector<std::pair<int, int>> children(total, {-1, -1});
  std::vector<bool> has_parent(total, false);
  for (const auto& s : seq.steps) {
    if (s.w < n || s.w >= total || s.u < 0 || s.v < 0 || s.u >= total || s.v >= total) {
      throw InputError("leaf order: malformed step");
    }
    children[s.w] = {s.u, s.v};
    has_parent[s.u] = has_parent[s.v] = true;
  }
  std::vector<int> order;
  std::vector<int> stack;
  for (int root = 0; root < total; ++root) {
    if (has_parent[root]) continue;
    stack.push_back(root);
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      if (x < n) {
        order.push_back(x);
      } else {
        stack.push_back(children[x].second);
        stack.push_back(children[x].first);
      }
    }
  }
  return order;
}

}  // namespace tww
