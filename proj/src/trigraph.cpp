#include "tww/trigraph.hpp"

#include <algorithm>

#include "tww/errors.hpp"

namespace tww {

Trigraph::Trigraph(int n) : n_(n), black_(n, Bits(n)), red_(n, Bits(n)) {
  if (n < 0) throw InputError("negative vertex count");
}

void Trigraph::check_pair(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) {
    throw InputError("vertex pair (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
  }
  if (u == v) throw InputError("self-loop on vertex " + std::to_string(u));
}

void Trigraph::set(int u, int v, Rel r) {
  check_pair(u, v);
  black_[u][v] = black_[v][u] = (r == Rel::Black);
  red_[u][v] = red_[v][u] = (r == Rel::Red);
}

Rel Trigraph::rel(int u, int v) const {
  if (black_[u][v]) return Rel::Black;
  if (red_[u][v]) return Rel::Red;
  return Rel::None;
}

int Trigraph::max_red_degree() const {
  int best = 0;
  for (int u = 0; u < n_; ++u) best = std::max(best, red_degree(u));
  return best;
}

int Trigraph::max_degree() const {
  int best = 0;
  for (int u = 0; u < n_; ++u) best = std::max(best, degree(u));
  return best;
}

static std::vector<Edge> collect(const std::vector<Bits>& rows) {
  std::vector<Edge> out;
  for (std::size_t u = 0; u < rows.size(); ++u) {
    for (auto v = rows[u].find_next(u); v != Bits::npos; v = rows[u].find_next(v)) {
      out.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
  }
  return out;
}

std::vector<Edge> Trigraph::black_edges() const { return collect(black_); }
std::vector<Edge> Trigraph::red_edges() const { return collect(red_); }

std::vector<Edge> Trigraph::edges() const {
  std::vector<Bits> total(black_);
  for (int u = 0; u < n_; ++u) total[u] |= red_[u];
  return collect(total);
}

std::size_t Trigraph::black_count() const {
  std::size_t c = 0;
  for (const auto& row : black_) c += row.count();
  return c / 2;
}

std::size_t Trigraph::red_count() const {
  std::size_t c = 0;
  for (const auto& row : red_) c += row.count();
  return c / 2;
}

int VertexPartition::max_part_size() const {
  std::size_t best = 0;
  for (const auto& p : parts) best = std::max(best, p.size());
  return static_cast<int>(best);
}

VertexPartition VertexPartition::from_parts(int n, std::vector<std::vector<int>> parts) {
  VertexPartition out;
  out.part_of.assign(n, -1);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].empty()) throw InputError("empty part " + std::to_string(i));
    for (int v : parts[i]) {
      if (v < 0 || v >= n) throw InputError("partition references vertex " + std::to_string(v) + " out of range");
      if (out.part_of[v] != -1) throw InputError("vertex " + std::to_string(v) + " appears in two parts");
      out.part_of[v] = static_cast<int>(i);
    }
  }
  for (int v = 0; v < n; ++v) {
    if (out.part_of[v] == -1) throw InputError("vertex " + std::to_string(v) + " not covered by the partition");
  }
  if (n > 0 && parts.empty()) throw InputError("partition has no parts");
  out.parts = std::move(parts);
  return out;
}

VertexPartition VertexPartition::singletons(int n) {
  std::vector<std::vector<int>> parts(n);
  for (int v = 0; v < n; ++v) parts[v] = {v};
  return from_parts(n, std::move(parts));
}

VertexPartition VertexPartition::from_labels(const std::vector<int>& label) {
  std::map<int, int> index;
  std::vector<std::vector<int>> parts;
  for (int v = 0; v < static_cast<int>(label.size()); ++v) {
    auto [it, fresh] = index.emplace(label[v], static_cast<int>(parts.size()));
    if (fresh) parts.emplace_back();
    parts[it->second].push_back(v);
  }
  return from_parts(static_cast<int>(label.size()), std::move(parts));
}

Trigraph quotient(const Trigraph& g, const VertexPartition& p) {
  if (static_cast<int>(p.part_of.size()) != g.n()) throw InputError("partition size does not match the trigraph");
  const int k = p.size();
  std::vector<Bits> mask(k, Bits(g.n()));
  for (int i = 0; i < k; ++i)
    for (int v : p.parts[i]) mask[i].set(v);

  Trigraph q(k);
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      std::size_t black = 0;
      bool red = false;
      for (int u : p.parts[i]) {
        if (g.red_row(u).intersects(mask[j])) {
          red = true;
          break;
        }
        black += (g.black_row(u) & mask[j]).count();
      }
      const std::size_t pairs = p.parts[i].size() * p.parts[j].size();
      if (red || (black > 0 && black < pairs)) {
        q.add_red(i, j);
      } else if (black == pairs) {
        q.add_black(i, j);
      }
    }
  }
  return q;
}

Trigraph cleanup(const Trigraph& g, const ResolutionMap& resolution) {
  Trigraph out(g);
  for (const auto& [key, res] : resolution) {
    const auto [u, v] = key;
    if (u < 0 || v < 0 || u >= g.n() || v >= g.n() || u == v || !g.red(u, v)) {
      throw InputError("resolution key (" + std::to_string(u) + "," + std::to_string(v) + ") is not a red edge");
    }
    switch (res) {
      case Resolution::Black: out.set(u, v, Rel::Black); break;
      case Resolution::Absent: out.set(u, v, Rel::None); break;
      case Resolution::KeepRed: break;
    }
  }
  return out;
}

static Trigraph resolve_all(const Trigraph& g, Resolution res) {
  ResolutionMap m;
  for (const auto& e : g.red_edges()) m.emplace(e, res);
  return cleanup(g, m);
}

Trigraph total_graph(const Trigraph& g) { return resolve_all(g, Resolution::Black); }
Trigraph black_graph(const Trigraph& g) { return resolve_all(g, Resolution::Absent); }

Trigraph red_graph(const Trigraph& g) {
  Trigraph out(g.n());
  for (const auto& [u, v] : g.red_edges()) out.add_black(u, v);
  out.labels = g.labels;
  return out;
}

Views views(const Trigraph& g) { return {red_graph(g), black_graph(g), total_graph(g)}; }

InducedSubtrigraph induced_subtrigraph(const Trigraph& g, const std::vector<int>& vertices) {
  std::vector<int> index(g.n(), -1);
  for (int i = 0; i < static_cast<int>(vertices.size()); ++i) {
    const int v = vertices[i];
    if (v < 0 || v >= g.n()) throw InputError("induced subtrigraph: vertex " + std::to_string(v) + " out of range");
    if (index[v] != -1) throw InputError("induced subtrigraph: duplicate vertex " + std::to_string(v));
    index[v] = i;
  }
  InducedSubtrigraph out{Trigraph(static_cast<int>(vertices.size())), vertices};
  for (int i = 0; i < static_cast<int>(vertices.size()); ++i) {
    for (int j = i + 1; j < static_cast<int>(vertices.size()); ++j) {
      const Rel r = g.rel(vertices[i], vertices[j]);
      if (r != Rel::None) out.graph.set(i, j, r);
    }
  }
  if (!g.labels.empty()) {
    for (int v : vertices) out.graph.labels.push_back(g.labels[v]);
  }
  return out;
}

}  // namespace tww
