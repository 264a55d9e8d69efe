#pragma once
#include <boost/dynamic_bitset.hpp>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace tww {

using Bits = boost::dynamic_bitset<std::uint64_t>;
using Edge = std::pair<int, int>;

enum class Rel : std::uint8_t { None = 0, Black = 1, Red = 2 };

// Vertex set [0, n) with disjoint black and red edge sets, stored as dense bit rows.
// A trigraph without red edges is a graph.
class Trigraph {
 public:
  Trigraph() = default;
  explicit Trigraph(int n);

  int n() const { return n_; }

  void set(int u, int v, Rel r);
  void add_black(int u, int v) { set(u, v, Rel::Black); }
  void add_red(int u, int v) { set(u, v, Rel::Red); }

  Rel rel(int u, int v) const;
  bool black(int u, int v) const { return black_[u][v]; }
  bool red(int u, int v) const { return red_[u][v]; }
  bool adjacent(int u, int v) const { return black_[u][v] || red_[u][v]; }

  const Bits& black_row(int u) const { return black_[u]; }
  const Bits& red_row(int u) const { return red_[u]; }
  Bits total_row(int u) const { return black_[u] | red_[u]; }

  int red_degree(int u) const { return static_cast<int>(red_[u].count()); }
  int black_degree(int u) const { return static_cast<int>(black_[u].count()); }
  int degree(int u) const { return red_degree(u) + black_degree(u); }
  int max_red_degree() const;
  int max_degree() const;

  std::vector<Edge> black_edges() const;
  std::vector<Edge> red_edges() const;
  std::vector<Edge> edges() const;  // black and red, lexicographic
  std::size_t black_count() const;
  std::size_t red_count() const;
  bool is_graph() const { return red_count() == 0; }

  bool operator==(const Trigraph& other) const {
    return n_ == other.n_ && black_ == other.black_ && red_ == other.red_;
  }

  // Optional external vertex names, empty when unused.
  std::vector<std::string> labels;

 private:
  void check_pair(int u, int v) const;
  int n_ = 0;
  std::vector<Bits> black_;
  std::vector<Bits> red_;
};

using Graph = Trigraph;

struct VertexPartition {
  std::vector<std::vector<int>> parts;
  std::vector<int> part_of;

  int size() const { return static_cast<int>(parts.size()); }
  int max_part_size() const;

  // Validates disjointness and coverage of [0, n); throws InputError.
  static VertexPartition from_parts(int n, std::vector<std::vector<int>> parts);
  static VertexPartition singletons(int n);
  // Parts are numbered by first appearance of their label in vertex order.
  static VertexPartition from_labels(const std::vector<int>& label);
};

Trigraph quotient(const Trigraph& g, const VertexPartition& p);

enum class Resolution { Black, Absent, KeepRed };
using ResolutionMap = std::map<Edge, Resolution>;  // keys normalised with first < second

Trigraph cleanup(const Trigraph& g, const ResolutionMap& resolution);
Trigraph total_graph(const Trigraph& g);
Trigraph black_graph(const Trigraph& g);
Trigraph red_graph(const Trigraph& g);

struct Views {
  Trigraph red_graph;
  Trigraph black_graph;
  Trigraph total_graph;
};
Views views(const Trigraph& g);

struct InducedSubtrigraph {
  Trigraph graph;
  std::vector<int> vertices;  // new index -> old vertex
};

// Keeps the order of `vertices`; duplicates or out-of-range entries are rejected.
InducedSubtrigraph induced_subtrigraph(const Trigraph& g, const std::vector<int>& vertices);

inline Edge normalized(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

}  // namespace tww
