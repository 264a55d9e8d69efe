#include "tww/matrix.hpp"

#include <algorithm>

#include "tww/errors.hpp"

namespace tww {

std::vector<int> NeatlyDividedMatrix::part_index() const {
  std::vector<int> out(n);
  for (int p = 0; p < parts(); ++p)
    for (int i = part_begin(p); i < part_end(p); ++i) out[i] = p;
  return out;
}

bool NeatlyDividedMatrix::column_equal(int x, int y) const {
  for (int i = 0; i < n; ++i)
    if (at(i, x) != at(i, y)) return false;
  return true;
}

std::string NeatlyDividedMatrix::render() const {
  std::string out;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out += "01r"[at(i, j)];
    out += '\n';
  }
  return out;
}

NeatlyDividedMatrix matrix_from_rows(const std::vector<std::string>& rows) {
  NeatlyDividedMatrix m;
  m.n = static_cast<int>(rows.size());
  m.entries.assign(static_cast<std::size_t>(m.n) * m.n, kZero);
  for (int i = 0; i < m.n; ++i) {
    if (static_cast<int>(rows[i].size()) != m.n) throw InputError("matrix row has the wrong length");
    for (int j = 0; j < m.n; ++j) {
      const char c = rows[i][j];
      m.entries[static_cast<std::size_t>(i) * m.n + j] = c == '1' ? kOne : c == 'r' ? kRed : kZero;
    }
  }
  for (int i = 0; i < m.n; ++i) {
    m.starts.push_back(i);
    m.vmap.push_back(i);
  }
  return m;
}

NeatlyDividedMatrix adjacency_matrix(const Trigraph& g, const std::vector<int>& order) {
  if (static_cast<int>(order.size()) != g.n()) throw InputError("adjacency matrix order must list every vertex");
  NeatlyDividedMatrix m;
  m.n = g.n();
  m.entries.assign(static_cast<std::size_t>(m.n) * m.n, kZero);
  for (int i = 0; i < m.n; ++i) {
    for (int j = i + 1; j < m.n; ++j) {
      const Rel r = g.rel(order[i], order[j]);
      if (r != Rel::None) m.put(i, j, r == Rel::Black ? kOne : kRed);
    }
    m.starts.push_back(i);
  }
  m.vmap = order;
  return m;
}

bool is_symmetric(const NeatlyDividedMatrix& m) {
  for (int i = 0; i < m.n; ++i)
    for (int j = i + 1; j < m.n; ++j)
      if (m.at(i, j) != m.at(j, i)) return false;
  return true;
}

static bool corner2(std::uint8_t a, std::uint8_t b, std::uint8_t c, std::uint8_t d) {
  // [[a,b],[c,d]] over {0,1}: neither columns equal nor rows equal.
  if (a == kRed || b == kRed || c == kRed || d == kRed) return false;
  const bool horizontal = (a == b) && (c == d);  // columns equal
  const bool vertical = (a == c) && (b == d);    // rows equal
  return !horizontal && !vertical;
}

bool has_corner(const NeatlyDividedMatrix& m, int r0, int r1, int c0, int c1) {
  for (int i = r0; i + 1 < r1; ++i)
    for (int j = c0; j + 1 < c1; ++j)
      if (corner2(m.at(i, j), m.at(i, j + 1), m.at(i + 1, j), m.at(i + 1, j + 1))) return true;
  return false;
}

bool is_zone_mixed(const NeatlyDividedMatrix& m, int rp, int cp) {
  for (int i = m.part_begin(rp); i < m.part_end(rp); ++i)
    for (int j = m.part_begin(cp); j < m.part_end(cp); ++j)
      if (m.at(i, j) != kRed) return false;
  return true;
}

static bool zone_ok(const NeatlyDividedMatrix& m, int rp, int cp) {
  const int r0 = m.part_begin(rp), r1 = m.part_end(rp), c0 = m.part_begin(cp), c1 = m.part_end(cp);
  bool any_red = false, all_red = true;
  for (int i = r0; i < r1; ++i)
    for (int j = c0; j < c1; ++j) {
      if (m.at(i, j) == kRed) any_red = true; else all_red = false;
    }
  if (all_red) return true;
  if (any_red) return false;
  bool horizontal = true, vertical = true;
  for (int i = r0; i < r1 && (horizontal || vertical); ++i)
    for (int j = c0; j < c1; ++j) {
      if (m.at(i, j) != m.at(i, c0)) horizontal = false;
      if (m.at(i, j) != m.at(r0, j)) vertical = false;
    }
  return horizontal || vertical;
}

bool is_neat(const NeatlyDividedMatrix& m) {
  if (m.n == 0) return m.starts.empty();
  if (m.starts.empty() || m.starts[0] != 0) return false;
  for (std::size_t p = 1; p < m.starts.size(); ++p)
    if (m.starts[p] <= m.starts[p - 1] || m.starts[p] >= m.n) return false;
  for (int rp = 0; rp < m.parts(); ++rp)
    for (int cp = 0; cp < m.parts(); ++cp)
      if (!zone_ok(m, rp, cp)) return false;
  return true;
}

int part_size(const NeatlyDividedMatrix& m) {
  int best = 0;
  for (int p = 0; p < m.parts(); ++p) best = std::max(best, m.part_len(p));
  return best;
}

int mixed_value(const NeatlyDividedMatrix& m) {
  const int k = m.parts();
  std::vector<std::vector<bool>> mixed(k, std::vector<bool>(k));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) mixed[a][b] = is_zone_mixed(m, a, b);
  int best = 0;
  for (int p = 0; p < k; ++p) {
    int row_value = 0, col_value = 0;
    for (int q = 0; q < k; ++q) {
      row_value += mixed[p][q];
      col_value += mixed[q][p];
    }
    for (int q = 0; q + 1 < k; ++q) {
      const int boundary = m.part_end(q) - 1;  // last index of part q
      if (!mixed[p][q] && !mixed[p][q + 1] &&
          has_corner(m, m.part_begin(p), m.part_end(p), boundary, boundary + 2)) {
        ++row_value;
      }
      if (!mixed[q][p] && !mixed[q + 1][p] &&
          has_corner(m, boundary, boundary + 2, m.part_begin(p), m.part_end(p))) {
        ++col_value;
      }
    }
    best = std::max({best, row_value, col_value});
  }
  return best;
}

int red_number(const NeatlyDividedMatrix& m) {
  int best = 0;
  for (int i = 0; i < m.n; ++i) {
    int row = 0, col = 0;
    for (int j = 0; j < m.n; ++j) {
      if (j == i) continue;
      row += m.at(i, j) == kRed;
      col += m.at(j, i) == kRed;
    }
    best = std::max({best, row, col});
  }
  return best;
}

NeatlyDividedMatrix coarsen_to(const NeatlyDividedMatrix& m, const std::vector<int>& coarser) {
  if (coarser.empty() || coarser[0] != 0) throw InputError("coarser division must start at 0");
  for (int s : coarser)
    if (std::find(m.starts.begin(), m.starts.end(), s) == m.starts.end()) {
      throw InputError("division is not a coarsening");
    }
  NeatlyDividedMatrix out = m;
  out.starts = coarser;
  for (int rp = 0; rp < out.parts(); ++rp) {
    for (int cp = rp; cp < out.parts(); ++cp) {
      const int r0 = out.part_begin(rp), r1 = out.part_end(rp), c0 = out.part_begin(cp), c1 = out.part_end(cp);
      bool dirty = has_corner(m, r0, r1, c0, c1);
      for (int i = r0; i < r1 && !dirty; ++i)
        for (int j = c0; j < c1 && !dirty; ++j) dirty = m.at(i, j) == kRed;
      if (!dirty) continue;
      for (int i = r0; i < r1; ++i)
        for (int j = c0; j < c1; ++j) out.put(i, j, kRed);
    }
  }
  return out;
}

NeatlyDividedMatrix delete_rowcols(const NeatlyDividedMatrix& m, const std::vector<int>& indices) {
  std::vector<bool> drop(m.n, false);
  for (int i : indices) {
    if (i < 0 || i >= m.n) throw InputError("delete_rowcols: index out of range");
    drop[i] = true;
  }
  std::vector<int> keep;
  for (int i = 0; i < m.n; ++i)
    if (!drop[i]) keep.push_back(i);
  NeatlyDividedMatrix out;
  out.n = static_cast<int>(keep.size());
  out.entries.resize(static_cast<std::size_t>(out.n) * out.n);
  for (int a = 0; a < out.n; ++a)
    for (int b = 0; b < out.n; ++b) out.entries[static_cast<std::size_t>(a) * out.n + b] = m.at(keep[a], keep[b]);
  const auto part = m.part_index();
  int last_part = -1;
  for (int a = 0; a < out.n; ++a) {
    if (part[keep[a]] != last_part) {
      out.starts.push_back(a);
      last_part = part[keep[a]];
    }
    if (!m.vmap.empty()) out.vmap.push_back(m.vmap[keep[a]]);
  }
  return out;
}

NeatlyDividedMatrix finest_conform_matrix(const Trigraph& g, const ContractionSequence& seq) {
  verify_sequence(g, seq);
  return adjacency_matrix(g, contraction_leaf_order(seq));
}

}  // namespace tww
