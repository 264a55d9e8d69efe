#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "tww/contraction.hpp"
#include "tww/trigraph.hpp"

namespace tww {

enum Entry : std::uint8_t { kZero = 0, kOne = 1, kRed = 2 };

// Symmetric 0,1,r matrix with a symmetric division into consecutive parts.
// Diagonal entries start at 0 and may turn into r when their zone becomes mixed.
struct NeatlyDividedMatrix {
  int n = 0;
  std::vector<std::uint8_t> entries;  // row-major n*n
  std::vector<int> starts;            // first index of each part; starts[0] == 0 when n > 0
  std::vector<int> vmap;              // row index -> vertex of the conform trigraph

  std::uint8_t at(int i, int j) const { return entries[static_cast<std::size_t>(i) * n + j]; }
  void put(int i, int j, std::uint8_t x) {
    entries[static_cast<std::size_t>(i) * n + j] = x;
    entries[static_cast<std::size_t>(j) * n + i] = x;
  }
  int parts() const { return static_cast<int>(starts.size()); }
  int part_begin(int p) const { return starts[p]; }
  int part_end(int p) const { return p + 1 < parts() ? starts[p + 1] : n; }
  int part_len(int p) const { return part_end(p) - part_begin(p); }
  std::vector<int> part_index() const;  // index -> part
  bool column_equal(int x, int y) const;

  std::string render() const;  // rows of 0/1/r, for diagnostics
};

NeatlyDividedMatrix matrix_from_rows(const std::vector<std::string>& rows);  // '0','1','r'; finest division

// Adjacency matrix of g in the given vertex order (red edges as r), finest division.
NeatlyDividedMatrix adjacency_matrix(const Trigraph& g, const std::vector<int>& order);

bool is_symmetric(const NeatlyDividedMatrix& m);
// Every zone is all-r, or r-free and horizontal or vertical.
bool is_neat(const NeatlyDividedMatrix& m);
bool has_corner(const NeatlyDividedMatrix& m, int r0, int r1, int c0, int c1);  // contiguous 2x2 in [r0,r1)x[c0,c1)
bool is_zone_mixed(const NeatlyDividedMatrix& m, int row_part, int col_part);

int mixed_value(const NeatlyDividedMatrix& m);
int part_size(const NeatlyDividedMatrix& m);
// Most off-diagonal r entries in any row or column.
int red_number(const NeatlyDividedMatrix& m);

// Applies a coarser symmetric division and sets to r every zone holding an r or a 0,1-corner.
NeatlyDividedMatrix coarsen_to(const NeatlyDividedMatrix& m, const std::vector<int>& coarser_starts);

// Removes the given indices from rows and columns; empty parts disappear.
NeatlyDividedMatrix delete_rowcols(const NeatlyDividedMatrix& m, const std::vector<int>& indices);

// Conform matrix in contraction-tree leaf order with the finest division.
NeatlyDividedMatrix finest_conform_matrix(const Trigraph& g, const ContractionSequence& seq);

}  // namespace tww
