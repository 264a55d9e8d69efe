#pragma once
#include <vector>

#include "tww/mis_bb.hpp"
#include "tww/problems.hpp"

namespace tww {

// Size limits of the exhaustive solvers. Inputs above a limit are rejected with InputError.
struct OracleLimits {
  int mis_n = 32;
  int setcol_n = 14;
  int setcol_b = 4;
  int msim_n = 22;
  int msim_y = 26;
  int mlisf_n = 18;
  int mief_n = 18;
  int aihp_n = 16;
  int aihp_h = 4;

  // Limits wide enough for the 24-vertex instances of the acceptance corpus.
  static OracleLimits desk();
  // Every vertex-count limit set to n.
  static OracleLimits uniform(int n);
};

struct OracleConfig {
  OracleBudget budget = OracleBudget::from_env();
  OracleLimits limits;
};

struct MisSolution {
  std::vector<int> set;
  Rational value;
};
struct SetColoringSolution {
  PaletteAssignment palettes;
  int colors = 0;
};
struct MatchingSolution {
  std::vector<Edge> edges;
  Rational value;
};
struct StarForestSolution {
  std::vector<Star> stars;
  Rational value;
};
struct VertexSetSolution {
  std::vector<int> vertices;
  Rational value;
};

MisSolution exact_mis(const WmisInstance& inst, const OracleConfig& cfg = {});
SetColoringSolution exact_set_coloring(const SetColoringInstance& inst, const OracleConfig& cfg = {});
MatchingSolution exact_msim(const MsimInstance& inst, const OracleConfig& cfg = {});
StarForestSolution exact_mlisf(const StarForestInstance& inst, const OracleConfig& cfg = {});
VertexSetSolution exact_mief(const StarForestInstance& inst, const OracleConfig& cfg = {});
VertexSetSolution exact_aihp(const AihpInstance& inst, const OracleConfig& cfg = {});

struct WeightedCopy {
  std::vector<int> vertices;  // sorted
  Rational weight;
};
// Every vertex set inducing a labelled copy of the pattern, with its copy weight (lexicographic order).
std::vector<WeightedCopy> enumerate_copies(const AihpInstance& inst);

}  // namespace tww
