#pragma once
#include <vector>

#include "tww/driver.hpp"
#include "tww/problems.hpp"

namespace tww {

// Recursive entry points. `value` is re-evaluated on the returned solution and `bound` is the
// composed certificate: OPT <= bound * value (maximisation) or value <= bound * OPT (set colouring).
struct MisOut {
  std::vector<int> set;
  Rational value;
  Rational bound = 1;
};
struct ColoringOut {
  PaletteAssignment palettes;
  int colors = 0;
  Rational bound = 1;
};
struct MatchingOut {
  std::vector<Edge> edges;
  Rational value;
  Rational bound = 1;
};
struct StarsOut {
  std::vector<Star> stars;
  Rational value;
  Rational bound = 1;
};
struct PackingOut {
  std::vector<int> vertices;
  Rational value;
  Rational bound = 1;
};

MisOut solve_mis(Driver& drv, const WmisInstance& inst, const Source& src, int depth);
ColoringOut solve_set_coloring(Driver& drv, const SetColoringInstance& inst, const Source& src, int depth);
MatchingOut solve_msim(Driver& drv, const MsimInstance& inst, const Source& src, int depth);
StarsOut solve_mlisf(Driver& drv, const StarForestInstance& inst, const Source& src, int depth);
PackingOut solve_aihp(Driver& drv, const AihpInstance& inst, const Source& src, int depth);

// Lifts per-part palettes through a palette assignment of the parts (one palette per part,
// at least as many colours as the part uses). Throws CertificateViolation on a short palette.
PaletteAssignment lift_coloring(const VertexPartition& partition, const PaletteAssignment& part_palettes,
                                const std::vector<PaletteAssignment>& local);

// Top-level runs: choose the depth, solve, verify feasibility and the reported value.
ApproxResult approx_mis(const WmisInstance& inst, const ContractionSequence& seq, const SolverConfig& cfg);
ApproxResult approx_set_coloring(const SetColoringInstance& inst, const ContractionSequence& seq,
                                 const SolverConfig& cfg);
ApproxResult approx_msim(const MsimInstance& inst, const ContractionSequence& seq, const SolverConfig& cfg);
ApproxResult approx_mlisf(const StarForestInstance& inst, const ContractionSequence& seq, const SolverConfig& cfg);
// Induced forest with the most edges: the star forest solution, certificate times 3.
ApproxResult approx_mief(const StarForestInstance& inst, const ContractionSequence& seq, const SolverConfig& cfg);
ApproxResult approx_aihp(const AihpInstance& inst, const ContractionSequence& seq, const SolverConfig& cfg);

}  // namespace tww
