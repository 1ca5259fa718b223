#pragma once

#include "logsurf/lattice.hpp"

namespace fixtures {

using namespace logsurf;

/// Cuspidal genus-1 curve C1 (self 0) with a (-2)-curve C2 meeting it once.
inline CurveConfig type_ii_pair() {
  return ConfigBuilder().curve("C1", 0, 1).curve("C2", -2).meet("C1", "C2").build();
}

/// Cycle of three (-2)-curves.
inline CurveConfig i3_cycle() {
  return ConfigBuilder().curve("A", -2).curve("B", -2).curve("C", -2).meet("A", "B").meet("B", "C").meet("C", "A").build();
}

/// A (self 1) and B (self -2), disjoint.
inline CurveConfig line_and_minus_two() { return ConfigBuilder().curve("A", 1).curve("B", -2).build(); }

/// Nine (-2)-curves: chain N1..N8 with N9 on N3, the affine E8 diagram.
/// Semi-definite with a one-dimensional kernel; dropping N8 leaves E8.
inline CurveConfig affine_e8() {
  ConfigBuilder b;
  for (int i = 1; i <= 9; ++i) b.curve("N" + std::to_string(i), -2);
  for (int i = 1; i < 8; ++i) b.meet("N" + std::to_string(i), "N" + std::to_string(i + 1));
  b.meet("N3", "N9");
  return b.build();
}

/// Plane cubic C and lines L1, L2 through one point of C.
inline CurveConfig cubic_two_lines() {
  return ConfigBuilder()
      .curve("C", 9, 1)
      .curve("L1", 1)
      .curve("L2", 1)
      .meet("C", "L1", 3)
      .meet("C", "L2", 3)
      .meet("L1", "L2")
      .build();
}

inline std::vector<std::vector<long long>> gram_of(const CurveConfig& c) { return c.gram; }

} // namespace fixtures
