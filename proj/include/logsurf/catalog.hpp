#pragma once

#include "logsurf/birational.hpp"
#include "logsurf/execution.hpp"
#include "logsurf/lattice.hpp"
#include "logsurf/zariski.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace logsurf::catalog {

// ---------------------------------------------------------------------------
// Elliptic fibre configurations

enum class FiberKind { In, II, III, IV, I0Star, InStar, IIStar, IIIStar, IVStar };

/// A Kodaira fibre type. `b` is the index of I_b (b >= 1) and I_b* (b >= 0).
/// I0Star is the D4 fibre with the tail on its central curve; InStar with
/// b = 0 is the same fibre with the tail on a leaf.
struct FiberType {
  FiberKind kind = FiberKind::II;
  int b = 0;

  std::string label() const;
  bool operator==(const FiberType&) const = default;
};

/// Parses labels such as "I_b(3)", "II", "I_0*", "I_b*(1)", "II*".
FiberType parse_fiber(std::string_view label);

/// Reduced fibre, every component with K-degree 0. Fibre curves are named
/// F1, F2, ...; with `with_tail` a (-2)-curve T meeting one fibre curve once
/// is added. Naming per type:
///  - I_b: cycle F1..Fb (I_1 a nodal genus-1 curve), T on F1
///  - II: cuspidal genus-1 curve F1, T on F1
///  - III: F1, F2 tangent (F1.F2 = 2), T on F2
///  - IV: F1, F2, F3 through one point, T on F1
///  - I_0* (tail on centre): centre F1, leaves F2..F5, T on F1
///  - I_b*: chain F1..F(b+1), leaves F(b+2), F(b+3) on F1 and
///    F(b+4), F(b+5) on F(b+1), T on F(b+5)
///  - II*, III*, IV*: the chain runs F1..Fk towards T, the extra branch
///    curves come last (see catalog.cpp).
/// Throws Error("invalid-fiber") on a bad index.
CurveConfig kodaira_config(const FiberType& type, bool with_tail);

/// Blow-ups making the strict transform of fibre + tail a disjoint union of
/// smooth curves: every node once, the cusp of II in three steps, the
/// tangency of III in two, the triple point of IV in one. Exceptional curves
/// are G01, G02, ... and never join the boundary.
std::vector<BlowupStep> resolution_script(const FiberType& type);

// ---------------------------------------------------------------------------
// Scripted entries

struct ExpectedValue {
  std::string value;  ///< exact rational or integer, "p/q"
  std::string origin; ///< "published" or "derived"
};

struct CatalogEntry {
  std::string id;
  std::string description;
  CurveConfig base;
  std::vector<BlowupStep> script;
  std::vector<std::string> boundary; ///< base curves of the boundary (E_Y for fibre rows)
  std::map<std::string, ExpectedValue> expected;
  std::optional<int> pg_annotation;
};

std::vector<std::string> entry_ids();
/// Throws Error("unknown-entry").
CatalogEntry entry(std::string_view id);
/// Fibre-row entry for a given type (id = type label).
CatalogEntry fiber_entry(const FiberType& type);

struct PipelineResult {
  History history{CurveConfig{}};
  QDivisor log_class;     ///< K + E on the resolved surface
  LogContraction reduced; ///< after mmp_contract_log
  Rational volume;
};

/// Replays the entry, forms K + E = boundary_adjustment(h, {}) + strict(E_Y)
/// (valid because K_Y is numerically trivial on the fibre curves), runs
/// mmp_contract_log and takes the volume of the resulting class.
PipelineResult run_min_volume_pipeline(const CatalogEntry& entry);
Rational min_volume_pipeline(const CatalogEntry& entry);

struct Table1Row {
  FiberType type;
  Rational vol_ey;
  Rational min_volume;
  std::string expected_vol_ey;
  std::string expected_min_volume;
  bool vol_ey_matches = false;
  bool min_volume_matches = false;
};

/// Sampled rows: I_b at b = 1,2,3; II; III; IV; I_0*; I_b* at b = 0,1,2;
/// II*; III*; IV*. Rows are independent and evaluated concurrently.
std::vector<Table1Row> table1(Execution exec = Execution::parallel);
std::vector<FiberType> table1_types();

// ---------------------------------------------------------------------------
// Worked examples

struct Example143Report {
  Rational route_a_volume;
  Rational route_b_volume;
  CurveConfig route_a_config;
  QDivisor route_a_positive;
  Rational g_coefficient; ///< coefficient of the exceptional curve in K + E
  bool route_a_shape = false;
  bool route_b_shape = false;
  std::vector<std::string> route_b_contracted;
  /// Contracting in reverse name order gives the same final model and volume.
  bool route_b_order_independent = false;
};
Example143Report example_143();

/// True iff `curves` (the ten E-curves) plus `g` form a chain of ten with one
/// extra curve on the third, `g` a (-1)-curve between two (-3)-curves, every
/// other curve a (-2)-curve.
bool minimal_volume_shape(const CurveConfig& config, std::span<const std::string> curves,
                          const std::string& g);

struct Example2584Report {
  History history{CurveConfig{}};
  QDivisor log_class;
  ZariskiResult decomposition;
  Rational volume;
  long long l1_self = 0;
  long long l2_self = 0;
  long long l3_self = 0;
  Rational b_l3;
  std::vector<std::string> boundary;   ///< every non-(-1) curve of the resolution
  std::vector<std::string> semistable; ///< semistable part of that boundary
  /// class.C_i equals (K + boundary).C_i computed from stored K-degrees.
  bool class_consistent = false;
  /// Coefficients of K + C (C the cubic) on the last curves of the two
  /// chains over L1.L3 and L2.L3.
  Rational kc_on_g1;
  Rational kc_on_g2;
};
Example2584Report example_25_84();

struct RationalShapeReport {
  History history{CurveConfig{}};
  Contraction contraction;
  std::vector<std::string> e_curves;
  bool all_minus_two = false;
  bool shape_matches = false; ///< isomorphic to the II* fibre plus tail
  bool k_plus_c_trivial = false;
};
RationalShapeReport example_rational_shape();

// ---------------------------------------------------------------------------
// Closed-form bounds

/// pg - 3 + 4/(pg + 1); throws Error("invalid-argument") for pg < 1.
Rational tz_bound(long long pg);
/// m - 2 + 4/(2 + m + sum m_j) + sum (m_j - 1); m >= 1, each m_j >= 2.
Rational prop1_volume(long long m, std::span<const long long> mults);
Rational noether_stable_bound(long long pg);
/// max(1, pg - 2).
Rational prop2_bound(long long pg);
/// 2/9 for m <= 3, else 1 - 3/m.
Rational prop0_step1_bound(long long m);

struct GlueComponent {
  Rational volume;
  long long pg = 0;
};

struct GlueResult {
  Rational total_volume;
  long long total_pg = 0;
  bool noether_ok = true; ///< total_volume >= total_pg / 143
  /// Set when total_pg >= 1 and total_volume <= tz_bound(total_pg): the value
  /// of that bound, which the glued surface fails to exceed.
  std::optional<Rational> tz_violated_for;
};
GlueResult glue_volumes(std::span<const GlueComponent> components);

} // namespace logsurf::catalog
