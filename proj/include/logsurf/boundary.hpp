#pragma once

#include "logsurf/birational.hpp"
#include "logsurf/lattice.hpp"

#include <set>
#include <string>
#include <vector>

namespace logsurf {

struct ComponentGenus {
  std::vector<std::string> curves;
  Rational pa; ///< arithmetic genus of the reduced sum

  bool operator==(const ComponentGenus&) const = default;
};

/// A boundary split into its semistable part and the complement.
struct BoundarySplit {
  std::vector<std::string> semistable; ///< C, in curve order
  std::vector<std::string> complement; ///< E = boundary - C, in curve order
  std::vector<ComponentGenus> components; ///< connected components of C

  bool operator==(const BoundarySplit&) const = default;
};

/// Discards, until nothing changes, every genus-0 curve meeting the rest of
/// the current set fewer than twice (counted through the Gram entries).
/// Curves of positive genus always stay.
BoundarySplit semistable_part(const CurveConfig& config, const std::set<std::string>& delta);

/// The chain of blow-ups that separates C from E: first the point C.E, then
/// each time the point where C meets the newest exceptional curve.
struct Tower {
  History history;
  /// K + Delta^(n): strict transforms plus G_1..G_{n-1}, the last
  /// exceptional curve excluded.
  QDivisor log_class;
  Rational b; ///< caller-supplied positive-part coefficient of E
  int n = 0;

  /// vol(K + Delta) - b^2 / n.
  Rational lower_bound(const Rational& base_volume) const;
};

/// `base_class` is the class of K + Delta on the base; `boundary` the curves
/// of Delta. Exceptional curves are named `<prefix>1 .. <prefix>n`.
Tower tower(const CurveConfig& config, const std::string& c_name, const std::string& e_name,
            const QDivisor& base_class, const std::set<std::string>& boundary, const Rational& b,
            int n, const std::string& prefix = "G");

} // namespace logsurf
