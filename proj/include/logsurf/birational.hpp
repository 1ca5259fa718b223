#pragma once

#include "logsurf/lattice.hpp"

#include <set>
#include <string>
#include <vector>

namespace logsurf {

/// A curve passing through the blown-up point with its local multiplicity.
struct Branch {
  std::string curve;
  long long mult = 1;

  bool operator==(const Branch&) const = default;
};

/// One point blow-up, described by the curves through the point.
struct BlowupStep {
  std::vector<Branch> branches;
  std::string exceptional_name;
  bool joins_boundary = false; ///< the new curve is added to the running boundary

  bool operator==(const BlowupStep&) const = default;
};

/// Class-level blow-up. The exceptional curve is appended last with self
/// -1, genus 0 and K-degree -1; a branch (C, m) loses m^2 from its self
/// intersection and m(m-1)/2 from its genus, gains m in K-degree, and meets
/// the exceptional curve m times. Two branches lose m*m' from their mutual
/// intersection.
///
/// Throws "invalid-step", "pa-negative" or "intersection-negative".
CurveConfig blow_up(const CurveConfig& config, const BlowupStep& step);

/// Inverse of blow_up for a (-1)-curve of genus 0. Throws "not-minus-one-curve".
CurveConfig contract_minus_one(const CurveConfig& config, std::string_view name);

/// Curves of the surface that are smooth rational (-1)-curves.
std::vector<std::string> minus_one_curves(const CurveConfig& config);

/// A base configuration together with an ordered blow-up sequence. The top
/// configuration is replayed on construction, so a History is always
/// consistent.
class History {
public:
  explicit History(CurveConfig base);
  History(CurveConfig base, std::vector<BlowupStep> steps);

  const CurveConfig& base() const noexcept { return base_; }
  const CurveConfig& top() const noexcept { return top_; }
  const std::vector<BlowupStep>& steps() const noexcept { return steps_; }

  /// A new history with one more step.
  History then(const BlowupStep& step) const;
  bool is_exceptional(std::string_view name) const;

  bool operator==(const History& other) const {
    return base_ == other.base_ && steps_ == other.steps_;
  }

private:
  CurveConfig base_;
  std::vector<BlowupStep> steps_;
  CurveConfig top_;
};

/// Pullback: each new exceptional curve receives sum m * (coefficient of its
/// branch) at the moment of its blow-up.
QDivisor total_transform(const History& history, const QDivisor& on_base);
/// Coefficientwise carry of base curves, no exceptional components.
QDivisor strict_transform(const History& history, const QDivisor& on_base);
/// Drops every exceptional component.
QDivisor pushforward(const History& history, const QDivisor& on_top);

/// R with K_top + B_top = h^*(K_base + B_base) + R, where B is the running
/// boundary: the strict transforms of `boundary` plus every exceptional curve
/// whose step has joins_boundary set. Per step R gains
/// (1 - m_B(p) + [joins]) times the new exceptional curve, m_B(p) being the
/// summed multiplicity of the current boundary at the point.
QDivisor boundary_adjustment(const History& history, const std::set<std::string>& boundary);

struct Contraction {
  CurveConfig config;
  std::vector<std::string> contracted; ///< in contraction order
};

/// Repeatedly contracts a (-1)-curve meeting no marked curve (lowest name first).
Contraction mmp_contract_disjoint(const CurveConfig& config, const std::set<std::string>& marked);

struct LogContraction {
  CurveConfig config;
  QDivisor log_class; ///< pushforward of the supplied K + boundary class
  std::vector<std::string> contracted;
};

/// Contracts (-1)-curves G on which the supplied K + boundary class is
/// trivial after Zariski decomposition, i.e. P.G <= 0 for its positive part
/// P (this includes every G with class.G < 0, which lies in the negative
/// part). Lowest name first; the class is pushed forward after each step.
/// The volume of the class is unchanged by each contraction.
LogContraction mmp_contract_log(const CurveConfig& config, const QDivisor& log_class);

} // namespace logsurf
