#pragma once

#include "logsurf/execution.hpp"
#include "logsurf/lattice.hpp"

#include <string>
#include <vector>

namespace logsurf {

/// D = P + N relative to the tracked curves of a configuration.
struct ZariskiResult {
  QDivisor positive;
  QDivisor negative;
  std::vector<std::string> support; ///< curves carrying N, in curve order
  bool big = false;                 ///< P^2 > 0
  Rational volume;                  ///< P^2 when big, else 0

  bool operator==(const ZariskiResult&) const = default;
};

/// Fujita iteration: start from the curves D meets negatively, solve for the
/// negative part on the current support, and grow the support by every curve
/// the trial positive part still meets negatively.
///
/// Throws Error with code "not-effective", "gram-singular",
/// "negative-part-not-effective" or "not-negative-definite".
ZariskiResult zariski_decompose(const CurveConfig& config, const QDivisor& d);

Rational volume(const CurveConfig& config, const QDivisor& d);

/// Independent check: enumerates every subset of tracked curves as a candidate
/// support and keeps the candidates satisfying all decomposition invariants.
/// Limited to 12 curves. Throws "no-valid-decomposition" or "ambiguous".
ZariskiResult zariski_oracle(const CurveConfig& config, const QDivisor& d,
                             Execution exec = Execution::parallel);

/// Descriptions of every violated decomposition invariant of `result` as a
/// decomposition of `d` (nefness, effectivity and definiteness of N,
/// orthogonality P.N_i = 0, P + N = D).
std::vector<std::string> decomposition_violations(const CurveConfig& config, const QDivisor& d,
                                                  const ZariskiResult& result);

} // namespace logsurf
