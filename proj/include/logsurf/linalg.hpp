#pragma once

#include "logsurf/rational.hpp"

#include <optional>
#include <vector>

namespace logsurf::linalg {

using IntMatrix = std::vector<std::vector<Integer>>;

/// Solves A x = b exactly. The right-hand side is scaled to integers and the
/// system eliminated fraction-free (Bareiss), pivoting on the entry of largest
/// absolute value. Returns nullopt when A is singular.
std::optional<std::vector<Rational>> solve(const IntMatrix& a, const std::vector<Rational>& b);

/// Bareiss determinant.
Integer determinant(IntMatrix a);

/// True iff every leading principal minor d_k of the symmetric matrix has
/// sign (-1)^k. Uses symmetric elimination without pivoting and stops at the
/// first pivot of the wrong sign.
bool negative_definite(const IntMatrix& a);

struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
};
/// Sylvester inertia by congruence diagonalisation over the rationals.
Signature inertia(const IntMatrix& a);

} // namespace logsurf::linalg
