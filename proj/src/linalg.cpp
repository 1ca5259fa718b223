#include "logsurf/linalg.hpp"

#include <cstddef>
#include <utility>

namespace logsurf::linalg {

namespace {

Integer lcm_of_denominators(const std::vector<Rational>& b) {
  Integer l = 1;
  for (const auto& q : b) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  return l;
}

} // namespace

std::optional<std::vector<Rational>> solve(const IntMatrix& a, const std::vector<Rational>& b) {
  const std::size_t n = a.size();
  if (n == 0) return std::vector<Rational>{};

  // Augmented integer system [A | s*b].
  const Integer scale = lcm_of_denominators(b);
  IntMatrix m(n, std::vector<Integer>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a[i][j];
    Rational scaled = b[i] * scale;
    m[i][n] = scaled.get_num();
  }

  Integer prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    for (std::size_t r = k + 1; r < n; ++r)
      if (abs(m[r][k]) > abs(m[pivot][k])) pivot = r;
    if (m[pivot][k] == 0) return std::nullopt;
    std::swap(m[k], m[pivot]);
    for (std::size_t r = k + 1; r < n; ++r) {
      for (std::size_t c = k + 1; c <= n; ++c) {
        m[r][c] = m[r][c] * m[k][k] - m[r][k] * m[k][c];
        mpz_divexact(m[r][c].get_mpz_t(), m[r][c].get_mpz_t(), prev.get_mpz_t());
      }
      m[r][k] = 0;
    }
    prev = m[k][k];
  }

  std::vector<Rational> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational acc(m[i][n]);
    for (std::size_t j = i + 1; j < n; ++j) acc -= Rational(m[i][j]) * x[j];
    x[i] = acc / Rational(m[i][i]);
    x[i].canonicalize();
  }
  for (auto& xi : x) {
    xi /= Rational(scale);
    xi.canonicalize();
  }
  return x;
}

Integer determinant(IntMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m[pivot][k] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      std::swap(m[k], m[pivot]);
      sign = -sign;
    }
    for (std::size_t r = k + 1; r < n; ++r) {
      for (std::size_t c = k + 1; c < n; ++c) {
        m[r][c] = m[r][c] * m[k][k] - m[r][k] * m[k][c];
        mpz_divexact(m[r][c].get_mpz_t(), m[r][c].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

bool negative_definite(const IntMatrix& a) {
  // Bareiss without row exchanges: after k steps m[k][k] is the (k+1)-th
  // leading principal minor.
  IntMatrix m = a;
  const std::size_t n = m.size();
  Integer prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    const int want = (k % 2 == 0) ? -1 : 1;
    if (sgn(m[k][k]) != want) return false;
    for (std::size_t r = k + 1; r < n; ++r) {
      for (std::size_t c = k + 1; c < n; ++c) {
        m[r][c] = m[r][c] * m[k][k] - m[r][k] * m[k][c];
        mpz_divexact(m[r][c].get_mpz_t(), m[r][c].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m[k][k];
  }
  return true;
}

Signature inertia(const IntMatrix& a) {
  const std::size_t n = a.size();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a[i][j];

  Signature sig;
  std::size_t k = 0;
  while (k < n) {
    // Bring a nonzero diagonal entry to position k.
    std::size_t p = k;
    while (p < n && m[p][p] == 0) ++p;
    if (p == n) {
      // Zero diagonal: if some m[k..][j] off-diagonal is nonzero, add row/col
      // j to row/col i (a congruence) to make a nonzero diagonal entry.
      bool fixed = false;
      for (std::size_t i = k; i < n && !fixed; ++i)
        for (std::size_t j = i + 1; j < n && !fixed; ++j)
          if (m[i][j] != 0) {
            for (std::size_t c = 0; c < n; ++c) m[i][c] += m[j][c];
            for (std::size_t r = 0; r < n; ++r) m[r][i] += m[r][j];
            p = i;
            fixed = true;
          }
      if (!fixed) {
        sig.zero += n - k;
        break;
      }
    }
    std::swap(m[k], m[p]);
    for (auto& row : m) std::swap(row[k], row[p]);

    const Rational pivot = m[k][k];
    (pivot > 0 ? sig.positive : sig.negative) += 1;
    for (std::size_t r = k + 1; r < n; ++r) {
      if (m[r][k] == 0) continue;
      const Rational f = m[r][k] / pivot;
      for (std::size_t c = k; c < n; ++c) m[r][c] -= f * m[k][c];
    }
    for (std::size_t c = k + 1; c < n; ++c) m[k][c] = 0;
    for (std::size_t r = k + 1; r < n; ++r) m[r][k] = 0;
    ++k;
  }
  return sig;
}

} // namespace logsurf::linalg
