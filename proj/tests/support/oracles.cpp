#include "oracles.hpp"

#include <string>

namespace oracle {

Integer cofactor_det(const Matrix& m) {
  const auto n = m.size();
  if (n == 0) return 1;
  if (n == 1) return Integer(static_cast<long>(m[0][0]));
  Integer acc = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    Matrix minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<long long> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(std::move(row));
    }
    const Integer term = Integer(static_cast<long>(m[0][c])) * cofactor_det(minor);
    acc += (c % 2 == 0) ? term : Integer(-term);
  }
  return acc;
}

Matrix submatrix(const Matrix& m, const std::vector<std::size_t>& idx) {
  Matrix out(idx.size(), std::vector<long long>(idx.size()));
  for (std::size_t r = 0; r < idx.size(); ++r)
    for (std::size_t c = 0; c < idx.size(); ++c) out[r][c] = m[idx[r]][idx[c]];
  return out;
}

bool negative_definite_by_minors(const Matrix& m) {
  for (std::size_t k = 1; k <= m.size(); ++k) {
    std::vector<std::size_t> lead;
    for (std::size_t i = 0; i < k; ++i) lead.push_back(i);
    const int s = sgn(cofactor_det(submatrix(m, lead)));
    if (s != (k % 2 == 1 ? -1 : 1)) return false;
  }
  return true;
}

std::optional<std::vector<Rational>> gauss_jordan(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const auto n = a.size();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[k], a[p]);
    std::swap(b[k], b[p]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == k || a[r][k] == 0) continue;
      const Rational f = a[r][k] / a[k][k];
      for (std::size_t c = k; c < n; ++c) a[r][c] -= f * a[k][c];
      b[r] -= f * b[k];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= a[i][i];
  return b;
}

Rational dense_pairing(const Matrix& gram, const std::vector<Rational>& x, const std::vector<Rational>& y) {
  Rational acc = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) acc += x[i] * y[j] * Rational(static_cast<long>(gram[i][j]));
  return acc;
}

namespace {

std::vector<Rational> unit(std::size_t n, std::size_t i) {
  std::vector<Rational> e(n);
  e[i] = 1;
  return e;
}

} // namespace

std::vector<std::string> check_decomposition(const Matrix& gram, const std::vector<Rational>& d,
                                             const std::vector<Rational>& p, const std::vector<Rational>& n) {
  std::vector<std::string> out;
  const auto size = d.size();
  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < size; ++i) {
    if (p[i] + n[i] != d[i]) out.push_back("P + N != D at " + std::to_string(i));
    if (n[i] < 0) out.push_back("N < 0 at " + std::to_string(i));
    if (n[i] != 0) support.push_back(i);
    const Rational pc = dense_pairing(gram, p, unit(size, i));
    if (pc < 0) out.push_back("P not nef on " + std::to_string(i));
    if (n[i] != 0 && pc != 0) out.push_back("P.N_i != 0 at " + std::to_string(i));
  }
  if (!negative_definite_by_minors(submatrix(gram, support))) out.push_back("support not negative definite");
  return out;
}

std::vector<Decomposition> all_decompositions(const Matrix& gram, const std::vector<Rational>& d) {
  const auto n = d.size();
  std::vector<Decomposition> found;
  for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1UL << i)) s.push_back(i);
    std::vector<std::vector<Rational>> a(s.size(), std::vector<Rational>(s.size()));
    std::vector<Rational> rhs(s.size());
    for (std::size_t r = 0; r < s.size(); ++r) {
      for (std::size_t c = 0; c < s.size(); ++c) a[r][c] = Rational(static_cast<long>(gram[s[r]][s[c]]));
      rhs[r] = dense_pairing(gram, d, unit(n, s[r]));
    }
    const auto x = gauss_jordan(a, rhs);
    if (!x) continue;
    Decomposition cand{d, std::vector<Rational>(n)};
    for (std::size_t r = 0; r < s.size(); ++r) {
      cand.negative[s[r]] = (*x)[r];
      cand.positive[s[r]] -= (*x)[r];
    }
    if (!check_decomposition(gram, d, cand.positive, cand.negative).empty()) continue;
    bool seen = false;
    for (const auto& f : found) seen = seen || f.positive == cand.positive;
    if (!seen) found.push_back(std::move(cand));
  }
  return found;
}

} // namespace oracle
