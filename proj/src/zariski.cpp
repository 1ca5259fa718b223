#include "logsurf/zariski.hpp"

#include "logsurf/error.hpp"
#include "logsurf/linalg.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>

namespace logsurf {

namespace {

using Index = std::vector<std::size_t>;

// N supported on `s` with (D - N).C_j = 0 for j in s; nullopt when singular.
std::optional<std::vector<Rational>> solve_on(const CurveConfig& config, const Index& s,
                                              const std::vector<Rational>& d_dot) {
  linalg::IntMatrix g(s.size(), std::vector<Integer>(s.size()));
  std::vector<Rational> rhs(s.size());
  for (std::size_t r = 0; r < s.size(); ++r) {
    for (std::size_t c = 0; c < s.size(); ++c) g[r][c] = static_cast<long>(config.gram[s[r]][s[c]]);
    rhs[r] = d_dot[s[r]];
  }
  auto x = linalg::solve(g, rhs);
  if (!x) return std::nullopt;
  std::vector<Rational> n(config.size());
  for (std::size_t r = 0; r < s.size(); ++r) n[s[r]] = (*x)[r];
  return n;
}

ZariskiResult assemble(const CurveConfig& config, const std::vector<Rational>& d,
                       const std::vector<Rational>& n) {
  std::vector<Rational> p(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) p[i] = d[i] - n[i];
  ZariskiResult r;
  r.positive = sparse(config, p);
  r.negative = sparse(config, n);
  for (std::size_t i = 0; i < n.size(); ++i)
    if (n[i] != 0) r.support.push_back(config.curves[i].name);
  const Rational p2 = pairing(config, r.positive, r.positive);
  r.big = p2 > 0;
  r.volume = r.big ? p2 : Rational(0);
  return r;
}

void require_effective(const QDivisor& d) {
  for (const auto& [name, q] : d.coeffs())
    if (q < 0) throw Error("not-effective", name + " has coefficient " + to_string(q));
}

} // namespace

ZariskiResult zariski_decompose(const CurveConfig& config, const QDivisor& d) {
  require_effective(d);
  const auto dv = dense(config, d);
  const auto d_dot = intersections(config, d);
  const auto n = config.size();

  std::vector<bool> in_s(n, false);
  for (std::size_t i = 0; i < n; ++i) in_s[i] = d_dot[i] < 0;
  std::vector<Rational> neg(n);

  while (true) {
    Index s;
    for (std::size_t i = 0; i < n; ++i)
      if (in_s[i]) s.push_back(i);
    if (s.empty()) break;

    auto x = solve_on(config, s, d_dot);
    if (!x) throw Error("gram-singular", "Gram matrix on a support of " + std::to_string(s.size()) + " curves");
    for (auto i : s)
      if ((*x)[i] < 0)
        throw Error("negative-part-not-effective",
                    config.curves[i].name + " gets coefficient " + to_string((*x)[i]));
    neg = std::move(*x);

    // Curves the trial positive part still meets negatively.
    QDivisor p = d - sparse(config, neg);
    const auto p_dot = intersections(config, p);
    bool grew = false;
    for (std::size_t i = 0; i < n; ++i)
      if (p_dot[i] < 0 && !in_s[i]) {
        in_s[i] = true;
        grew = true;
      }
    if (!grew) break;
  }

  auto result = assemble(config, dv, neg);
  const std::set<std::string> support(result.support.begin(), result.support.end());
  if (!is_negative_definite(config, support))
    throw Error("not-negative-definite", "support of the negative part");
  return result;
}

Rational volume(const CurveConfig& config, const QDivisor& d) { return zariski_decompose(config, d).volume; }

ZariskiResult zariski_oracle(const CurveConfig& config, const QDivisor& d, Execution exec) {
  require_effective(d);
  const auto n = config.size();
  if (n > 12) throw Error("invalid-argument", "oracle is limited to 12 curves");
  const auto dv = dense(config, d);
  const auto d_dot = intersections(config, d);
  const std::int64_t subsets = std::int64_t{1} << n;

  // Per-subset candidate; merged in mask order so both paths agree exactly.
  std::vector<std::optional<ZariskiResult>> found(static_cast<std::size_t>(subsets));
  auto examine = [&](std::int64_t mask) {
    Index s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::int64_t{1} << i)) s.push_back(i);
    auto x = solve_on(config, s, d_dot);
    if (!x) return;
    if (std::any_of(x->begin(), x->end(), [](const Rational& q) { return q < 0; })) return;
    auto r = assemble(config, dv, *x);
    if (decomposition_violations(config, d, r).empty()) found[static_cast<std::size_t>(mask)] = std::move(r);
  };

  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t mask = 0; mask < subsets; ++mask) examine(mask);
  } else {
    for (std::int64_t mask = 0; mask < subsets; ++mask) examine(mask);
  }

  std::optional<ZariskiResult> unique;
  for (auto& f : found) {
    if (!f) continue;
    if (!unique)
      unique = std::move(f);
    else if (!(*unique == *f))
      throw Error("ambiguous", "two distinct decompositions satisfy every invariant");
  }
  if (!unique) throw Error("no-valid-decomposition", "no candidate support works");
  return *unique;
}

std::vector<std::string> decomposition_violations(const CurveConfig& config, const QDivisor& d,
                                                  const ZariskiResult& result) {
  std::vector<std::string> out;
  const auto& p = result.positive;
  const auto& nq = result.negative;
  if (!(p + nq == d)) out.push_back("P + N differs from D");
  const auto p_dot = intersections(config, p);
  for (std::size_t i = 0; i < config.size(); ++i)
    if (p_dot[i] < 0) out.push_back("P." + config.curves[i].name + " = " + to_string(p_dot[i]) + " < 0");
  if (!nq.is_effective()) out.push_back("N is not effective");
  std::set<std::string> support;
  for (const auto& [name, q] : nq.coeffs()) {
    support.insert(name);
    if (p_dot[config.index_of(name)] != 0) out.push_back("P." + name + " != 0 on the support of N");
  }
  if (!is_negative_definite(config, support)) out.push_back("support of N is not negative definite");
  const std::vector<std::string> listed(support.begin(), support.end());
  auto ordered = result.support;
  std::sort(ordered.begin(), ordered.end());
  if (ordered != listed) out.push_back("support list does not match N");
  const Rational p2 = pairing(config, p, p);
  if (result.big != (p2 > 0) || result.volume != (p2 > 0 ? p2 : Rational(0)))
    out.push_back("big/volume inconsistent with P^2");
  return out;
}

} // namespace logsurf
