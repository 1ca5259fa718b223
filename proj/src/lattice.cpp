#include "logsurf/lattice.hpp"

#include "logsurf/error.hpp"
#include "logsurf/linalg.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace logsurf {

// ---------------------------------------------------------------------------
// CurveConfig

std::optional<std::size_t> CurveConfig::find(std::string_view name) const {
  for (std::size_t i = 0; i < curves.size(); ++i)
    if (curves[i].name == name) return i;
  return std::nullopt;
}

std::size_t CurveConfig::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw Error("unknown-curve", std::string(name));
}

long long CurveConfig::self(std::string_view name) const {
  const auto i = index_of(name);
  return gram[i][i];
}

long long CurveConfig::meet(std::string_view a, std::string_view b) const {
  return gram[index_of(a)][index_of(b)];
}

std::vector<std::string> CurveConfig::names() const {
  std::vector<std::string> out;
  out.reserve(curves.size());
  for (const auto& c : curves) out.push_back(c.name);
  return out;
}

ConfigBuilder& ConfigBuilder::curve(std::string name, long long self_intersection, long long pa) {
  if (config_.find(name)) throw Error("duplicate-curve", name);
  config_.curves.push_back({std::move(name), pa, 2 * pa - 2 - self_intersection});
  for (auto& row : config_.gram) row.push_back(0);
  config_.gram.emplace_back(config_.curves.size(), 0);
  config_.gram.back().back() = self_intersection;
  return *this;
}

ConfigBuilder& ConfigBuilder::meet(std::string_view a, std::string_view b, long long m) {
  const auto i = config_.index_of(a);
  const auto j = config_.index_of(b);
  if (i == j) throw Error("invalid-argument", "meet needs two distinct curves");
  config_.gram[i][j] += m;
  config_.gram[j][i] += m;
  return *this;
}

ConfigBuilder& ConfigBuilder::tracked_complete(bool flag) {
  config_.assume_tracked_complete = flag;
  return *this;
}

// ---------------------------------------------------------------------------
// QDivisor

QDivisor::QDivisor(std::initializer_list<std::pair<const std::string, Rational>> init) {
  for (const auto& [name, q] : init) add(name, q);
}

QDivisor QDivisor::of(std::string name, const Rational& coeff) {
  QDivisor d;
  d.set(name, coeff);
  return d;
}

QDivisor QDivisor::sum_of(std::span<const std::string> names) {
  QDivisor d;
  for (const auto& n : names) d.add(n, 1);
  return d;
}

Rational QDivisor::operator[](std::string_view name) const {
  auto it = coeffs_.find(std::string(name));
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void QDivisor::set(const std::string& name, const Rational& coeff) {
  if (coeff == 0)
    coeffs_.erase(name);
  else
    coeffs_[name] = coeff;
}

void QDivisor::add(const std::string& name, const Rational& coeff) {
  set(name, (*this)[name] + coeff);
}

std::vector<std::string> QDivisor::support() const {
  std::vector<std::string> out;
  for (const auto& [name, q] : coeffs_) out.push_back(name);
  return out;
}

bool QDivisor::is_effective() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const auto& kv) { return kv.second > 0; });
}

QDivisor QDivisor::operator+(const QDivisor& other) const {
  QDivisor out = *this;
  for (const auto& [name, q] : other.coeffs_) out.add(name, q);
  return out;
}

QDivisor QDivisor::operator-(const QDivisor& other) const {
  QDivisor out = *this;
  for (const auto& [name, q] : other.coeffs_) out.add(name, -q);
  return out;
}

QDivisor QDivisor::operator*(const Rational& scale) const {
  QDivisor out;
  if (scale == 0) return out;
  for (const auto& [name, q] : coeffs_) out.coeffs_[name] = q * scale;
  return out;
}

// ---------------------------------------------------------------------------
// Free functions

std::vector<std::string> validate(const CurveConfig& config) {
  std::vector<std::string> out;
  const auto n = config.size();
  if (config.gram.size() != n) {
    out.push_back("gram has " + std::to_string(config.gram.size()) + " rows for " +
                  std::to_string(n) + " curves");
    return out;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (config.gram[i].size() != n) {
      out.push_back("gram row " + std::to_string(i) + " has wrong length");
      return out;
    }

  std::set<std::string> seen;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& c = config.curves[i];
    const std::string label = c.name.empty() ? "#" + std::to_string(i) : c.name;
    if (c.name.empty()) out.push_back("curve " + label + ": empty name");
    else if (!seen.insert(c.name).second) out.push_back("curve " + label + ": duplicate name");
    if (c.pa < 0) out.push_back("curve " + label + ": pa " + std::to_string(c.pa) + " < 0");
    const long long expected = 2 * c.pa - 2 - config.gram[i][i];
    if (c.kdeg != expected)
      out.push_back("curve " + label + ": kdeg " + std::to_string(c.kdeg) +
                    " violates adjunction (expected " + std::to_string(expected) + ")");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto& a = config.curves[i].name;
      const auto& b = config.curves[j].name;
      if (config.gram[i][j] != config.gram[j][i])
        out.push_back("gram[" + a + "][" + b + "] is not symmetric");
      if (config.gram[i][j] < 0 || config.gram[j][i] < 0)
        out.push_back("gram[" + a + "][" + b + "] is negative");
    }
  return out;
}

std::vector<Rational> dense(const CurveConfig& config, const QDivisor& d) {
  std::vector<Rational> v(config.size());
  for (const auto& [name, q] : d.coeffs()) v[config.index_of(name)] = q;
  return v;
}

QDivisor sparse(const CurveConfig& config, std::span<const Rational> coeffs) {
  QDivisor d;
  for (std::size_t i = 0; i < coeffs.size(); ++i) d.set(config.curves[i].name, coeffs[i]);
  return d;
}

std::vector<Rational> intersections(const CurveConfig& config, const QDivisor& d) {
  std::vector<Rational> out(config.size());
  for (const auto& [name, q] : d.coeffs()) {
    const auto j = config.index_of(name);
    for (std::size_t i = 0; i < config.size(); ++i)
      if (config.gram[i][j] != 0) out[i] += q * from_int(config.gram[i][j]);
  }
  return out;
}

Rational pairing(const CurveConfig& config, const QDivisor& d1, const QDivisor& d2) {
  Rational acc = 0;
  for (const auto& [a, qa] : d1.coeffs()) {
    const auto i = config.index_of(a);
    for (const auto& [b, qb] : d2.coeffs()) acc += qa * qb * from_int(config.gram[i][config.index_of(b)]);
  }
  return acc;
}

Rational kdot(const CurveConfig& config, const QDivisor& d) {
  Rational acc = 0;
  for (const auto& [name, q] : d.coeffs()) acc += q * from_int(config.curve(name).kdeg);
  return acc;
}

Rational pa_of(const CurveConfig& config, const QDivisor& d) {
  return 1 + (pairing(config, d, d) + kdot(config, d)) / 2;
}

std::vector<Rational> log_intersections(const CurveConfig& config, const QDivisor& d) {
  auto out = intersections(config, d);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += from_int(config.curves[i].kdeg);
  return out;
}

bool is_negative_definite(const CurveConfig& config, const std::set<std::string>& subset) {
  std::vector<std::size_t> idx;
  for (const auto& name : subset) idx.push_back(config.index_of(name));
  std::sort(idx.begin(), idx.end());
  linalg::IntMatrix m(idx.size(), std::vector<Integer>(idx.size()));
  for (std::size_t r = 0; r < idx.size(); ++r)
    for (std::size_t c = 0; c < idx.size(); ++c) m[r][c] = static_cast<long>(config.gram[idx[r]][idx[c]]);
  return linalg::negative_definite(m);
}

bool is_nef_on_tracked(const CurveConfig& config, const QDivisor& d) {
  const auto v = intersections(config, d);
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q >= 0; });
}

bool divisor_geq(const QDivisor& d, const QDivisor& d2) { return (d - d2).is_effective(); }

Inertia inertia(const CurveConfig& config) {
  linalg::IntMatrix m(config.size(), std::vector<Integer>(config.size()));
  for (std::size_t r = 0; r < config.size(); ++r)
    for (std::size_t c = 0; c < config.size(); ++c) m[r][c] = static_cast<long>(config.gram[r][c]);
  const auto s = linalg::inertia(m);
  return {s.positive, s.negative, s.zero};
}

std::vector<std::vector<std::string>> connected_components(const CurveConfig& config,
                                                           const std::set<std::string>& subset) {
  const auto n = config.size();
  std::vector<bool> in(n, false);
  for (const auto& name : subset) in[config.index_of(name)] = true;

  std::vector<int> comp(n, -1);
  std::vector<std::vector<std::string>> out;
  for (std::size_t s = 0; s < n; ++s) {
    if (!in[s] || comp[s] >= 0) continue;
    const int id = static_cast<int>(out.size());
    std::vector<std::size_t> stack{s};
    std::vector<std::size_t> members;
    comp[s] = id;
    while (!stack.empty()) {
      const auto v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (std::size_t w = 0; w < n; ++w)
        if (w != v && in[w] && comp[w] < 0 && config.gram[v][w] > 0) {
          comp[w] = id;
          stack.push_back(w);
        }
    }
    std::sort(members.begin(), members.end());
    std::vector<std::string> names;
    for (auto v : members) names.push_back(config.curves[v].name);
    out.push_back(std::move(names));
  }
  return out;
}

bool dual_graphs_isomorphic(const CurveConfig& a, std::span<const std::string> a_curves,
                            const CurveConfig& b, std::span<const std::string> b_curves) {
  if (a_curves.size() != b_curves.size()) return false;
  const auto n = a_curves.size();
  std::vector<std::size_t> ia, ib;
  for (const auto& s : a_curves) ia.push_back(a.index_of(s));
  for (const auto& s : b_curves) ib.push_back(b.index_of(s));

  auto signature = [](const CurveConfig& c, const std::vector<std::size_t>& idx, std::size_t v) {
    std::vector<long long> edges;
    for (auto w : idx)
      if (w != v && c.gram[v][w] != 0) edges.push_back(c.gram[v][w]);
    std::sort(edges.begin(), edges.end());
    edges.push_back(c.gram[v][v]);
    edges.push_back(c.curves[v].pa);
    return edges;
  };
  std::vector<std::vector<long long>> sa(n), sb(n);
  for (std::size_t k = 0; k < n; ++k) {
    sa[k] = signature(a, ia, ia[k]);
    sb[k] = signature(b, ib, ib[k]);
  }

  // Backtracking over vertex maps compatible with local signatures.
  std::vector<int> map(n, -1);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> extend = [&](std::size_t k) -> bool {
    if (k == n) return true;
    for (std::size_t t = 0; t < n; ++t) {
      if (used[t] || sa[k] != sb[t]) continue;
      bool ok = true;
      for (std::size_t p = 0; p < k && ok; ++p)
        ok = a.gram[ia[k]][ia[p]] == b.gram[ib[t]][ib[map[p]]];
      if (!ok) continue;
      map[k] = static_cast<int>(t);
      used[t] = true;
      if (extend(k + 1)) return true;
      used[t] = false;
    }
    map[k] = -1;
    return false;
  };
  return extend(0);
}

} // namespace logsurf
