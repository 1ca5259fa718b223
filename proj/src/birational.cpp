#include "logsurf/birational.hpp"

#include "logsurf/error.hpp"
#include "logsurf/zariski.hpp"

#include <algorithm>

namespace logsurf {

namespace {

void check_step(const CurveConfig& config, const BlowupStep& step) {
  if (step.branches.empty()) throw Error("invalid-step", "no branches through the point");
  if (step.exceptional_name.empty()) throw Error("invalid-step", "empty exceptional name");
  if (config.find(step.exceptional_name))
    throw Error("invalid-step", "name " + step.exceptional_name + " already in use");
  std::set<std::string> seen;
  for (const auto& b : step.branches) {
    if (!config.find(b.curve)) throw Error("invalid-step", "unknown curve " + b.curve);
    if (b.mult < 1) throw Error("invalid-step", b.curve + " has multiplicity " + std::to_string(b.mult));
    if (!seen.insert(b.curve).second) throw Error("invalid-step", "repeated branch " + b.curve);
  }
}

bool is_minus_one(const CurveConfig& config, std::size_t i) {
  return config.gram[i][i] == -1 && config.curves[i].pa == 0 && config.curves[i].kdeg == -1;
}

QDivisor drop(const QDivisor& d, const std::string& name) {
  QDivisor out = d;
  out.set(name, 0);
  return out;
}

} // namespace

CurveConfig blow_up(const CurveConfig& config, const BlowupStep& step) {
  check_step(config, step);
  CurveConfig out = config;
  const auto e = out.size();
  out.curves.push_back({step.exceptional_name, 0, -1});
  for (auto& row : out.gram) row.push_back(0);
  out.gram.emplace_back(e + 1, 0);
  out.gram[e][e] = -1;

  for (const auto& [name, m] : step.branches) {
    const auto i = out.index_of(name);
    auto& c = out.curves[i];
    c.pa -= m * (m - 1) / 2;
    if (c.pa < 0) throw Error("pa-negative", name + " cannot carry a point of multiplicity " + std::to_string(m));
    out.gram[i][i] -= m * m;
    c.kdeg += m;
    out.gram[i][e] = out.gram[e][i] = m;
  }
  for (std::size_t p = 0; p < step.branches.size(); ++p)
    for (std::size_t q = p + 1; q < step.branches.size(); ++q) {
      const auto& a = step.branches[p];
      const auto& b = step.branches[q];
      const auto i = out.index_of(a.curve);
      const auto j = out.index_of(b.curve);
      out.gram[i][j] -= a.mult * b.mult;
      out.gram[j][i] = out.gram[i][j];
      if (out.gram[i][j] < 0)
        throw Error("intersection-negative", a.curve + " and " + b.curve + " do not meet enough at the point");
    }
  return out;
}

CurveConfig contract_minus_one(const CurveConfig& config, std::string_view name) {
  const auto found = config.find(name);
  if (!found || !is_minus_one(config, *found))
    throw Error("not-minus-one-curve", std::string(name));
  const auto g = *found;
  const auto n = config.size();

  CurveConfig out;
  out.assume_tracked_complete = config.assume_tracked_complete;
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < n; ++i)
    if (i != g) keep.push_back(i);
  for (auto i : keep) {
    const long long t = config.gram[i][g];
    auto c = config.curves[i];
    c.pa += t * (t - 1) / 2;
    c.kdeg -= t;
    out.curves.push_back(std::move(c));
  }
  out.gram.assign(keep.size(), std::vector<long long>(keep.size()));
  for (std::size_t r = 0; r < keep.size(); ++r)
    for (std::size_t c = 0; c < keep.size(); ++c)
      out.gram[r][c] = config.gram[keep[r]][keep[c]] + config.gram[keep[r]][g] * config.gram[keep[c]][g];
  return out;
}

std::vector<std::string> minus_one_curves(const CurveConfig& config) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < config.size(); ++i)
    if (is_minus_one(config, i)) out.push_back(config.curves[i].name);
  return out;
}

// ---------------------------------------------------------------------------
// History

History::History(CurveConfig base) : base_(std::move(base)), top_(base_) {}

History::History(CurveConfig base, std::vector<BlowupStep> steps)
    : base_(std::move(base)), steps_(std::move(steps)), top_(base_) {
  for (const auto& s : steps_) top_ = blow_up(top_, s);
}

History History::then(const BlowupStep& step) const {
  History h(*this);
  h.top_ = blow_up(top_, step);
  h.steps_.push_back(step);
  return h;
}

bool History::is_exceptional(std::string_view name) const {
  return std::any_of(steps_.begin(), steps_.end(),
                     [&](const BlowupStep& s) { return s.exceptional_name == name; });
}

QDivisor total_transform(const History& history, const QDivisor& on_base) {
  for (const auto& [name, q] : on_base.coeffs()) history.base().index_of(name);
  QDivisor d = on_base;
  for (const auto& step : history.steps()) {
    Rational c = 0;
    for (const auto& b : step.branches) c += from_int(b.mult) * d[b.curve];
    d.set(step.exceptional_name, c);
  }
  return d;
}

QDivisor strict_transform(const History& history, const QDivisor& on_base) {
  for (const auto& [name, q] : on_base.coeffs()) history.base().index_of(name);
  return on_base;
}

QDivisor pushforward(const History& history, const QDivisor& on_top) {
  QDivisor out;
  for (const auto& [name, q] : on_top.coeffs()) {
    history.top().index_of(name);
    if (!history.is_exceptional(name)) out.set(name, q);
  }
  return out;
}

QDivisor boundary_adjustment(const History& history, const std::set<std::string>& boundary) {
  for (const auto& name : boundary) history.base().index_of(name);
  std::set<std::string> running = boundary;
  QDivisor r;
  for (const auto& step : history.steps()) {
    Rational pulled = 0;
    long long m_b = 0;
    for (const auto& b : step.branches) {
      pulled += from_int(b.mult) * r[b.curve];
      if (running.count(b.curve)) m_b += b.mult;
    }
    r.set(step.exceptional_name, pulled + from_int(1 - m_b + (step.joins_boundary ? 1 : 0)));
    if (step.joins_boundary) running.insert(step.exceptional_name);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Contraction loops

Contraction mmp_contract_disjoint(const CurveConfig& config, const std::set<std::string>& marked) {
  Contraction out{config, {}};
  while (true) {
    auto& c = out.config;
    std::vector<std::string> candidates;
    for (const auto& g : minus_one_curves(c)) {
      if (marked.count(g)) continue;
      const auto gi = c.index_of(g);
      bool disjoint = true;
      for (const auto& m : marked)
        if (auto mi = c.find(m); mi && c.gram[gi][*mi] != 0) disjoint = false;
      if (disjoint) candidates.push_back(g);
    }
    if (candidates.empty()) return out;
    const auto g = *std::min_element(candidates.begin(), candidates.end());
    out.config = contract_minus_one(c, g);
    out.contracted.push_back(g);
  }
}

LogContraction mmp_contract_log(const CurveConfig& config, const QDivisor& log_class) {
  LogContraction out{config, log_class, {}};
  while (true) {
    const auto z = zariski_decompose(out.config, out.log_class);
    const auto p_dot = intersections(out.config, z.positive);
    std::vector<std::string> candidates;
    for (const auto& g : minus_one_curves(out.config))
      if (p_dot[out.config.index_of(g)] <= 0) candidates.push_back(g);
    if (candidates.empty()) return out;
    const auto g = *std::min_element(candidates.begin(), candidates.end());
    out.config = contract_minus_one(out.config, g);
    out.log_class = drop(out.log_class, g);
    out.contracted.push_back(g);
  }
}

} // namespace logsurf
