#include "logsurf/boundary.hpp"

#include "logsurf/error.hpp"

namespace logsurf {

BoundarySplit semistable_part(const CurveConfig& config, const std::set<std::string>& delta) {
  std::vector<bool> in(config.size(), false);
  for (const auto& name : delta) in[config.index_of(name)] = true;

  // Removal only lowers the counts of the others, so the fixpoint does not
  // depend on the order of discards.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < config.size(); ++i) {
      if (!in[i] || config.curves[i].pa > 0) continue;
      long long meets = 0;
      for (std::size_t j = 0; j < config.size(); ++j)
        if (j != i && in[j]) meets += config.gram[i][j];
      if (meets < 2) {
        in[i] = false;
        changed = true;
      }
    }
  }

  BoundarySplit out;
  std::set<std::string> kept;
  for (std::size_t i = 0; i < config.size(); ++i) {
    const auto& name = config.curves[i].name;
    if (in[i]) {
      out.semistable.push_back(name);
      kept.insert(name);
    } else if (delta.count(name)) {
      out.complement.push_back(name);
    }
  }
  for (auto& comp : connected_components(config, kept)) {
    const Rational pa = pa_of(config, QDivisor::sum_of(comp));
    out.components.push_back({std::move(comp), pa});
  }
  return out;
}

Rational Tower::lower_bound(const Rational& base_volume) const {
  return base_volume - b * b / from_int(n);
}

Tower tower(const CurveConfig& config, const std::string& c_name, const std::string& e_name,
            const QDivisor& base_class, const std::set<std::string>& boundary, const Rational& b,
            int n, const std::string& prefix) {
  if (n < 1) throw Error("invalid-argument", "tower needs n >= 1");
  if (config.meet(c_name, e_name) < 1) throw Error("invalid-argument", c_name + " does not meet " + e_name);

  std::vector<BlowupStep> steps;
  std::string previous = e_name;
  for (int k = 1; k <= n; ++k) {
    const std::string name = prefix + std::to_string(k);
    steps.push_back({{{c_name, 1}, {previous, 1}}, name, k < n});
    previous = name;
  }
  History history(config, std::move(steps));
  QDivisor cls = total_transform(history, base_class) + boundary_adjustment(history, boundary);
  return Tower{std::move(history), std::move(cls), b, n};
}

} // namespace logsurf
