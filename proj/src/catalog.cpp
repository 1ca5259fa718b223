#include "logsurf/catalog.hpp"

#include "catalog_data.hpp"
#include "logsurf/boundary.hpp"
#include "logsurf/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <exception>

namespace logsurf::catalog {

namespace {

std::string f(int i) { return "F" + std::to_string(i); }

void chain(ConfigBuilder& b, int first, int last) {
  for (int i = first; i < last; ++i) b.meet(f(i), f(i + 1));
}

ConfigBuilder minus_two_curves(int count) {
  ConfigBuilder b;
  for (int i = 1; i <= count; ++i) b.curve(f(i), -2);
  return b;
}

// Fibre curve carrying the tail.
std::string tail_anchor(const FiberType& t) {
  switch (t.kind) {
  case FiberKind::III: return f(2);
  case FiberKind::InStar: return f(t.b + 5);
  case FiberKind::IIStar: return f(8);
  case FiberKind::IIIStar: return f(7);
  case FiberKind::IVStar: return f(5);
  default: return f(1);
  }
}

std::string exceptional(int k) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "G%02d", k);
  return buf;
}

const nlohmann::json& data() {
  static const nlohmann::json j = nlohmann::json::parse(detail::catalog_json());
  return j;
}

std::map<std::string, ExpectedValue> expected_from(const nlohmann::json& j) {
  std::map<std::string, ExpectedValue> out;
  for (const auto& [key, v] : j.items()) out[key] = {v.at(0).get<std::string>(), v.at(1).get<std::string>()};
  return out;
}

int default_pg() { return data().at("pg").at("default").get<int>(); }

QDivisor reduced(const std::vector<std::string>& names) { return QDivisor::sum_of(names); }

// K + E_Y on the resolved surface for a fibre-type entry.
QDivisor fibre_log_class(const History& h, const std::vector<std::string>& boundary) {
  return boundary_adjustment(h, {}) + strict_transform(h, reduced(boundary));
}

// Same loop as mmp_contract_log with the highest name contracted first.
LogContraction contract_log_reverse(const CurveConfig& config, const QDivisor& log_class) {
  LogContraction out{config, log_class, {}};
  while (true) {
    const auto z = zariski_decompose(out.config, out.log_class);
    const auto p_dot = intersections(out.config, z.positive);
    std::vector<std::string> candidates;
    for (const auto& g : minus_one_curves(out.config))
      if (p_dot[out.config.index_of(g)] <= 0) candidates.push_back(g);
    if (candidates.empty()) return out;
    const auto g = *std::max_element(candidates.begin(), candidates.end());
    out.config = contract_minus_one(out.config, g);
    out.log_class.set(g, 0);
    out.contracted.push_back(g);
  }
}

// Chain X1..X10 with Y on X3, X4 the (-1)-curve between two (-3)-curves.
CurveConfig minimal_volume_reference() {
  ConfigBuilder b;
  for (int i = 1; i <= 10; ++i) b.curve("X" + std::to_string(i), i == 4 ? -1 : (i == 3 || i == 5) ? -3 : -2);
  b.curve("Y", -2);
  for (int i = 1; i < 10; ++i) b.meet("X" + std::to_string(i), "X" + std::to_string(i + 1));
  b.meet("X3", "Y");
  return b.build();
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error("invalid-argument", what);
}

} // namespace

// ---------------------------------------------------------------------------
// Fibre types

std::string FiberType::label() const {
  switch (kind) {
  case FiberKind::In: return "I_b(" + std::to_string(b) + ")";
  case FiberKind::II: return "II";
  case FiberKind::III: return "III";
  case FiberKind::IV: return "IV";
  case FiberKind::I0Star: return "I_0*";
  case FiberKind::InStar: return "I_b*(" + std::to_string(b) + ")";
  case FiberKind::IIStar: return "II*";
  case FiberKind::IIIStar: return "III*";
  case FiberKind::IVStar: return "IV*";
  }
  return {};
}

FiberType parse_fiber(std::string_view label) {
  auto indexed = [&](std::string_view prefix) -> std::optional<int> {
    if (label.size() < prefix.size() + 3 || label.substr(0, prefix.size()) != prefix) return std::nullopt;
    if (label[prefix.size()] != '(' || label.back() != ')') return std::nullopt;
    const auto digits = label.substr(prefix.size() + 1, label.size() - prefix.size() - 2);
    if (digits.empty() || digits.size() > 6 ||
        !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
      return std::nullopt;
    return std::stoi(std::string(digits));
  };
  if (auto b = indexed("I_b*")) return {FiberKind::InStar, *b};
  if (auto b = indexed("I_b")) return {FiberKind::In, *b};
  if (label == "II") return {FiberKind::II, 0};
  if (label == "III") return {FiberKind::III, 0};
  if (label == "IV") return {FiberKind::IV, 0};
  if (label == "I_0*") return {FiberKind::I0Star, 0};
  if (label == "II*") return {FiberKind::IIStar, 0};
  if (label == "III*") return {FiberKind::IIIStar, 0};
  if (label == "IV*") return {FiberKind::IVStar, 0};
  throw Error("invalid-fiber", "unknown fibre label " + std::string(label));
}

CurveConfig kodaira_config(const FiberType& type, bool with_tail) {
  ConfigBuilder b;
  switch (type.kind) {
  case FiberKind::In:
    if (type.b < 1) throw Error("invalid-fiber", "I_b needs b >= 1");
    if (type.b == 1) {
      b.curve(f(1), 0, 1);
    } else {
      b = minus_two_curves(type.b);
      chain(b, 1, type.b);
      b.meet(f(type.b), f(1));
    }
    break;
  case FiberKind::II:
    b.curve(f(1), 0, 1);
    break;
  case FiberKind::III:
    b = minus_two_curves(2);
    b.meet(f(1), f(2), 2);
    break;
  case FiberKind::IV:
    b = minus_two_curves(3);
    b.meet(f(1), f(2)).meet(f(1), f(3)).meet(f(2), f(3));
    break;
  case FiberKind::I0Star:
    b = minus_two_curves(5);
    for (int i = 2; i <= 5; ++i) b.meet(f(1), f(i));
    break;
  case FiberKind::InStar: {
    if (type.b < 0) throw Error("invalid-fiber", "I_b* needs b >= 0");
    const int k = type.b + 1;
    b = minus_two_curves(k + 4);
    chain(b, 1, k);
    b.meet(f(1), f(k + 1)).meet(f(1), f(k + 2)).meet(f(k), f(k + 3)).meet(f(k), f(k + 4));
    break;
  }
  case FiberKind::IIStar:
    b = minus_two_curves(9);
    chain(b, 1, 8);
    b.meet(f(3), f(9));
    break;
  case FiberKind::IIIStar:
    b = minus_two_curves(8);
    chain(b, 1, 7);
    b.meet(f(4), f(8));
    break;
  case FiberKind::IVStar:
    b = minus_two_curves(7);
    chain(b, 1, 5);
    b.meet(f(3), f(6)).meet(f(6), f(7));
    break;
  }
  if (with_tail) b.curve("T", -2).meet(tail_anchor(type), "T");
  return b.build();
}

std::vector<BlowupStep> resolution_script(const FiberType& type) {
  std::vector<BlowupStep> steps;
  auto add = [&](std::vector<Branch> branches) {
    steps.push_back({std::move(branches), exceptional(static_cast<int>(steps.size()) + 1), false});
  };
  const auto anchor = tail_anchor(type);
  switch (type.kind) {
  case FiberKind::II:
    add({{f(1), 2}});
    add({{f(1), 1}, {exceptional(1), 1}});
    add({{f(1), 1}, {exceptional(1), 1}, {exceptional(2), 1}});
    add({{anchor, 1}, {"T", 1}});
    return steps;
  case FiberKind::III:
    add({{f(1), 1}, {f(2), 1}});
    add({{f(1), 1}, {f(2), 1}, {exceptional(1), 1}});
    add({{anchor, 1}, {"T", 1}});
    return steps;
  case FiberKind::IV:
    add({{f(1), 1}, {f(2), 1}, {f(3), 1}});
    add({{anchor, 1}, {"T", 1}});
    return steps;
  case FiberKind::In:
    if (type.b == 1) {
      add({{f(1), 2}});
      add({{anchor, 1}, {"T", 1}});
      return steps;
    }
    break;
  default:
    break;
  }
  // Only nodes: blow up each intersection point once.
  const auto config = kodaira_config(type, true);
  for (std::size_t i = 0; i < config.size(); ++i)
    for (std::size_t j = i + 1; j < config.size(); ++j)
      for (long long k = 0; k < config.gram[i][j]; ++k)
        add({{config.curves[i].name, 1}, {config.curves[j].name, 1}});
  return steps;
}

// ---------------------------------------------------------------------------
// Entries

std::vector<FiberType> table1_types() {
  return {{FiberKind::In, 1},     {FiberKind::In, 2},     {FiberKind::In, 3},      {FiberKind::II, 0},
          {FiberKind::III, 0},    {FiberKind::IV, 0},     {FiberKind::I0Star, 0},  {FiberKind::InStar, 0},
          {FiberKind::InStar, 1}, {FiberKind::InStar, 2}, {FiberKind::IIStar, 0},  {FiberKind::IIIStar, 0},
          {FiberKind::IVStar, 0}};
}

std::vector<std::string> entry_ids() {
  std::vector<std::string> ids;
  for (const auto& t : table1_types()) ids.push_back(t.label());
  for (const auto& id : {"143-route-a", "25-84", "rational", "tower-seed"}) ids.emplace_back(id);
  return ids;
}

CatalogEntry fiber_entry(const FiberType& type) {
  CatalogEntry e;
  e.id = type.label();
  e.description = "Fibre " + e.id + " with a (-2)-tail, resolved to normal crossings";
  e.base = kodaira_config(type, true);
  e.script = resolution_script(type);
  e.boundary = e.base.names();
  const auto& fibres = data().at("fibres");
  if (fibres.contains(e.id)) e.expected = expected_from(fibres.at(e.id));
  e.pg_annotation = default_pg();
  return e;
}

namespace {

CatalogEntry route_a_entry() {
  CatalogEntry e;
  e.id = "143-route-a";
  e.description = "II* with tail, one blow-up at the node between F3 and F4";
  e.base = kodaira_config({FiberKind::IIStar, 0}, true);
  e.script = {{{{f(3), 1}, {f(4), 1}}, "G", false}};
  e.boundary = e.base.names();
  e.expected = expected_from(data().at("entries").at(e.id));
  e.pg_annotation = default_pg();
  return e;
}

CurveConfig plane_cubic_and_lines(int lines) {
  ConfigBuilder b;
  b.curve("C", 9, 1);
  for (int i = 1; i <= lines; ++i) b.curve("L" + std::to_string(i), 1);
  for (int i = 1; i <= lines; ++i) {
    b.meet("C", "L" + std::to_string(i), 3);
    for (int j = i + 1; j <= lines; ++j) b.meet("L" + std::to_string(i), "L" + std::to_string(j));
  }
  return b.build();
}

CatalogEntry example_25_84_entry() {
  CatalogEntry e;
  e.id = "25-84";
  e.description = "Cubic and three lines in the plane, L1, L2 and the cubic through one point";
  e.base = plane_cubic_and_lines(3);
  auto& s = e.script;
  s.push_back({{{"C", 1}, {"L1", 1}, {"L2", 1}}, "T0", false});
  for (const std::string l : {"L1", "L2"}) {
    // Two more points of C.L: chains of length 3 and 2 towards C.
    s.push_back({{{"C", 1}, {l, 1}}, l + "a1", true});
    s.push_back({{{"C", 1}, {l + "a1", 1}}, l + "a2", true});
    s.push_back({{{"C", 1}, {l + "a2", 1}}, l + "a3", false});
    s.push_back({{{"C", 1}, {l, 1}}, l + "b1", true});
    s.push_back({{{"C", 1}, {l + "b1", 1}}, l + "b2", false});
  }
  for (int i = 1; i <= 3; ++i) s.push_back({{{"C", 1}, {"L3", 1}}, "X" + std::to_string(i), false});
  for (const std::string l : {"L1", "L2"}) {
    std::string prev = l;
    for (int k = 1; k <= 7; ++k) {
      const std::string name = k == 7 ? (l == "L1" ? "G1" : "G2") : l + "h" + std::to_string(k);
      s.push_back({{{prev, 1}, {"L3", 1}}, name, k < 7});
      prev = name;
    }
  }
  e.boundary = e.base.names();
  e.expected = expected_from(data().at("entries").at(e.id));
  e.pg_annotation = default_pg();
  return e;
}

CatalogEntry rational_entry() {
  CatalogEntry e;
  e.id = "rational";
  e.description = "Cubic and a line in the plane, chains of 7, 3 and 2 blow-ups along the cubic";
  e.base = plane_cubic_and_lines(1);
  for (const auto& [prefix, count] : {std::pair{"A", 7}, std::pair{"B", 3}, std::pair{"D", 2}}) {
    std::string prev = "L1";
    for (int k = 1; k <= count; ++k) {
      const std::string name = prefix + std::to_string(k);
      e.script.push_back({{{"C", 1}, {prev, 1}}, name, false});
      prev = name;
    }
  }
  e.boundary = {"C"};
  e.expected = expected_from(data().at("entries").at(e.id));
  return e;
}

CatalogEntry tower_entry() {
  CatalogEntry e;
  e.id = "tower-seed";
  e.description = "Genus-2 curve C of self-intersection 2 meeting a (-2)-curve E once";
  e.base = ConfigBuilder().curve("C", 2, 2).curve("E", -2).meet("C", "E").build();
  e.boundary = {"C", "E"};
  e.expected = expected_from(data().at("entries").at(e.id));
  e.pg_annotation = default_pg();
  return e;
}

} // namespace

CatalogEntry entry(std::string_view id) {
  if (id == "143-route-a") return route_a_entry();
  if (id == "25-84") return example_25_84_entry();
  if (id == "rational") return rational_entry();
  if (id == "tower-seed") return tower_entry();
  for (const auto& t : table1_types())
    if (t.label() == id) return fiber_entry(t);
  throw Error("unknown-entry", std::string(id));
}

PipelineResult run_min_volume_pipeline(const CatalogEntry& e) {
  History h(e.base, e.script);
  QDivisor cls = fibre_log_class(h, e.boundary);
  auto reduced_model = mmp_contract_log(h.top(), cls);
  Rational vol = volume(reduced_model.config, reduced_model.log_class);
  return {std::move(h), std::move(cls), std::move(reduced_model), vol};
}

Rational min_volume_pipeline(const CatalogEntry& e) { return run_min_volume_pipeline(e).volume; }

std::vector<Table1Row> table1(Execution exec) {
  const auto types = table1_types();
  std::vector<Table1Row> rows(types.size());
  std::vector<std::exception_ptr> errors(types.size());

  auto compute = [&](std::size_t i) {
    try {
      const auto e = fiber_entry(types[i]);
      auto& r = rows[i];
      r.type = types[i];
      r.vol_ey = volume(e.base, reduced(e.boundary));
      r.min_volume = min_volume_pipeline(e);
      r.expected_vol_ey = e.expected.at("vol_ey").value;
      r.expected_min_volume = e.expected.at("min_volume").value;
      r.vol_ey_matches = to_string(r.vol_ey) == r.expected_vol_ey;
      r.min_volume_matches = to_string(r.min_volume) == r.expected_min_volume;
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };

  const auto n = static_cast<long>(types.size());
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < n; ++i) compute(static_cast<std::size_t>(i));
  } else {
    for (long i = 0; i < n; ++i) compute(static_cast<std::size_t>(i));
  }
  for (const auto& err : errors)
    if (err) std::rethrow_exception(err);
  return rows;
}

// ---------------------------------------------------------------------------
// Worked examples

bool minimal_volume_shape(const CurveConfig& config, std::span<const std::string> curves, const std::string& g) {
  std::vector<std::string> all(curves.begin(), curves.end());
  all.push_back(g);
  const auto ref = minimal_volume_reference();
  const auto ref_names = ref.names();
  return dual_graphs_isomorphic(config, all, ref, ref_names);
}

Example143Report example_143() {
  Example143Report r;
  const auto a = route_a_entry();
  History ha(a.base, a.script);
  const QDivisor cls_a = fibre_log_class(ha, a.boundary);
  const auto za = zariski_decompose(ha.top(), cls_a);
  r.route_a_volume = za.volume;
  r.route_a_config = ha.top();
  r.route_a_positive = za.positive;
  r.g_coefficient = cls_a["G"];
  r.route_a_shape = minimal_volume_shape(ha.top(), a.boundary, "G");

  const auto b = fiber_entry({FiberKind::IIStar, 0});
  const auto pb = run_min_volume_pipeline(b);
  r.route_b_volume = pb.volume;
  r.route_b_contracted = pb.reduced.contracted;
  const auto survivors = minus_one_curves(pb.reduced.config);
  r.route_b_shape = survivors.size() == 1 && minimal_volume_shape(pb.reduced.config, b.boundary, survivors.front());

  const auto rev = contract_log_reverse(pb.history.top(), pb.log_class);
  r.route_b_order_independent = rev.config.names() == pb.reduced.config.names() &&
                                rev.config == pb.reduced.config &&
                                volume(rev.config, rev.log_class) == pb.volume;
  return r;
}

Example2584Report example_25_84() {
  const auto e = example_25_84_entry();
  History h(e.base, e.script);
  const std::set<std::string> base_boundary(e.boundary.begin(), e.boundary.end());
  // K + C is trivial on the plane, so K + C + L1 + L2 + L3 pulls back from
  // the class of the three lines.
  const QDivisor lines{{"L1", 1}, {"L2", 1}, {"L3", 1}};
  QDivisor cls = total_transform(h, lines) + boundary_adjustment(h, base_boundary);

  Example2584Report r;
  r.history = h;
  r.log_class = cls;
  r.decomposition = zariski_decompose(h.top(), cls);
  const auto& top = h.top();
  r.volume = r.decomposition.volume;
  r.l1_self = top.self("L1");
  r.l2_self = top.self("L2");
  r.l3_self = top.self("L3");
  r.b_l3 = r.decomposition.positive["L3"];

  for (std::size_t i = 0; i < top.size(); ++i)
    if (top.gram[i][i] != -1) r.boundary.push_back(top.curves[i].name);
  r.semistable = semistable_part(top, {r.boundary.begin(), r.boundary.end()}).semistable;

  // The running boundary of the script must coincide with the non-(-1) curves.
  std::set<std::string> running = base_boundary;
  for (const auto& s : e.script)
    if (s.joins_boundary) running.insert(s.exceptional_name);
  const auto expected_dot = log_intersections(top, reduced(r.boundary));
  r.class_consistent = running == std::set<std::string>(r.boundary.begin(), r.boundary.end()) &&
                       intersections(top, cls) == expected_dot;

  const QDivisor kc = boundary_adjustment(h, {"C"});
  r.kc_on_g1 = kc["G1"];
  r.kc_on_g2 = kc["G2"];
  return r;
}

RationalShapeReport example_rational_shape() {
  const auto e = rational_entry();
  History h(e.base, e.script);
  RationalShapeReport r{h, mmp_contract_disjoint(h.top(), {"C"}), {}};
  const auto& c = r.contraction.config;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c.curves[i].name != "C" && c.gram[i][i] != -1) r.e_curves.push_back(c.curves[i].name);
  r.all_minus_two = std::all_of(r.e_curves.begin(), r.e_curves.end(), [&](const std::string& n) {
    return c.self(n) == -2 && c.curve(n).pa == 0;
  });
  const auto ref = kodaira_config({FiberKind::IIStar, 0}, true);
  const auto ref_names = ref.names();
  r.shape_matches = dual_graphs_isomorphic(c, r.e_curves, ref, ref_names);
  const auto kc = log_intersections(c, QDivisor::of("C"));
  r.k_plus_c_trivial = std::all_of(kc.begin(), kc.end(), [](const Rational& q) { return q == 0; });
  return r;
}

// ---------------------------------------------------------------------------
// Closed-form bounds

Rational tz_bound(long long pg) {
  require(pg >= 1, "tz_bound needs pg >= 1");
  return from_int(pg - 3) + make_rational(4, pg + 1);
}

Rational prop1_volume(long long m, std::span<const long long> mults) {
  require(m >= 1, "m must be positive");
  long long sum = 0;
  Rational extra = 0;
  for (auto mj : mults) {
    require(mj >= 2, "multiplicities must be at least 2");
    sum += mj;
    extra += from_int(mj - 1);
  }
  return from_int(m - 2) + make_rational(4, 2 + m + sum) + extra;
}

Rational noether_stable_bound(long long pg) {
  require(pg >= 0, "pg must be non-negative");
  return make_rational(pg, 143);
}

Rational prop2_bound(long long pg) {
  require(pg >= 0, "pg must be non-negative");
  return from_int(std::max<long long>(1, pg - 2));
}

Rational prop0_step1_bound(long long m) {
  require(m >= 1, "m must be positive");
  return m <= 3 ? make_rational(2, 9) : Rational(1) - make_rational(3, m);
}

GlueResult glue_volumes(std::span<const GlueComponent> components) {
  GlueResult r;
  r.total_volume = 0;
  for (const auto& c : components) {
    require(c.volume >= 0 && c.pg >= 0, "volumes and genera must be non-negative");
    r.total_volume += c.volume;
    r.total_pg += c.pg;
  }
  r.noether_ok = r.total_volume >= noether_stable_bound(r.total_pg);
  if (r.total_pg >= 1) {
    const auto bound = tz_bound(r.total_pg);
    if (r.total_volume <= bound) r.tz_violated_for = bound;
  }
  return r;
}

} // namespace logsurf::catalog
