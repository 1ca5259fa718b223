#include "logsurf/io.hpp"

#include "logsurf/error.hpp"

#include <fstream>

namespace logsurf::io {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

template <class T>
T get_as(const Json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception&) {
    throw InputError(std::string("wrong type for ") + what);
  }
}

Json fraction(const Rational& q) { return to_string(q); }

Json names(const std::vector<std::string>& v) { return Json(v); }

} // namespace

CurveConfig config_from_json(const Json& j) {
  ConfigBuilder b;
  const auto& curves = field(j, "curves");
  if (!curves.is_array()) throw InputError("\"curves\" must be an array");
  try {
    for (const auto& c : curves)
      b.curve(get_as<std::string>(field(c, "name"), "curve name"), get_as<long long>(field(c, "self"), "self"),
              c.contains("pa") ? get_as<long long>(c.at("pa"), "pa") : 0);
    if (j.contains("edges")) {
      if (!j.at("edges").is_array()) throw InputError("\"edges\" must be an array");
      for (const auto& e : j.at("edges")) {
        const auto a = get_as<std::string>(field(e, "a"), "edge end");
        const auto c = get_as<std::string>(field(e, "b"), "edge end");
        b.meet(a, c, e.contains("m") ? get_as<long long>(e.at("m"), "edge multiplicity") : 1);
      }
    }
  } catch (const Error& err) {
    throw InputError(err.what());
  }
  if (j.contains("assume_tracked_complete"))
    b.tracked_complete(get_as<bool>(j.at("assume_tracked_complete"), "assume_tracked_complete"));
  return b.build();
}

Json to_json(const CurveConfig& config) {
  Json curves = Json::array();
  for (std::size_t i = 0; i < config.size(); ++i)
    curves.push_back({{"name", config.curves[i].name}, {"self", config.gram[i][i]}, {"pa", config.curves[i].pa}});
  Json edges = Json::array();
  for (std::size_t i = 0; i < config.size(); ++i)
    for (std::size_t k = i + 1; k < config.size(); ++k)
      if (config.gram[i][k] != 0)
        edges.push_back({{"a", config.curves[i].name}, {"b", config.curves[k].name}, {"m", config.gram[i][k]}});
  return {{"curves", curves}, {"edges", edges}, {"assume_tracked_complete", config.assume_tracked_complete}};
}

QDivisor divisor_from_json(const Json& j) {
  const auto& coeffs = field(j, "coeffs");
  if (!coeffs.is_object()) throw InputError("\"coeffs\" must be an object");
  QDivisor d;
  for (const auto& [name, v] : coeffs.items()) {
    if (v.is_number_integer())
      d.add(name, Rational(Integer(v.get<long>())));
    else
      d.add(name, parse_rational(get_as<std::string>(v, "coefficient")));
  }
  return d;
}

Json to_json(const QDivisor& d) {
  Json coeffs = Json::object();
  for (const auto& [name, q] : d.coeffs()) coeffs[name] = fraction(q);
  return {{"coeffs", coeffs}};
}

std::vector<BlowupStep> script_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("a blow-up script must be an array");
  std::vector<BlowupStep> out;
  for (const auto& s : j) {
    BlowupStep step;
    for (const auto& p : field(s, "point"))
      step.branches.push_back({get_as<std::string>(field(p, "curve"), "branch curve"),
                               p.contains("mult") ? get_as<long long>(p.at("mult"), "mult") : 1});
    step.exceptional_name = get_as<std::string>(field(s, "name"), "exceptional name");
    if (s.contains("joins_boundary")) step.joins_boundary = get_as<bool>(s.at("joins_boundary"), "joins_boundary");
    out.push_back(std::move(step));
  }
  return out;
}

Json to_json(const std::vector<BlowupStep>& script) {
  Json out = Json::array();
  for (const auto& s : script) {
    Json point = Json::array();
    for (const auto& b : s.branches) point.push_back({{"curve", b.curve}, {"mult", b.mult}});
    out.push_back({{"point", point}, {"name", s.exceptional_name}, {"joins_boundary", s.joins_boundary}});
  }
  return out;
}

History history_from_json(const Json& j) {
  History h(config_from_json(field(j, "base")), script_from_json(field(j, "steps")));
  if (j.contains("top") && !(config_from_json(j.at("top")) == h.top()))
    throw InputError("\"top\" does not match the replayed steps");
  return h;
}

Json to_json(const History& history) {
  return {{"base", to_json(history.base())}, {"steps", to_json(history.steps())}, {"top", to_json(history.top())}};
}

Json to_json(const ZariskiResult& r) {
  return {{"positive", to_json(r.positive)},
          {"negative", to_json(r.negative)},
          {"support", names(r.support)},
          {"big", r.big},
          {"volume", fraction(r.volume)}};
}

Json to_json(const BoundarySplit& split) {
  Json comps = Json::array();
  for (const auto& c : split.components) comps.push_back({{"curves", names(c.curves)}, {"pa", fraction(c.pa)}});
  return {{"semistable", names(split.semistable)}, {"complement", names(split.complement)}, {"components", comps}};
}

Json to_json(const catalog::CatalogEntry& e) {
  Json expected = Json::object();
  for (const auto& [k, v] : e.expected) expected[k] = {{"value", v.value}, {"origin", v.origin}};
  Json out = {{"id", e.id},
              {"description", e.description},
              {"base", to_json(e.base)},
              {"script", to_json(e.script)},
              {"boundary", names(e.boundary)},
              {"expected", expected}};
  out["pg_annotation"] = e.pg_annotation ? Json(*e.pg_annotation) : Json(nullptr);
  return out;
}

Json to_json(const std::vector<catalog::Table1Row>& rows) {
  Json out = Json::array();
  for (const auto& r : rows)
    out.push_back({{"type", r.type.label()},
                   {"vol_ey", fraction(r.vol_ey)},
                   {"min_volume", fraction(r.min_volume)},
                   {"expected_vol_ey", r.expected_vol_ey},
                   {"expected_min_volume", r.expected_min_volume},
                   {"vol_ey_matches", r.vol_ey_matches},
                   {"min_volume_matches", r.min_volume_matches}});
  return out;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

} // namespace logsurf::io
