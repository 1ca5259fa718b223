// logsurf: command-line front end. Exit status 0 on success, 1 on a domain
// error (its code goes to stderr), 2 on malformed input or arguments.

#include "logsurf/birational.hpp"
#include "logsurf/boundary.hpp"
#include "logsurf/catalog.hpp"
#include "logsurf/error.hpp"
#include "logsurf/io.hpp"
#include "logsurf/zariski.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace logsurf;
using io::Json;

namespace {

struct Options {
  std::string config;
  std::string divisor;
  std::string script;
  std::string out;
  std::string delta;
  std::string vol;
  std::string name;
  std::string c_name;
  std::string e_name;
  std::string id;
  long long pg = -1;
  int n = 1;
  bool json = false;
};

std::set<std::string> split_names(const std::string& list) {
  std::set<std::string> out;
  std::stringstream ss(list);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) out.insert(item);
  return out;
}

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : ", ") + x;
  return s;
}

std::string show(const QDivisor& d) {
  if (d.empty()) return "0";
  std::string s;
  for (const auto& [name, q] : d.coeffs()) s += (s.empty() ? "" : " + ") + to_string(q) + " " + name;
  return s;
}

CurveConfig load_raw_config(const Options& o) { return io::config_from_json(io::read_json_file(o.config)); }

CurveConfig load_config(const Options& o) {
  auto config = load_raw_config(o);
  if (const auto problems = validate(config); !problems.empty())
    throw Error("invalid-config", problems.front());
  return config;
}
QDivisor load_divisor(const Options& o) {
  if (o.divisor.empty()) throw InputError("this command needs -d/--divisor");
  return io::divisor_from_json(io::read_json_file(o.divisor));
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string cmd_validate(const Options& o) {
  const auto problems = validate(load_raw_config(o));
  if (!problems.empty()) {
    std::string detail;
    for (const auto& p : problems) detail += "\n  " + p;
    throw Error("invalid-config", std::to_string(problems.size()) + " violation(s)" + detail);
  }
  return o.json ? dump(Json{{"valid", true}}) : "valid\n";
}

std::string cmd_zariski(const Options& o) {
  const auto r = zariski_decompose(load_config(o), load_divisor(o));
  if (o.json) return dump(io::to_json(r));
  std::ostringstream s;
  s << "P = " << show(r.positive) << "\n"
    << "N = " << show(r.negative) << "\n"
    << "support = [" << join(r.support) << "]\n"
    << "big = " << (r.big ? "true" : "false") << "\n"
    << "volume = " << to_string(r.volume) << "\n";
  return s.str();
}

std::string cmd_volume(const Options& o) {
  const auto v = volume(load_config(o), load_divisor(o));
  return o.json ? dump(Json{{"volume", to_string(v)}}) : to_string(v) + "\n";
}

std::string cmd_blowup(const Options& o) {
  if (o.script.empty()) throw InputError("blowup needs -s/--script");
  History h(load_config(o), io::script_from_json(io::read_json_file(o.script)));
  return dump(io::to_json(h));
}

std::string cmd_contract(const Options& o) { return dump(io::to_json(contract_minus_one(load_config(o), o.name))); }

std::string cmd_mmp(const Options& o) {
  const auto config = load_config(o);
  if (o.divisor.empty()) {
    // Without a class: contract (-1)-curves disjoint from the --delta curves.
    const auto r = mmp_contract_disjoint(config, split_names(o.delta));
    return dump(Json{{"config", io::to_json(r.config)}, {"contracted", r.contracted}});
  }
  const auto r = mmp_contract_log(config, load_divisor(o));
  return dump(Json{{"config", io::to_json(r.config)},
                   {"class", io::to_json(r.log_class)},
                   {"contracted", r.contracted},
                   {"volume", to_string(volume(r.config, r.log_class))}});
}

std::string cmd_semistable(const Options& o) {
  const auto split = semistable_part(load_config(o), split_names(o.delta));
  if (o.json) return dump(io::to_json(split));
  std::ostringstream s;
  s << "semistable = [" << join(split.semistable) << "]\n"
    << "complement = [" << join(split.complement) << "]\n";
  for (const auto& c : split.components) s << "component [" << join(c.curves) << "] pa " << to_string(c.pa) << "\n";
  return s.str();
}

std::string cmd_tower(const Options& o) {
  const auto config = load_config(o);
  const auto base_class = load_divisor(o);
  const auto base = zariski_decompose(config, base_class);
  const auto b = base.positive[o.e_name];
  const auto boundary = o.delta.empty() ? split_names(o.c_name + "," + o.e_name) : split_names(o.delta);
  const auto t = tower(config, o.c_name, o.e_name, base_class, boundary, b, o.n);
  const auto v = volume(t.history.top(), t.log_class);
  Json j{{"history", io::to_json(t.history)},
         {"class", io::to_json(t.log_class)},
         {"b", to_string(b)},
         {"base_volume", to_string(base.volume)},
         {"volume", to_string(v)},
         {"lower_bound", to_string(t.lower_bound(base.volume))}};
  if (o.json) return dump(j);
  std::ostringstream s;
  s << "n = " << o.n << "\nb = " << to_string(b) << "\nbase volume = " << to_string(base.volume)
    << "\nvolume = " << to_string(v) << "\nlower bound = " << to_string(t.lower_bound(base.volume)) << "\n";
  return s.str();
}

std::string cmd_catalog(const Options& o) {
  if (o.id.empty()) {
    std::string s;
    for (const auto& id : catalog::entry_ids()) s += id + "\n";
    return s;
  }
  return dump(io::to_json(catalog::entry(o.id)));
}

std::string cmd_table1(const Options& o) {
  const auto rows = catalog::table1();
  if (o.json) return dump(io::to_json(rows));
  std::ostringstream s;
  auto cell = [](const std::string& v, bool ok, const std::string& expected) {
    return ok ? v : v + " (expected " + expected + ")";
  };
  s << "type       vol(E_Y)   min volume\n";
  for (const auto& r : rows) {
    std::string type = r.type.label();
    std::string c1 = cell(to_string(r.vol_ey), r.vol_ey_matches, r.expected_vol_ey);
    type.resize(std::max<std::size_t>(type.size(), 10), ' ');
    c1.resize(std::max<std::size_t>(c1.size(), 10), ' ');
    s << type << " " << c1 << " " << cell(to_string(r.min_volume), r.min_volume_matches, r.expected_min_volume) << "\n";
  }
  return s.str();
}

std::string cmd_example(const Options& o) {
  std::ostringstream s;
  Json j;
  if (o.id == "143") {
    const auto r = catalog::example_143();
    j = {{"route_a_volume", to_string(r.route_a_volume)},
         {"route_b_volume", to_string(r.route_b_volume)},
         {"route_a_positive", io::to_json(r.route_a_positive)},
         {"g_coefficient", to_string(r.g_coefficient)},
         {"route_a_shape", r.route_a_shape},
         {"route_b_shape", r.route_b_shape},
         {"route_b_contracted", r.route_b_contracted},
         {"route_b_order_independent", r.route_b_order_independent}};
  } else if (o.id == "25-84") {
    const auto r = catalog::example_25_84();
    j = {{"volume", to_string(r.volume)},
         {"l1_self", r.l1_self},
         {"l2_self", r.l2_self},
         {"l3_self", r.l3_self},
         {"b_l3", to_string(r.b_l3)},
         {"kc_on_g1", to_string(r.kc_on_g1)},
         {"kc_on_g2", to_string(r.kc_on_g2)},
         {"boundary", r.boundary},
         {"semistable", r.semistable},
         {"class_consistent", r.class_consistent},
         {"positive", io::to_json(r.decomposition.positive)}};
  } else if (o.id == "rational") {
    const auto r = catalog::example_rational_shape();
    j = {{"e_curves", r.e_curves},
         {"contracted", r.contraction.contracted},
         {"all_minus_two", r.all_minus_two},
         {"shape_matches", r.shape_matches},
         {"k_plus_c_trivial", r.k_plus_c_trivial}};
  } else {
    throw Error("unknown-entry", "example " + o.id + " (expected 143, 25-84 or rational)");
  }
  if (o.json) return dump(j);
  for (const auto& [k, v] : j.items()) s << k << " = " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  return s.str();
}

std::string cmd_noether(const Options& o) {
  if (o.pg < 0) throw InputError("noether needs --pg >= 0");
  Json j{{"pg", o.pg},
         {"stable_bound", to_string(catalog::noether_stable_bound(o.pg))},
         {"prop2_bound", to_string(catalog::prop2_bound(o.pg))}};
  if (o.pg >= 1) j["tz_bound"] = to_string(catalog::tz_bound(o.pg));
  if (!o.vol.empty()) {
    const auto v = parse_rational(o.vol);
    j["vol"] = to_string(v);
    j["stable_bound_holds"] = v >= catalog::noether_stable_bound(o.pg);
    if (o.pg >= 1) j["tz_bound_exceeded"] = v > catalog::tz_bound(o.pg);
  }
  if (o.json) return dump(j);
  std::ostringstream s;
  for (const auto& [k, v] : j.items()) s << k << " = " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  return s.str();
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact intersection-lattice computations on log surfaces"};
  app.require_subcommand(1);
  Options o;
  app.add_option("-o,--out", o.out, "Write the report to a file");
  app.add_flag("--json", o.json, "Machine-readable output");

  auto with_config = [&](CLI::App* sub) { sub->add_option("config", o.config, "Configuration JSON")->required()->check(CLI::ExistingFile); };
  auto with_divisor = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("-d,--divisor", o.divisor, "Divisor JSON")->check(CLI::ExistingFile);
    if (required) opt->required();
  };

  std::map<CLI::App*, std::string (*)(const Options&)> handlers;
  auto add = [&](const char* name, const char* help, std::string (*fn)(const Options&)) {
    auto* sub = app.add_subcommand(name, help);
    handlers[sub] = fn;
    return sub;
  };

  with_config(add("validate", "Check configuration invariants", cmd_validate));
  {
    auto* s = add("zariski", "Zariski decomposition of a divisor", cmd_zariski);
    with_config(s);
    with_divisor(s, true);
  }
  {
    auto* s = add("volume", "Volume of a divisor", cmd_volume);
    with_config(s);
    with_divisor(s, true);
  }
  {
    auto* s = add("blowup", "Replay a blow-up script, print the history", cmd_blowup);
    with_config(s);
    s->add_option("-s,--script", o.script, "Blow-up script JSON")->required()->check(CLI::ExistingFile);
  }
  {
    auto* s = add("contract", "Contract a (-1)-curve", cmd_contract);
    with_config(s);
    s->add_option("name", o.name, "Curve to contract")->required();
  }
  {
    auto* s = add("mmp", "Contract (-1)-curves against a K + boundary class (-d) or disjoint from --delta", cmd_mmp);
    with_config(s);
    with_divisor(s, false);
    s->add_option("--delta", o.delta, "Comma-separated marked curves");
  }
  {
    auto* s = add("semistable", "Semistable part of a boundary", cmd_semistable);
    with_config(s);
    s->add_option("--delta", o.delta, "Comma-separated boundary curves")->required();
  }
  {
    auto* s = add("tower", "Blow-up tower separating C from E", cmd_tower);
    with_config(s);
    s->add_option("c", o.c_name, "Curve C")->required();
    s->add_option("e", o.e_name, "Curve E")->required();
    s->add_option("n", o.n, "Number of blow-ups")->required()->check(CLI::PositiveNumber);
    with_divisor(s, true);
    s->add_option("--delta", o.delta, "Comma-separated boundary curves (default: C,E)");
  }
  add("catalog", "List entries or dump one", cmd_catalog)->add_option("id", o.id, "Entry id");
  add("table1", "Volumes for the elliptic fibre configurations", cmd_table1);
  add("example", "Worked example report", cmd_example)->add_option("id", o.id, "143, 25-84 or rational")->required();
  {
    auto* s = add("noether", "Closed-form bounds for a given p_g", cmd_noether);
    s->add_option("--pg", o.pg, "Geometric genus")->required();
    s->add_option("--vol", o.vol, "Volume to check, p/q");
  }
  for (auto& [sub, fn] : handlers) {
    sub->add_flag("--json", o.json, "Machine-readable output");
    sub->add_option("-o,--out", o.out, "Write the report to a file");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    std::string report;
    for (auto& [sub, fn] : handlers)
      if (sub->parsed()) report = fn(o);
    if (o.out.empty()) {
      std::cout << report;
    } else {
      std::ofstream f(o.out);
      if (!f) throw InputError("cannot write " + o.out);
      f << report;
    }
    return 0;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  }
}
