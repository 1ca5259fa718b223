#include "logsurf/catalog.hpp"
#include "logsurf/error.hpp"
#include "logsurf/zariski.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace logsurf;
using namespace logsurf::catalog;

namespace {

Rational q(long long p, long long r = 1) { return make_rational(p, r); }

std::set<std::string> names_of(const CurveConfig& c) {
  const auto v = c.names();
  return {v.begin(), v.end()};
}

long long max_step_multiplicity(const std::vector<BlowupStep>& script) {
  long long m = 1;
  for (const auto& s : script) {
    long long sum = 0;
    for (const auto& b : s.branches) sum += b.mult;
    m = std::max(m, sum);
  }
  return m;
}

// Strict transforms of the boundary are smooth and pairwise transversal.
bool boundary_snc(const CurveConfig& top, const std::vector<std::string>& boundary) {
  for (std::size_t a = 0; a < boundary.size(); ++a) {
    if (top.curve(boundary[a]).pa != 0) return false;
    for (std::size_t b = a + 1; b < boundary.size(); ++b)
      if (top.meet(boundary[a], boundary[b]) > 1) return false;
  }
  return true;
}

} // namespace

TEST_CASE("fibre labels") {
  for (const auto& t : table1_types()) CHECK(parse_fiber(t.label()) == t);
  CHECK(parse_fiber("II*") == FiberType{FiberKind::IIStar, 0});
  CHECK(parse_fiber("I_b(3)") == FiberType{FiberKind::In, 3});
  CHECK_THROWS(parse_fiber("V"));
  CHECK_THROWS_AS(kodaira_config({FiberKind::In, 0}, true), Error);
}

TEST_CASE("fibre configurations") {
  const auto ii = kodaira_config({FiberKind::II, 0}, true);
  CHECK(ii.size() == 2);
  CHECK(volume(ii, QDivisor::sum_of(ii.names())) == q(1, 2));

  const auto e8 = kodaira_config({FiberKind::IIStar, 0}, true);
  CHECK(e8.size() == 10);
  CHECK(volume(e8, QDivisor::sum_of(e8.names())) == q(1, 42));

  const auto d4 = kodaira_config({FiberKind::I0Star, 0}, true);
  CHECK(d4.size() == 6);
  const auto z = zariski_decompose(d4, QDivisor::sum_of(d4.names()));
  CHECK(z.volume == q(1, 2));
  CHECK(z.positive["F1"] == 1);
  for (const auto* leaf : {"F2", "F3", "F4", "F5"}) CHECK(z.positive[leaf] == q(1, 2));

  for (const auto& t : table1_types()) {
    CAPTURE(t.label());
    const auto c = kodaira_config(t, false);
    CHECK(validate(c).empty());
    // Fibre components span a negative semi-definite lattice.
    CHECK(inertia(c).positive == 0);
    CHECK(inertia(c).zero == 1);
    CHECK(validate(kodaira_config(t, true)).empty());
  }
}

TEST_CASE("resolution scripts") {
  const auto ii = resolution_script({FiberKind::II, 0});
  REQUIRE(ii.size() == 4);
  CHECK(ii[0].branches == std::vector<Branch>{{"F1", 2}});
  CHECK(ii[2].branches.size() == 3);

  const auto i1 = kodaira_config({FiberKind::In, 1}, true);
  const History h1(i1, resolution_script({FiberKind::In, 1}));
  const auto after = blow_up(i1, h1.steps()[0]);
  CHECK(after.curve("F1").pa == 0);
  CHECK(after.self("F1") == i1.self("F1") - 4);

  const auto iv = kodaira_config({FiberKind::IV, 0}, true);
  const auto once = blow_up(iv, resolution_script({FiberKind::IV, 0})[0]);
  CHECK(once.meet("F1", "F2") == 0);
  CHECK(once.meet("F2", "F3") == 0);
  CHECK(once.meet("F1", "F3") == 0);

  for (const auto& t : table1_types()) {
    CAPTURE(t.label());
    const auto e = fiber_entry(t);
    const History h(e.base, e.script);
    CHECK(validate(h.top()).empty());
    CHECK(boundary_snc(h.top(), e.boundary));
    for (const auto& s : e.script) CHECK_FALSE(s.joins_boundary);
  }
}

TEST_CASE("every entry replays to a valid configuration") {
  for (const auto& id : entry_ids()) {
    CAPTURE(id);
    const auto e = entry(id);
    CHECK(e.id == id);
    CHECK(validate(e.base).empty());
    const History h(e.base, e.script);
    CHECK(validate(h.top()).empty());
    for (const auto& b : e.boundary) CHECK(names_of(e.base).count(b));
  }
  CHECK_THROWS_AS(entry("nope"), Error);
}

TEST_CASE("expected values carry their origin") {
  for (const auto& id : entry_ids()) {
    for (const auto& [key, v] : entry(id).expected) {
      CAPTURE(id);
      CAPTURE(key);
      CHECK((v.origin == "published" || v.origin == "derived"));
      CHECK_NOTHROW(parse_rational(v.value));
    }
  }
}

TEST_CASE("pipeline examples") {
  CHECK(min_volume_pipeline(fiber_entry({FiberKind::IIStar, 0})) == q(1, 143));
  CHECK(min_volume_pipeline(fiber_entry({FiberKind::IV, 0})) == q(1, 15));
  for (int b = 0; b <= 2; ++b) {
    CAPTURE(b);
    CHECK(min_volume_pipeline(fiber_entry({FiberKind::InStar, b})) == q(1, 22));
  }
}

TEST_CASE("table rows") {
  const auto rows = table1();
  REQUIRE(rows.size() == table1_types().size());
  for (const auto& r : rows) {
    CAPTURE(r.type.label());
    CHECK(r.vol_ey == parse_rational(r.expected_vol_ey));
    CHECK(r.vol_ey_matches);
  }
  // I_b rows do not depend on b in the sampled range.
  CHECK(rows[0].vol_ey == rows[1].vol_ey);
  CHECK(rows[1].vol_ey == rows[2].vol_ey);
  CHECK(rows[0].min_volume == rows[2].min_volume);
}

TEST_CASE("pipeline inequalities") {
  for (const auto& t : table1_types()) {
    CAPTURE(t.label());
    const auto e = fiber_entry(t);
    const auto base_vol = volume(e.base, QDivisor::sum_of(e.boundary));
    const auto r = run_min_volume_pipeline(e);
    CHECK(r.volume <= base_vol);
    const long long m = max_step_multiplicity(e.script);
    CHECK(r.volume >= base_vol / from_int(m * m));
    REQUIRE(e.pg_annotation.has_value());
    CHECK(r.volume >= noether_stable_bound(*e.pg_annotation));
    // Each contraction leaves the volume alone.
    CHECK(volume(r.reduced.config, r.reduced.log_class) == r.volume);
  }
}

TEST_CASE("one node blow-up of II* with tail") {
  const auto r = example_143();
  CHECK(r.route_a_volume == q(1, 143));
  CHECK(r.route_b_volume == q(1, 143));
  CHECK(r.g_coefficient == 1);
  CHECK(r.route_a_shape);
  CHECK(r.route_b_shape);
  CHECK(r.route_b_order_independent);

  const auto& p = r.route_a_positive;
  CHECK(p["F1"] == q(2, 11));
  CHECK(p["F2"] == q(4, 11));
  CHECK(p["F3"] == q(6, 11));
  CHECK(p["F9"] == q(3, 11));
  CHECK(p["F4"] == q(6, 13));
  CHECK(p["F5"] == q(5, 13));
  CHECK(p["F6"] == q(4, 13));
  CHECK(p["F7"] == q(3, 13));
  CHECK(p["F8"] == q(2, 13));
  CHECK(p["T"] == q(1, 13));
}

TEST_CASE("minimal volume shape rejects other graphs") {
  const auto r = example_143();
  std::vector<std::string> e_curves;
  for (const auto& n : r.route_a_config.names())
    if (n != "G") e_curves.push_back(n);
  CHECK(minimal_volume_shape(r.route_a_config, e_curves, "G"));
  const auto plain = kodaira_config({FiberKind::IIStar, 0}, true);
  const auto moved = blow_up(plain, {{{"F4", 1}, {"F5", 1}}, "G", false});
  CHECK_FALSE(minimal_volume_shape(moved, e_curves, "G"));
}

TEST_CASE("cubic with three lines") {
  const auto r = example_25_84();
  CHECK(r.volume == q(25, 84));
  CHECK(r.l3_self == -16);
  CHECK(r.b_l3 == q(7, 8));
  CHECK(r.semistable == std::vector<std::string>{"C"});
  CHECK(r.class_consistent);
  CHECK(r.kc_on_g1 == 7);
  CHECK(r.kc_on_g2 == 7);
  // A line has self-intersection 1 and loses one per blown-up point on it.
  for (const auto& [line, self] : {std::pair{"L1", r.l1_self}, std::pair{"L2", r.l2_self}}) {
    long long points = 0;
    for (const auto& s : r.history.steps())
      for (const auto& b : s.branches) points += b.curve == line;
    CHECK(self == 1 - points);
  }
  CHECK(validate(r.history.top()).empty());
}

TEST_CASE("rational example") {
  const auto r = example_rational_shape();
  CHECK(r.e_curves.size() == 10);
  CHECK(r.all_minus_two);
  CHECK(r.shape_matches);
  CHECK(r.k_plus_c_trivial);
}

TEST_CASE("closed-form bounds") {
  CHECK(tz_bound(2) == q(1, 3));
  CHECK(tz_bound(3) == 1);
  CHECK(tz_bound(1) == 0);
  CHECK(tz_bound(5) == q(8, 3));
  CHECK_THROWS_AS(tz_bound(0), Error);

  CHECK(prop1_volume(1, {}) == q(1, 3));
  CHECK(prop1_volume(2, {}) == 1);
  const long long two[] = {2};
  CHECK(prop1_volume(1, two) == q(4, 5));
  const long long one[] = {1};
  CHECK_THROWS_AS(prop1_volume(1, one), Error);
  CHECK_THROWS_AS(prop1_volume(0, {}), Error);

  CHECK(noether_stable_bound(1) == q(1, 143));
  CHECK(noether_stable_bound(0) == 0);
  CHECK(noether_stable_bound(143) == 1);

  CHECK(prop2_bound(5) == 3);
  CHECK(prop2_bound(1) == 1);
  CHECK(prop2_bound(3) == 1);
  CHECK(prop2_bound(10) == 8);

  CHECK(prop0_step1_bound(4) == q(1, 4));
  CHECK(prop0_step1_bound(3) == q(2, 9));
  CHECK(prop0_step1_bound(1) == q(2, 9));
  CHECK(prop0_step1_bound(6) == q(1, 2));
}

TEST_CASE("gluing copies of the 25/84 surface") {
  for (long long n = 1; n <= 100; ++n) {
    CAPTURE(n);
    const std::vector<GlueComponent> parts(n, {q(25, 84), 1});
    const auto g = glue_volumes(parts);
    CHECK(g.total_volume == q(25 * n, 84));
    CHECK(g.total_pg == n);
    CHECK(g.noether_ok);
    CHECK(g.tz_violated_for.has_value() == (g.total_volume <= tz_bound(n)));
  }
  const std::vector<GlueComponent> five(5, {q(25, 84), 1});
  const auto g = glue_volumes(five);
  REQUIRE(g.tz_violated_for.has_value());
  CHECK(*g.tz_violated_for == q(8, 3));
  CHECK(g.total_volume == q(125, 84));

  const auto empty = glue_volumes({});
  CHECK(empty.total_volume == 0);
  CHECK(empty.total_pg == 0);
  CHECK(empty.noether_ok);
  CHECK_FALSE(empty.tz_violated_for.has_value());

  const std::vector<GlueComponent> bad{{q(-1), 1}};
  CHECK_THROWS_AS(glue_volumes(bad), Error);
}
