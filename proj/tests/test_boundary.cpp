#include "support/fixtures.hpp"
#include "support/generators.hpp"

#include "logsurf/boundary.hpp"
#include "logsurf/catalog.hpp"
#include "logsurf/error.hpp"
#include "logsurf/zariski.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace logsurf;

namespace {

using Names = std::vector<std::string>;

CurveConfig permuted(const CurveConfig& c, const std::vector<std::size_t>& order) {
  CurveConfig out;
  out.assume_tracked_complete = c.assume_tracked_complete;
  for (auto i : order) out.curves.push_back(c.curves[i]);
  out.gram.assign(c.size(), std::vector<long long>(c.size()));
  for (std::size_t a = 0; a < c.size(); ++a)
    for (std::size_t b = 0; b < c.size(); ++b) out.gram[a][b] = c.gram[order[a]][order[b]];
  return out;
}

std::set<std::string> as_set(const Names& v) { return {v.begin(), v.end()}; }

// Connected components of the complement: trees of rational curves, each
// meeting the semistable part in at most one point.
void check_complement_shape(const CurveConfig& c, const BoundarySplit& split, bool check_meet) {
  for (const auto& comp : connected_components(c, as_set(split.complement))) {
    long long edges = 0;
    for (std::size_t a = 0; a < comp.size(); ++a) {
      CHECK(c.curve(comp[a]).pa == 0);
      for (std::size_t b = a + 1; b < comp.size(); ++b) edges += c.meet(comp[a], comp[b]);
    }
    CHECK(edges == static_cast<long long>(comp.size()) - 1);
    if (check_meet) {
      long long to_c = 0;
      for (const auto& x : comp)
        for (const auto& y : split.semistable) to_c += c.meet(x, y);
      CHECK(to_c <= 1);
    }
  }
}

} // namespace

TEST_CASE("semistable part of small boundaries") {
  const auto chain = ConfigBuilder().curve("A", -2).curve("B", -2).curve("C", -2).meet("A", "B").meet("B", "C").build();
  auto s = semistable_part(chain, {"A", "B", "C"});
  CHECK(s.semistable.empty());
  CHECK(s.complement == Names{"A", "B", "C"});

  s = semistable_part(fixtures::type_ii_pair(), {"C1", "C2"});
  CHECK(s.semistable == Names{"C1"});
  CHECK(s.complement == Names{"C2"});
  REQUIRE(s.components.size() == 1);
  CHECK(s.components[0].pa == 1);

  // A cycle of rational curves survives and has genus one.
  s = semistable_part(fixtures::i3_cycle(), {"A", "B", "C"});
  CHECK(s.semistable == Names{"A", "B", "C"});
  REQUIRE(s.components.size() == 1);
  CHECK(s.components[0].pa == 1);

  // Curves outside delta play no role.
  s = semistable_part(fixtures::i3_cycle(), {"A", "B"});
  CHECK(s.semistable.empty());
  CHECK(s.complement == Names{"A", "B"});
}

TEST_CASE("a nodal curve on its own stays") {
  const auto c = ConfigBuilder().curve("N", 1, 1).curve("T", -2).meet("N", "T").build();
  const auto s = semistable_part(c, {"N", "T"});
  CHECK(s.semistable == Names{"N"});
  CHECK(s.complement == Names{"T"});
}

TEST_CASE("semistable part of the 25/84 boundary is the cubic") {
  const auto r = catalog::example_25_84();
  const auto s = semistable_part(r.history.top(), as_set(r.boundary));
  CHECK(s.semistable == Names{"C"});
  CHECK(s.semistable.size() + s.complement.size() == r.boundary.size());
  check_complement_shape(r.history.top(), s, true);
}

TEST_CASE("complement components on catalog boundaries") {
  for (const auto& t : catalog::table1_types()) {
    CAPTURE(t.label());
    const auto e = catalog::fiber_entry(t);
    const auto s = semistable_part(e.base, as_set(e.base.names()));
    check_complement_shape(e.base, s, true);
    for (const auto& comp : s.components) CHECK(comp.pa >= 1);

    const History h(e.base, e.script);
    const auto top = semistable_part(h.top(), as_set(e.boundary));
    check_complement_shape(h.top(), top, true);
  }
}

TEST_CASE("semistable part is a closure and ignores curve order") {
  gen::Rng rng(20261015);
  for (int iter = 0; iter < 300; ++iter) {
    const auto c = gen::random_config(rng, 6);
    std::set<std::string> delta;
    for (const auto& n : c.names())
      if (rng() % 4 != 0) delta.insert(n);
    const auto s = semistable_part(c, delta);

    CHECK(semistable_part(c, as_set(s.semistable)).semistable == s.semistable);
    CHECK(as_set(s.semistable).size() + s.complement.size() == delta.size());
    for (const auto& n : s.complement) CHECK(!std::count(s.semistable.begin(), s.semistable.end(), n));
    for (const auto& comp : s.components) CHECK(comp.pa >= 1);
    for (const auto& n : s.complement) {
      if (c.curve(n).pa > 0) FAIL("positive genus curve discarded: " << n);
    }
    check_complement_shape(c, s, false);

    std::vector<std::size_t> order(c.size());
    std::iota(order.begin(), order.end(), 0);
    for (int k = 0; k < 3; ++k) {
      std::shuffle(order.begin(), order.end(), rng);
      const auto p = semistable_part(permuted(c, order), delta);
      CHECK(as_set(p.semistable) == as_set(s.semistable));
      CHECK(as_set(p.complement) == as_set(s.complement));
    }
  }
}

TEST_CASE("tower with one step") {
  const auto e = catalog::entry("tower-seed");
  const QDivisor cls{{"C", 1}, {"E", 1}};
  const auto t = tower(e.base, "C", "E", cls, {"C", "E"}, make_rational(1, 2), 1);
  CHECK(t.history.steps().size() == 1);
  CHECK(t.log_class == total_transform(t.history, cls) - QDivisor::of("G1"));
  CHECK(t.lower_bound(5) == make_rational(19, 4));
}

TEST_CASE("tower exceptional chain") {
  const auto e = catalog::entry("tower-seed");
  const QDivisor cls{{"C", 1}, {"E", 1}};
  for (int n : {1, 2, 5}) {
    CAPTURE(n);
    const auto t = tower(e.base, "C", "E", cls, {"C", "E"}, make_rational(1, 2), n);
    const auto& top = t.history.top();
    CHECK(validate(top).empty());
    // E - G1 - ... - Gn - C, Gn the only (-1)-curve.
    Names chain{"E"};
    for (int k = 1; k <= n; ++k) chain.push_back("G" + std::to_string(k));
    chain.push_back("C");
    for (std::size_t a = 0; a < chain.size(); ++a)
      for (std::size_t b = a + 1; b < chain.size(); ++b)
        CHECK(top.meet(chain[a], chain[b]) == (b == a + 1 ? 1 : 0));
    for (int k = 1; k < n; ++k) CHECK(top.self("G" + std::to_string(k)) == -2);
    CHECK(top.self("G" + std::to_string(n)) == -1);
    CHECK(minus_one_curves(top) == Names{"G" + std::to_string(n)});
  }
}

TEST_CASE("tower volume bounds") {
  const auto e = catalog::entry("tower-seed");
  const QDivisor base_class{{"C", 1}, {"E", 1}};
  const auto z = zariski_decompose(e.base, base_class);
  const Rational base_vol = z.volume;
  const Rational b = z.positive["E"];
  CHECK(base_vol == make_rational(5, 2));
  CHECK(b == make_rational(1, 2));

  for (int n = 1; n <= 50; ++n) {
    CAPTURE(n);
    const auto t = tower(e.base, "C", "E", base_class, {"C", "E"}, b, n);
    const Rational v = volume(t.history.top(), t.log_class);
    CHECK(v >= t.lower_bound(base_vol));
    CHECK(v < base_vol);
    if (Rational(n) > b * b / base_vol) CHECK(v > 0);
  }
}

TEST_CASE("tower volumes grow with the height") {
  // Blowing up C.Gn is crepant for the boundary of step n, so each class is
  // the pullback of the previous one plus Gn.
  const auto e = catalog::entry("tower-seed");
  const QDivisor base_class{{"C", 1}, {"E", 1}};
  Rational previous = 0;
  for (int n = 1; n <= 8; ++n) {
    const auto t = tower(e.base, "C", "E", base_class, {"C", "E"}, make_rational(1, 2), n);
    const Rational v = volume(t.history.top(), t.log_class);
    CHECK(v >= previous);
    previous = v;
  }
}

TEST_CASE("tower preconditions") {
  const auto c = fixtures::line_and_minus_two();
  CHECK_THROWS_AS(tower(c, "A", "B", QDivisor::of("A"), {"A", "B"}, 1, 2), Error);
  const auto e = catalog::entry("tower-seed");
  CHECK_THROWS_AS(tower(e.base, "C", "E", QDivisor::of("C"), {"C", "E"}, 1, 0), Error);
}
