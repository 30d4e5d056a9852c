#include "boxvas/geometry.hpp"

#include <doctest.h>

#include <queue>
#include <random>
#include <set>

using namespace boxvas;

namespace {

VasSystem random_vas(std::mt19937_64& rng, int e, std::size_t max_gens) {
  std::uniform_int_distribution<int> u(-e, e);
  std::vector<Vec> g(1 + rng() % max_gens, Vec(2));
  for (auto& v : g)
    for (auto& c : v) c = u(rng);
  return VasSystem(2, g);
}

// Real-cone membership by Caratheodory: v is a nonnegative combination of at
// most two generators.
bool cone_oracle(const VasSystem& vas, const Vec& v) {
  if (is_zero(v)) return true;
  const auto& g = vas.generators();
  for (const auto& a : g)
    if (!is_zero(a) && cross(a, v) == 0 && dot(a, v) > 0) return true;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      Int det = cross(g[i], g[j]);
      if (det == 0) continue;
      // v = s g_i + t g_j.
      Int s = cross(v, g[j]), t = cross(g[i], v);
      if (det < 0) s = -s, t = -t;
      if (s >= 0 && t >= 0) return true;
    }
  return false;
}

// Integer-cone points: closure of 0 under adding generators inside a box.
// Complete for targets within radius r when the box has radius r + 2I.
std::set<std::pair<long, long>> int_cone_oracle(const VasSystem& vas, long r) {
  long I = 0;
  for (const auto& g : vas.generators())
    I = std::max(I, inf_norm(g).convert_to<long>());
  const long R = r + 2 * I;
  std::set<std::pair<long, long>> seen{{0, 0}};
  std::queue<std::pair<long, long>> q;
  q.push({0, 0});
  while (!q.empty()) {
    auto [x, y] = q.front();
    q.pop();
    for (const auto& g : vas.generators()) {
      long nx = x + g[0].convert_to<long>(), ny = y + g[1].convert_to<long>();
      if (std::abs(nx) > R || std::abs(ny) > R) continue;
      if (seen.insert({nx, ny}).second) q.push({nx, ny});
    }
  }
  return seen;
}

// Integer combinations with coefficients in [-c, c].
bool lattice_oracle(const VasSystem& vas, const Vec& v, int c) {
  const auto& g = vas.generators();
  std::vector<int> k(g.size(), -c);
  while (true) {
    Vec s(2, 0);
    for (std::size_t i = 0; i < g.size(); ++i) s = add(s, scale(Int(k[i]), g[i]));
    if (s == v) return true;
    std::size_t i = 0;
    while (i < k.size() && k[i] == c) k[i++] = -c;
    if (i == k.size()) return false;
    ++k[i];
  }
}

std::set<Vec> as_set(const std::vector<Vec>& f) { return {f.begin(), f.end()}; }

}  // namespace

TEST_CASE("example cone: extremes, facets and quadrant relation") {
  VasSystem v(2, {{-1, 2}, {2, -1}, {10, 10}});
  auto c = cone_from_generators(v);
  CHECK(c.classification == ConeClass::ProperCone);
  CHECK(*c.chi1 == Vec{-1, 2});
  CHECK(*c.chi2 == Vec{2, -1});
  CHECK(c.facets[0] == Vec{2, 1});
  CHECK(c.facets[1] == Vec{1, 2});
  CHECK(c.quadrant_relation == QuadrantRelation::ContainsQuadrant);
  CHECK(c.source_norm == 28);
}

TEST_CASE("cone classes") {
  auto cls = [](std::vector<Vec> g) { return cone_from_generators(VasSystem(2, g)); };
  CHECK(cls({}).classification == ConeClass::ZeroOnly);
  CHECK(cls({{0, 0}}).classification == ConeClass::ZeroOnly);
  auto ray = cls({{1, 2}, {2, 4}});
  CHECK(ray.classification == ConeClass::Ray);
  CHECK(ray.quadrant_relation == QuadrantRelation::ContainedInQuadrant);
  CHECK(cls({{1, -2}, {-2, 4}}).classification == ConeClass::Line);
  auto unit = cls({{1, 0}, {0, 1}});
  CHECK(unit.quadrant_relation == QuadrantRelation::ContainedInQuadrant);
  CHECK(as_set(unit.facets) == as_set({{1, 0}, {0, 1}}));
  CHECK(cls({{1, 0}, {0, 1}, {-1, -1}}).classification == ConeClass::FullPlane);
  auto hp = cls({{1, 0}, {-1, 0}, {0, 1}});
  CHECK(hp.classification == ConeClass::HalfPlane);
  CHECK(hp.facets == std::vector<Vec>{{0, 1}});
  CHECK(hp.quadrant_relation == QuadrantRelation::ContainsQuadrant);
  auto tilted = cls({{1, 1}, {-1, -1}, {1, -1}});
  CHECK(tilted.classification == ConeClass::HalfPlane);
  CHECK(tilted.quadrant_relation == QuadrantRelation::IntersectsViaXAxisSide);
  CHECK(cls({{1, 1}, {-1, -1}, {-1, 1}}).quadrant_relation ==
        QuadrantRelation::IntersectsViaYAxisSide);
  CHECK(cls({{1, 3}, {-1, 1}}).quadrant_relation == QuadrantRelation::IntersectsViaYAxisSide);
  CHECK(cls({{3, 1}, {1, -1}}).quadrant_relation == QuadrantRelation::IntersectsViaXAxisSide);
  CHECK(cls({{-1, 0}, {0, -1}}).quadrant_relation == QuadrantRelation::Other);
}

TEST_CASE("real-cone membership matches the two-generator oracle") {
  std::mt19937_64 rng(21);
  for (int iter = 0; iter < 400; ++iter) {
    auto vas = random_vas(rng, 3, 4);
    auto c = cone_from_generators(vas);
    for (const auto& f : c.facets)
      for (const auto& g : vas.generators())
        if (c.classification == ConeClass::ProperCone || c.classification == ConeClass::HalfPlane)
          CHECK(dot(f, g) >= 0);
    for (int x = -6; x <= 6; ++x)
      for (int y = -6; y <= 6; ++y) {
        Vec v{x, y};
        CHECK(in_cone(c, v) == cone_oracle(vas, v));
      }
  }
}

TEST_CASE("lattice membership: sound, verified, and complete against bounded search") {
  std::mt19937_64 rng(4);
  for (int iter = 0; iter < 120; ++iter) {
    auto vas = random_vas(rng, 3, 3);
    Lattice lat(vas);
    for (int x = -4; x <= 4; ++x)
      for (int y = -4; y <= 4; ++y) {
        Vec v{x, y};
        auto r = lattice_member(vas, v);
        CHECK(lat.member(v).member == r.member);
        if (r.member) {
          Vec s(2, 0);
          for (std::size_t i = 0; i < vas.size(); ++i)
            s = add(s, scale(r.coefficients[i], vas.generator(i)));
          CHECK(s == v);
        } else {
          CHECK_FALSE(lattice_oracle(vas, v, 6));
        }
      }
  }
}

TEST_CASE("integer-cone membership matches the closure oracle") {
  std::mt19937_64 rng(8);
  for (int iter = 0; iter < 250; ++iter) {
    auto vas = random_vas(rng, 3, 4);
    auto c = cone_from_generators(vas);
    auto pts = int_cone_oracle(vas, 8);
    for (long x = -8; x <= 8; ++x)
      for (long y = -8; y <= 8; ++y) {
        Vec v{x, y};
        auto r = int_cone_member(vas, c, v);
        REQUIRE(r.status != IntConeResult::Status::Undecided);
        bool member = r.status == IntConeResult::Status::Member;
        CHECK_MESSAGE(member == pts.count({x, y}) > 0, "v = ", to_string(v));
        if (member) {
          Vec s(2, 0);
          for (std::size_t i = 0; i < vas.size(); ++i) {
            CHECK(r.coefficients[i] >= 0);
            s = add(s, scale(r.coefficients[i], vas.generator(i)));
          }
          CHECK(s == v);
        }
      }
  }
}

TEST_CASE("falsification scan reports exactly the deep lattice points outside the integer cone") {
  std::mt19937_64 rng(13);
  for (int iter = 0; iter < 60; ++iter) {
    auto vas = random_vas(rng, 3, 3);
    if (!has_rank_two(vas)) continue;
    auto c = cone_from_generators(vas);
    DeepConstant M{Int(iter % 4), DeepConstant::Provenance::Configured};
    auto scan = ditc_falsification_scan(vas, M, 6);
    CHECK(scan.scanned == 13 * 13);
    auto pts = int_cone_oracle(vas, 6);
    std::set<Vec> expect;
    for (long x = -6; x <= 6; ++x)
      for (long y = -6; y <= 6; ++y) {
        Vec v{x, y};
        if (in_cone(c, v) && is_m_deep(c, v, M) && lattice_member(vas, v).member &&
            !pts.count({x, y}))
          expect.insert(v);
      }
    CHECK(as_set(scan.counterexamples) == expect);
    CHECK(scan.undecided.empty());
  }
}

TEST_CASE("a lattice point in the cone that is not a sum of generators") {
  VasSystem v(2, {{2, 0}, {3, 0}, {0, 1}});
  auto c = cone_from_generators(v);
  CHECK(in_cone(c, {1, 4}));
  CHECK(lattice_member(v, {1, 4}).member);
  CHECK(int_cone_member(v, {1, 4}).status == IntConeResult::Status::NonMember);
  CHECK(int_cone_member(v, {5, 4}).status == IntConeResult::Status::Member);
  DeepConstant M0{0, DeepConstant::Provenance::Configured};
  auto scan = ditc_falsification_scan(v, M0, 6);
  CHECK(as_set(scan.counterexamples) == std::set<Vec>{{1, 0}, {1, 1}, {1, 2}, {1, 3}, {1, 4},
                                                      {1, 5}, {1, 6}});
  // Depth 2 against the facet (1,0) excludes the column x = 1.
  DeepConstant M2{2, DeepConstant::Provenance::Configured};
  CHECK(ditc_falsification_scan(v, M2, 6).counterexamples.empty());
}

TEST_CASE("seed vectors satisfy their invariants or are rejected as degenerate") {
  std::mt19937_64 rng(17);
  int built = 0;
  for (int iter = 0; iter < 500; ++iter) {
    auto vas = random_vas(rng, 3, 4);
    try {
      auto s = compute_seed(vas);
      ++built;
      const Int& n = vas.norm();
      CHECK(s.s[0] >= 1);
      CHECK(s.s[1] >= 1);
      CHECK(is_box_reaching_trace(vas, s.witness.indices, s.s));
      CHECK(s.s_pos == scale(2 * n, s.s));
      CHECK(s.s_pos[0] >= 2 * n);
      CHECK(s.s_pos[1] >= 2 * n);
      CHECK(inf_norm(s.s_pos) <= 8 * n * n * n);
      CHECK(effect(vas, s.s_pos_witness) == s.s_pos);
      CHECK(is_box_reaching_trace(vas, s.s_pos_witness, s.s_pos));
    } catch (const DegenerateSystemError&) {
      // No nonzero reachable point has both coordinates positive.
      bool pos = false;
      for (const auto& g : vas.generators())
        if (g[0] > 0 && g[1] > 0) pos = true;
      CHECK_FALSE(pos);
    }
  }
  CHECK(built > 100);
}

TEST_CASE("axis seed") {
  VasSystem v(2, {{1, 0}, {-2, 1}});
  auto s = compute_seed(v);
  CHECK_FALSE(s.from_positive_generator);
  CHECK(s.s == Vec{3, 1});
  CHECK(s.witness.indices == Path{0, 0, 1, 0, 0, 0});
  CHECK_THROWS_AS(compute_seed(VasSystem(2, {{-1, 2}, {2, -3}})), DegenerateSystemError);
}

TEST_CASE("facet product bound preconditions") {
  // (-2,-1) lies counter-clockwise of (1,3).
  auto c = cone_from_generators(VasSystem(2, {{1, 3}, {-2, -1}}));
  REQUIRE(c.classification == ConeClass::ProperCone);
  CHECK(facet_product_bound_check(c, {0, 1}));
  CHECK(facet_product_bound_check(c, {1, 4}));
  CHECK_THROWS_AS(facet_product_bound_check(c, {0, -1}), PreconditionError);
  CHECK_THROWS_AS(facet_product_bound_check(c, {1, 0}), PreconditionError);  // outside the cone
  // Clockwise order swaps the roles and is rejected.
  auto w = cone_from_generators(VasSystem(2, {{3, 1}, {-1, -2}}));
  CHECK_THROWS_AS(facet_product_bound_check(w, {1, 0}), PreconditionError);
  auto q = cone_from_generators(VasSystem(2, {{1, 0}, {0, 1}}));
  CHECK_THROWS_AS(facet_product_bound_check(q, {1, 1}), PreconditionError);
}
