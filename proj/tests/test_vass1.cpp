#include "boxvas/vass1.hpp"

#include <doctest.h>

#include <queue>
#include <random>
#include <set>

using namespace boxvas;

namespace {

// Configurations (x, q) reachable from (0, q0) with the counter in [0, cap].
std::set<std::pair<long, std::size_t>> closure(const Vass1System& s, std::size_t q0, long cap) {
  std::set<std::pair<long, std::size_t>> seen{{0, q0}};
  std::queue<std::pair<long, std::size_t>> q;
  q.push({0, q0});
  while (!q.empty()) {
    auto [x, st] = q.front();
    q.pop();
    for (const auto& t : s.transitions()) {
      if (t.src != st) continue;
      long y = x + t.weight;
      if (y < 0 || y > cap) continue;
      if (seen.insert({y, t.dst}).second) q.push({y, t.dst});
    }
  }
  return seen;
}

bool box_oracle(const Vass1System& s, std::size_t q0, std::size_t qt, long x) {
  return closure(s, q0, x).count({x, qt}) > 0;
}

Vass1System random_vass(std::mt19937_64& rng, std::size_t max_states, int w) {
  std::size_t n = 1 + rng() % max_states;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("q" + std::to_string(i));
  std::vector<Transition> ts(1 + rng() % 6);
  for (auto& t : ts) {
    t.src = rng() % n;
    t.dst = rng() % n;
    t.weight = static_cast<std::int64_t>(rng() % (2 * w + 1)) - w;
  }
  return Vass1System(names, ts);
}

// States y = 0..8 hold the second coordinate of {(1,7),(3,-6),(-2,6)}.
Vass1System example3() {
  std::vector<std::string> names;
  for (int y = 0; y <= 8; ++y) names.push_back("y" + std::to_string(y));
  std::vector<Transition> ts;
  const int V[3][2] = {{1, 7}, {3, -6}, {-2, 6}};
  for (int y = 0; y <= 8; ++y)
    for (const auto& v : V)
      if (y + v[1] >= 0 && y + v[1] <= 8)
        ts.push_back({static_cast<std::size_t>(y), v[0], static_cast<std::size_t>(y + v[1])});
  return Vass1System(names, ts);
}

}  // namespace

TEST_CASE("system validation") {
  CHECK_THROWS_AS(Vass1System({"a", "a"}, {}), PreconditionError);
  CHECK_THROWS_AS(Vass1System({"a"}, {{0, 1, 1}}), PreconditionError);
  Vass1System s({"a", "b"}, {{0, 3, 1}, {1, -2, 0}});
  CHECK(s.norm() == 3);
  CHECK(*s.state_index("b") == 1);
  CHECK_FALSE(s.state_index("c").has_value());
}

TEST_CASE("path statistics") {
  Vass1System s({"a", "b"}, {{0, 3, 1}, {1, -2, 0}, {0, -1, 0}});
  auto st = vass1_path_stats(s, {2, 0, 1});
  CHECK(st.eff == 0);
  CHECK(st.drop == 1);
  CHECK(st.peak == 2);
  CHECK(st.end == 0);
  CHECK_THROWS_AS(vass1_path_stats(s, {0, 0}), PreconditionError);
  CHECK_THROWS_AS(vass1_path_stats(s, {}), PreconditionError);
  CHECK_THROWS_AS(vass1_path_stats(s, {7}), MalformedPathError);
  CHECK(vass1_is_box_reaching(s, {0, 1, 0}, 0, 1, 4));
  CHECK_FALSE(vass1_is_box_reaching(s, {0, 1, 0}, 0, 1, 3));
}

TEST_CASE("two-state system") {
  Vass1System s({"a", "b"}, {{0, 3, 1}, {1, -2, 0}});
  // From a: b holds 3, 4, 5, ... once the counter can dip back.
  for (long x = 0; x <= 20; ++x) CHECK(vass1_box_decide(s, 0, 1, x).reachable == (x >= 3));
}

TEST_CASE("box decisions and minimal caps agree with the closure oracle") {
  std::mt19937_64 rng(1);
  for (int iter = 0; iter < 150; ++iter) {
    auto s = random_vass(rng, 3, 3);
    const long X = 25;
    auto caps = vass1_min_caps(s, 0, X);
    std::vector<std::int64_t> oracle(static_cast<std::size_t>(X + 1) * s.num_states(), -1);
    for (long c = X; c >= 0; --c)
      for (const auto& [x, q] : closure(s, 0, c))
        oracle[static_cast<std::size_t>(x) * s.num_states() + q] = c;
    CHECK(caps == oracle);
    for (std::size_t qt = 0; qt < s.num_states(); ++qt)
      for (long x = 0; x <= X; ++x) {
        auto r = vass1_box_decide(s, 0, qt, x);
        CHECK(r.reachable == box_oracle(s, 0, qt, x));
        if (r.reachable) CHECK(vass1_is_box_reaching(s, *r.witness, 0, qt, x));
      }
  }
}

TEST_CASE("overshoot and closing suffix") {
  // a --(+2)--> a, a --(-1)--> b, b --(+1)--> b.
  Vass1System s({"a", "b"}, {{0, 2, 0}, {0, -1, 1}, {1, 1, 1}});
  Lps l{{}, {0}, {1}, 0};
  CHECK(lps_overshoot(s, l) == 1);
  CHECK(closes(s, {2}, l));
  CHECK_FALSE(closes(s, {}, l));
  Lps bad{{}, {1}, {}, 0};
  CHECK_THROWS_AS(lps_overshoot(s, bad), PreconditionError);
  Lps flat{{}, {}, {}, 0};
  CHECK_THROWS_AS(lps_overshoot(s, flat), PreconditionError);
  CHECK_THROWS_AS(closes(s, {0}, l), PreconditionError);  // theta must start in b
}

TEST_CASE("example three: x = 6 at the top level") {
  auto s = example3();
  auto r = vass1_box_decide(s, 0, 8, 6);
  REQUIRE(r.reachable);
  CHECK(vass1_is_box_reaching(s, *r.witness, 0, 8, 6));
  auto set = build_semilinear(s, 0, 8, default_b_lps(s));
  CHECK(semilinear_member(set, 6));
  CHECK_FALSE(set.partial);
}

TEST_CASE("semilinear sets agree with box search, including beyond the explicit range") {
  std::mt19937_64 rng(2024);
  int with_components = 0;
  for (int iter = 0; iter < 60; ++iter) {
    auto s = random_vass(rng, 3, 3);
    std::size_t qt = rng() % s.num_states();
    auto set = build_semilinear(s, 0, qt, default_b_lps(s));
    REQUIRE_FALSE(set.partial);
    for (long x = 0; x <= 80; ++x) CHECK(semilinear_member(set, x) == box_oracle(s, 0, qt, x));
    // Above p3 membership comes from the components alone.
    const std::int64_t hi = set.bounds.p3 + 120;
    auto caps = vass1_min_caps(s, 0, hi);
    for (std::int64_t x = set.bounds.p3 + 1; x <= hi; ++x) {
      bool truth = caps[static_cast<std::size_t>(x) * s.num_states() + qt] == x;
      CHECK_MESSAGE(semilinear_member(set, x) == truth, "x = ", x);
    }
    if (!set.components.empty()) ++with_components;
    for (const auto& c : set.components) {
      auto p = materialize_component(s, c, 0, qt);
      CHECK(vass1_is_box_reaching(s, p, 0, qt, c.base));
      LinearComponent pumped = c;
      pumped.k += 3;
      pumped.base += 3 * c.period;
      CHECK(vass1_is_box_reaching(s, materialize_component(s, pumped, 0, qt), 0, qt, pumped.base));
    }
  }
  CHECK(with_components > 10);
}

TEST_CASE("combination budget") {
  auto s = example3();
  SemilinearOptions o;
  o.combination_budget = 10;
  CHECK_THROWS_AS(build_semilinear(s, 0, 8, default_b_lps(s), o), ResourceError);
  o.allow_partial = true;
  CHECK(build_semilinear(s, 0, 8, default_b_lps(s), o).partial);
}
