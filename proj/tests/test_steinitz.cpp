#include "boxvas/steinitz.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace boxvas;

namespace {

// Width recomputed with rationals, independent of the integer-scaled check.
Rational width_oracle(const std::vector<Vec>& vs, const std::vector<std::size_t>& perm) {
  const std::size_t k = vs.size(), d = vs[0].size();
  Vec total(d, 0);
  for (const auto& v : vs) total = add(total, v);
  Rational worst = 0;
  Vec prefix(d, 0);
  for (std::size_t n = 1; n <= k; ++n) {
    prefix = add(prefix, vs[perm[n - 1]]);
    if (n < d) continue;
    for (std::size_t c = 0; c < d; ++c) {
      Rational dev = Rational(prefix[c]) - Rational(Int(n - d), Int(k)) * Rational(total[c]);
      if (dev < 0) dev = -dev;
      worst = std::max(worst, dev);
    }
  }
  return worst;
}

std::vector<Vec> random_vectors(std::mt19937_64& rng, std::size_t k, std::size_t d, int e) {
  std::uniform_int_distribution<int> u(-e, e);
  std::vector<Vec> vs(k, Vec(d));
  for (auto& v : vs)
    for (auto& c : v) c = u(rng);
  return vs;
}

bool is_permutation_of_k(std::vector<std::size_t> p, std::size_t k) {
  std::sort(p.begin(), p.end());
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != i) return false;
  return p.size() == k;
}

}  // namespace

TEST_CASE("empty input is rejected") {
  CHECK_THROWS_AS(steinitz_reorder({}), PreconditionError);
}

TEST_CASE("alternating signs keep the corridor narrow") {
  std::vector<Vec> vs{{3, 0}, {3, 0}, {3, 0}, {-3, 0}, {-3, 0}, {-3, 0}};
  auto r = steinitz_reorder(vs);
  CHECK(r.verified);
  CHECK(r.corridor_bound == 6);
  CHECK(corridor_width(vs, r.permutation) <= 6);
  CHECK(is_permutation_of_k(r.permutation, vs.size()));
  // The identity order drifts to 9 and back.
  std::vector<std::size_t> id{0, 1, 2, 3, 4, 5};
  CHECK(corridor_width(vs, id) == 9);
}

TEST_CASE("reordering meets d*I and the width matches the rational oracle") {
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 400; ++iter) {
    std::size_t d = 1 + iter % 3, k = 1 + rng() % 14;
    auto vs = random_vectors(rng, k, d, 4);
    auto r = steinitz_reorder(vs);
    REQUIRE(is_permutation_of_k(r.permutation, k));
    Rational w = width_oracle(vs, r.permutation);
    CHECK(w == corridor_width(vs, r.permutation));
    CHECK(w <= Rational(r.corridor_bound));
  }
}

TEST_CASE("exhaustive search never finds a narrower order than the bound permits") {
  // The brute-force optimum lower-bounds our width; ours stays within d*I.
  std::mt19937_64 rng(5);
  for (int iter = 0; iter < 60; ++iter) {
    std::size_t k = 2 + rng() % 5;
    auto vs = random_vectors(rng, k, 2, 3);
    std::vector<std::size_t> p(k);
    std::iota(p.begin(), p.end(), 0);
    Rational best = -1;
    do {
      Rational w = width_oracle(vs, p);
      if (best < 0 || w < best) best = w;
    } while (std::next_permutation(p.begin(), p.end()));
    auto r = steinitz_reorder(vs);
    Rational ours = corridor_width(vs, r.permutation);
    CHECK(best <= ours);
    CHECK(ours <= Rational(r.corridor_bound));
  }
}

TEST_CASE("quota order keeps every type within one step of its share") {
  std::mt19937_64 rng(3);
  for (int iter = 0; iter < 300; ++iter) {
    std::vector<Int> c(1 + rng() % 5);
    Int K = 0;
    for (auto& x : c) {
      x = static_cast<int>(rng() % 9);
      K += x;
    }
    auto ord = quota_order(c);
    REQUIRE(Int(ord.size()) == K);
    std::vector<Int> used(c.size(), 0);
    for (std::size_t j = 1; j <= ord.size(); ++j) {
      ++used[ord[j - 1]];
      for (std::size_t t = 0; t < c.size(); ++t) {
        // |used - j c / K| < 1, scaled by K.
        Int dev = abs_int(Int(K) * used[t] - Int(j) * c[t]);
        CHECK(dev < K);
      }
    }
    CHECK(used == c);
  }
}

TEST_CASE("steinitz_path uses the multiset and keeps drop and peak within 2||V||") {
  std::mt19937_64 rng(9);
  int checked = 0;
  for (int iter = 0; iter < 300; ++iter) {
    auto gens = random_vectors(rng, 1 + rng() % 4, 2, 3);
    VasSystem vas(2, gens);
    std::vector<Int> coeffs(gens.size());
    for (auto& x : coeffs) x = static_cast<int>(rng() % 40);
    Vec total(2, 0);
    for (std::size_t i = 0; i < gens.size(); ++i) total = add(total, scale(coeffs[i], gens[i]));
    for (std::size_t limit : {std::size_t(0), std::size_t(256)}) {
      Path p = steinitz_path(vas, coeffs, limit);
      std::vector<Int> cnt(gens.size(), 0);
      for (auto i : p) ++cnt[i];
      CHECK(cnt == coeffs);
      if (all_nonneg(total)) {
        CHECK(check_steinitz_drop_peak(vas, p));
        ++checked;
      } else {
        CHECK_THROWS_AS(check_steinitz_drop_peak(vas, p), PreconditionError);
      }
    }
  }
  CHECK(checked > 20);
}
