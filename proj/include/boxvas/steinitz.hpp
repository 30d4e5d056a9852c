#pragma once

#include "boxvas/core.hpp"

#include <vector>

namespace boxvas {

struct SteinitzResult {
  std::vector<std::size_t> permutation;  // position j holds an input index
  Int corridor_bound = 0;                // d * I
  bool verified = false;
};

// Reorders vectors so every prefix of length n in [d, k] stays within d*I of
// ((n-d)/k) * total in the infinity norm. Throws PreconditionError on empty input.
SteinitzResult steinitz_reorder(const std::vector<Vec>& vectors);

// max over n in [d, k] of ||prefix_n - ((n-d)/k) * total||_inf.
Rational corridor_width(const std::vector<Vec>& vectors, const std::vector<std::size_t>& perm);

// Balanced interleaving of a multiset given per-type counts: at each step the
// type with the largest deficit j*c_t - K*used_t is emitted (lowest index on ties).
std::vector<std::size_t> quota_order(const std::vector<Int>& counts);

// Path over vas generators using each generator coefficients[i] times, in a
// Steinitz order: the exact construction when the total is at most
// exact_limit steps, the quota order otherwise.
Path steinitz_path(const VasSystem& vas, const std::vector<Int>& coefficients,
                   std::size_t exact_limit = 256);

// drop_k <= bound and peak_k <= eff_k + bound for every coordinate. The
// two-argument form uses bound = 2||V||. Throws PreconditionError when the
// effect has a negative coordinate.
bool check_steinitz_drop_peak(const VasSystem& vas, const Path& path);
bool check_steinitz_drop_peak(const VasSystem& vas, const Path& path, const Int& bound);

}  // namespace boxvas
