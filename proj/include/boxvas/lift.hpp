#pragma once

#include "boxvas/boxreach.hpp"

namespace boxvas {

// V' in dimension 2d: every source generator x becomes (x, -x), followed by
// the unit vectors e_{d+1}, ..., e_{2d}.
struct LiftedVas {
  VasSystem source;
  VasSystem lifted;
  std::vector<std::size_t> mirror_index_map;  // lifted index i mirrors source index map[i]
  std::vector<std::size_t> unit_indices;      // lifted index of e_{d+1+k}
};

LiftedVas lift_vas(const VasSystem& vas);

struct LiftDecision {
  bool reachable = false;
  std::optional<Path> lifted_witness;     // path in V'
  std::optional<Path> projected_witness;  // mirrored steps only, a box-reaching path in V
  std::uint64_t visited = 0;
};

// (target, 0) in reach(V') searched under the cap (target, target).
LiftDecision decide_box_via_lift(const VasSystem& vas, const Vec& target,
                                 std::uint64_t node_budget = kDefaultNodeBudget);

}  // namespace boxvas
