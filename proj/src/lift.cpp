#include "boxvas/lift.hpp"

namespace boxvas {

namespace {

VasSystem build_lifted(const VasSystem& vas, std::vector<std::size_t>& mirror,
                       std::vector<std::size_t>& units) {
  const std::size_t d = vas.dim();
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < vas.size(); ++i) {
    Vec g(2 * d);
    for (std::size_t k = 0; k < d; ++k) {
      g[k] = vas.generator(i)[k];
      g[d + k] = -vas.generator(i)[k];
    }
    mirror.push_back(i);
    gens.push_back(std::move(g));
  }
  for (std::size_t k = 0; k < d; ++k) {
    Vec e(2 * d, 0);
    e[d + k] = 1;
    units.push_back(gens.size());
    gens.push_back(std::move(e));
  }
  return VasSystem(2 * d, std::move(gens));
}

}  // namespace

LiftedVas lift_vas(const VasSystem& vas) {
  std::vector<std::size_t> mirror, units;
  VasSystem lifted = build_lifted(vas, mirror, units);
  return LiftedVas{vas, std::move(lifted), std::move(mirror), std::move(units)};
}

LiftDecision decide_box_via_lift(const VasSystem& vas, const Vec& target,
                                 std::uint64_t node_budget) {
  const std::size_t d = vas.dim();
  if (target.size() != d || !all_nonneg(target))
    throw PreconditionError("target must be a nonnegative " + std::to_string(d) + "-vector");
  LiftedVas lv = lift_vas(vas);
  // Unit steps commute to the front of any V' run, after which coordinate
  // d+k equals target_k minus the first k-coordinate, so (target, target)
  // bounds every intermediate point without losing runs.
  Vec t2(2 * d, 0), cap(2 * d);
  for (std::size_t k = 0; k < d; ++k) {
    t2[k] = target[k];
    cap[k] = target[k];
    cap[d + k] = target[k];
  }
  SearchResult r = decide_reach_capped(lv.lifted, t2, cap, node_budget);
  LiftDecision out;
  out.visited = r.visited;
  out.reachable = r.reachable;
  if (!r.reachable) return out;
  out.lifted_witness = r.witness;
  Path proj;
  for (auto i : *r.witness)
    if (i < lv.mirror_index_map.size()) proj.push_back(lv.mirror_index_map[i]);
  // Coordinate d+k = units_k - x_k >= 0 keeps x_k <= target_k on every prefix.
  if (!is_box_reaching_trace(vas, proj, target))
    throw InternalError("projected lift witness is not box-reaching");
  out.projected_witness = std::move(proj);
  return out;
}

}  // namespace boxvas
