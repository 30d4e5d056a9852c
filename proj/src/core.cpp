#include "boxvas/core.hpp"

#include <string>

namespace boxvas {

VasSystem::VasSystem(std::size_t dim, std::vector<Vec> generators)
    : dim_(dim), gens_(std::move(generators)) {
  if (dim_ == 0) throw PreconditionError("VAS dimension must be at least 1");
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i].size() != dim_)
      throw PreconditionError("generator " + std::to_string(i) + " has " +
                              std::to_string(gens_[i].size()) + " entries, expected " +
                              std::to_string(dim_));
  norm_ = compute_norm(dim_, gens_);
}

Int VasSystem::compute_norm(std::size_t dim, const std::vector<Vec>& gens) {
  Int s = 0;
  for (const auto& g : gens) s += inf_norm(g);
  return Int(dim) * s;
}

void check_path(const VasSystem& vas, const Path& path) {
  for (std::size_t j = 0; j < path.size(); ++j)
    if (path[j] >= vas.size())
      throw MalformedPathError("path step " + std::to_string(j) + " uses generator index " +
                               std::to_string(path[j]) + " but the system has " +
                               std::to_string(vas.size()) + " generators");
}

Vec effect(const VasSystem& vas, const Path& path) {
  check_path(vas, path);
  Vec e(vas.dim(), 0);
  for (auto i : path) {
    const Vec& g = vas.generator(i);
    for (std::size_t k = 0; k < e.size(); ++k) e[k] += g[k];
  }
  return e;
}

DropPeak drop_peak(const VasSystem& vas, const Path& path) {
  check_path(vas, path);
  const std::size_t d = vas.dim();
  Vec cur(d, 0), lo(d, 0), hi(d, 0);
  for (auto i : path) {
    const Vec& g = vas.generator(i);
    for (std::size_t k = 0; k < d; ++k) {
      cur[k] += g[k];
      if (cur[k] < lo[k]) lo[k] = cur[k];
      if (cur[k] > hi[k]) hi[k] = cur[k];
    }
  }
  for (auto& x : lo) x = -x;
  return {lo, hi};
}

Vec overshoot(const VasSystem& vas, const Path& path) {
  auto dp = drop_peak(vas, path);
  return sub(dp.peak, effect(vas, path));
}

PathRecord make_path_record(const VasSystem& vas, const Path& path) {
  auto dp = drop_peak(vas, path);
  return {path, effect(vas, path), std::move(dp.drop), std::move(dp.peak)};
}

bool is_valid_n_trace(const VasSystem& vas, const Path& path, const Vec& start) {
  check_path(vas, path);
  if (start.size() != vas.dim()) return false;
  Vec cur = start;
  if (!all_nonneg(cur)) return false;
  for (auto i : path) {
    const Vec& g = vas.generator(i);
    for (std::size_t k = 0; k < cur.size(); ++k) {
      cur[k] += g[k];
      if (cur[k] < 0) return false;
    }
  }
  return true;
}

bool is_box_reaching_trace(const VasSystem& vas, const Path& path, const Vec& target) {
  check_path(vas, path);
  if (target.size() != vas.dim()) return false;
  Vec cur(vas.dim(), 0);
  for (auto i : path) {
    const Vec& g = vas.generator(i);
    for (std::size_t k = 0; k < cur.size(); ++k) {
      cur[k] += g[k];
      if (cur[k] < 0 || cur[k] > target[k]) return false;
    }
  }
  return cur == target;
}

}  // namespace boxvas
