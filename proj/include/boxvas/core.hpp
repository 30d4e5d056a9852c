#pragma once

#include "boxvas/errors.hpp"
#include "boxvas/integer.hpp"

#include <cstddef>
#include <vector>

namespace boxvas {

using Path = std::vector<std::size_t>;

// Immutable d-VAS. Generator order is part of the identity: witnesses refer
// to generators by index.
class VasSystem {
 public:
  VasSystem(std::size_t dim, std::vector<Vec> generators);

  std::size_t dim() const { return dim_; }
  const std::vector<Vec>& generators() const { return gens_; }
  const Vec& generator(std::size_t i) const { return gens_.at(i); }
  std::size_t size() const { return gens_.size(); }
  // d * sum of infinity norms.
  const Int& norm() const { return norm_; }

  static Int compute_norm(std::size_t dim, const std::vector<Vec>& gens);

 private:
  std::size_t dim_;
  std::vector<Vec> gens_;
  Int norm_;
};

struct DropPeak {
  Vec drop;  // |min prefix effect| per coordinate, empty prefix included
  Vec peak;  // max prefix effect per coordinate, empty prefix included
};

struct PathRecord {
  Path indices;
  Vec effect;
  Vec drop;
  Vec peak;
};

// All functions throw MalformedPathError on an out-of-range index.
void check_path(const VasSystem& vas, const Path& path);
Vec effect(const VasSystem& vas, const Path& path);
DropPeak drop_peak(const VasSystem& vas, const Path& path);
// peak - effect, per coordinate.
Vec overshoot(const VasSystem& vas, const Path& path);
PathRecord make_path_record(const VasSystem& vas, const Path& path);

bool is_valid_n_trace(const VasSystem& vas, const Path& path, const Vec& start);
bool is_box_reaching_trace(const VasSystem& vas, const Path& path, const Vec& target);

}  // namespace boxvas
