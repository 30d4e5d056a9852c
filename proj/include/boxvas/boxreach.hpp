#pragma once

#include "boxvas/geometry.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace boxvas {

constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

struct SearchResult {
  bool reachable = false;
  std::optional<Path> witness;  // present iff reachable
  std::uint64_t visited = 0;    // grid points expanded or discovered
};

// BFS over 0 <= p <= target. Layers are expanded in lexicographic order and
// generators in index order, so witnesses are deterministic.
SearchResult decide_box_reach(const VasSystem& vas, const Vec& target,
                              std::uint64_t node_budget = kDefaultNodeBudget);

// Same search over 0 <= p <= cap.
SearchResult decide_reach_capped(const VasSystem& vas, const Vec& target, const Vec& cap,
                                 std::uint64_t node_budget = kDefaultNodeBudget);

// 1-D minimal peaks. cost[x] is the least c such that x is reachable from 0
// with every prefix in [0, c], or -1 when no such c <= limit exists.
std::vector<std::int64_t> one_dim_min_peak(const std::vector<std::int64_t>& steps,
                                           std::int64_t limit,
                                           std::uint64_t node_budget = kDefaultNodeBudget);

struct OneVasThreshold {
  Int m1 = 0;
  bool degenerate = false;   // no positive step, reach = {0}
  Int min_positive_step = 0;
  Int norm = 0;              // sum of |a|
  Int horizon = 0;           // largest value whose minimal peak was computed
};

OneVasThreshold one_vas_threshold(const std::vector<Int>& steps,
                                  std::uint64_t node_budget = kDefaultNodeBudget);
OneVasThreshold one_vas_threshold(const VasSystem& vas,
                                  std::uint64_t node_budget = kDefaultNodeBudget);

enum class ThresholdCase {
  ContainsQuadrant,
  ContainedInQuadrant,
  IntersectsQuadrant,
  OneDimensional,
  HalfOrFullPlane,
  Degenerate  // reach misses the open quadrant; W is vacuous
};
std::string to_string(ThresholdCase c);

struct ThresholdReport {
  Int W = 0;
  ThresholdCase case_tag = ThresholdCase::Degenerate;
  DeepConstant M_used;
  std::string formula_trace;
  bool degenerate = false;
  ConeData cone;
  std::optional<OneVasThreshold> one_dim;  // OneDimensional only
  std::optional<Vec> line_direction;       // primitive nonneg direction, OneDimensional only
};

ThresholdReport compute_threshold(const VasSystem& vas, const DeepConstant& M,
                                  std::uint64_t node_budget = kDefaultNodeBudget);

enum class WitnessMethod { BfsSearch, ProofCase1, ProofCase2, Direct };
std::string to_string(WitnessMethod m);

struct WitnessBundle {
  PathRecord path;
  Vec target;
  WitnessMethod method = WitnessMethod::BfsSearch;
};

// Either nonnegative coefficients with sum c_i g_i = target, or an N-path
// from 0 to target.
struct ReachEvidence {
  std::optional<std::vector<Int>> coefficients;
  std::optional<Path> path;
};

// Builds a box-reaching path to a target in [W, inf)^2 following the two
// proof cases. Without evidence, coefficients come from int_cone_member.
WitnessBundle synthesize_box_witness(const VasSystem& vas, const Vec& target,
                                     const ReachEvidence& evidence,
                                     const std::optional<DeepConstant>& M = std::nullopt,
                                     std::uint64_t node_budget = kDefaultNodeBudget);

struct WindowReport {
  std::vector<Vec> violations;  // capped-reachable but not box-reachable
  std::vector<Vec> skipped;     // budget exhausted
  std::uint64_t checked = 0;
  std::uint64_t capped_reachable = 0;
  std::optional<Vec> min_violation;  // smallest by max-coordinate, then lexicographic
  Int cap_margin = 0;
};

// Every target in lo + [0, size). cap_margin defaults to 2||V||.
WindowReport verify_window(const VasSystem& vas, const Vec& lo, const Vec& size,
                           std::optional<Int> cap_margin = std::nullopt,
                           std::uint64_t node_budget = kDefaultNodeBudget,
                           unsigned threads = 1);

}  // namespace boxvas
