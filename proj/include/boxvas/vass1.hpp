#pragma once

#include "boxvas/boxreach.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace boxvas {

struct Transition {
  std::size_t src = 0;
  std::int64_t weight = 0;
  std::size_t dst = 0;
};

// 1-VASS with named states. Weights are 64-bit; the counter ranges explored
// by the deciders are bounded by the node budget.
class Vass1System {
 public:
  Vass1System(std::vector<std::string> states, std::vector<Transition> transitions);

  const std::vector<std::string>& states() const { return states_; }
  const std::vector<Transition>& transitions() const { return trans_; }
  std::size_t num_states() const { return states_.size(); }
  // max |weight|, 0 without transitions.
  std::int64_t norm() const { return norm_; }
  // Transition indices leaving q, in index order.
  const std::vector<std::size_t>& outgoing(std::size_t q) const { return out_[q]; }
  std::optional<std::size_t> state_index(const std::string& name) const;

 private:
  std::vector<std::string> states_;
  std::vector<Transition> trans_;
  std::vector<std::vector<std::size_t>> out_;
  std::int64_t norm_ = 0;
};

using TransPath = std::vector<std::size_t>;

struct Vass1PathStats {
  std::size_t start = 0, end = 0;
  std::int64_t eff = 0, drop = 0, peak = 0;
};

// Counter statistics of a state-contiguous path. Throws PreconditionError on
// a state mismatch or a bad index; an empty path needs the start state.
Vass1PathStats vass1_path_stats(const Vass1System& sys, const TransPath& path,
                                std::optional<std::size_t> start = std::nullopt);

// Counter stays in [0, x] from (0, from) and the run ends in (x, to).
bool vass1_is_box_reaching(const Vass1System& sys, const TransPath& path, std::size_t from,
                           std::size_t to, std::int64_t x);

struct Vass1Decision {
  bool reachable = false;
  std::optional<TransPath> witness;
  std::uint64_t visited = 0;
};

Vass1Decision vass1_box_decide(const Vass1System& sys, std::size_t q0, std::size_t q_target,
                               std::int64_t x_target,
                               std::uint64_t node_budget = kDefaultNodeBudget);

// Least cap c with (x, q) reachable from (0, q0) inside [0, c], indexed
// x * |Q| + q for x <= limit; -1 when above limit. (x, q) is box-reachable
// iff the entry equals x.
std::vector<std::int64_t> vass1_min_caps(const Vass1System& sys, std::size_t q0,
                                         std::int64_t limit,
                                         std::uint64_t node_budget = kDefaultNodeBudget);

// alpha . beta^* . gamma with beta a cycle on cycle_state.
struct Lps {
  TransPath alpha, beta, gamma;
  std::size_t cycle_state = 0;
};

// max(over(gamma), over(beta) - eff(gamma)). Requires eff(beta) > 0.
std::int64_t lps_overshoot(const Vass1System& sys, const Lps& lps);

// theta starts where gamma ends, drop(theta) = 0, peak(theta) = eff(theta)
// and eff(theta) >= lps_overshoot(lps).
bool closes(const Vass1System& sys, const TransPath& theta, const Lps& lps);

struct Vass1Bounds {
  std::int64_t b_lps = 0;
  std::int64_t maxover = 0;
  std::int64_t p3 = 0;
  std::int64_t theta_len_bound = 0;  // ||T|| * maxover * |Q|
  std::int64_t theta_eff_bound = 0;  // theta_len_bound * ||T||
};

struct LinearComponent {
  std::int64_t base = 0;
  std::int64_t period = 0;
  // Provenance of the minimal base: eff(alpha beta^k gamma theta) = base.
  std::size_t cycle_state = 0, gamma_state = 0;
  std::int64_t k = 0, theta_eff = 0;
  TransPath alpha, beta, gamma;
};

struct SemilinearSet {
  std::vector<LinearComponent> components;  // sorted by (period, base mod period)
  std::vector<std::pair<std::int64_t, std::int64_t>> explicit_intervals;  // S, closed
  Vass1Bounds bounds;
  bool partial = false;  // combination budget exhausted
  std::uint64_t work = 0;
};

struct SemilinearOptions {
  std::uint64_t node_budget = kDefaultNodeBudget;
  std::uint64_t combination_budget = 4'000'000'000ULL;
  bool allow_partial = false;  // otherwise budget exhaustion throws ResourceError
};

std::int64_t default_b_lps(const Vass1System& sys);

SemilinearSet build_semilinear(const Vass1System& sys, std::size_t q0, std::size_t q_target,
                               std::int64_t b_lps, const SemilinearOptions& opts = {});

bool semilinear_member(const SemilinearSet& set, std::int64_t n);

// alpha beta^k gamma theta for a component, theta found by box BFS from
// gamma_state. The result is checked with vass1_is_box_reaching.
TransPath materialize_component(const Vass1System& sys, const LinearComponent& c,
                                std::size_t q0, std::size_t q_target,
                                std::uint64_t node_budget = kDefaultNodeBudget);

}  // namespace boxvas
