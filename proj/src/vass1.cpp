#include "boxvas/vass1.hpp"

#include <algorithm>
#include <limits>
#include <memory>
#include <unordered_map>
#include <unordered_set>

namespace boxvas {

Vass1System::Vass1System(std::vector<std::string> states, std::vector<Transition> transitions)
    : states_(std::move(states)), trans_(std::move(transitions)) {
  std::unordered_set<std::string> seen;
  for (const auto& s : states_)
    if (!seen.insert(s).second) throw PreconditionError("duplicate state name '" + s + "'");
  out_.assign(states_.size(), {});
  for (std::size_t i = 0; i < trans_.size(); ++i) {
    const auto& t = trans_[i];
    if (t.src >= states_.size() || t.dst >= states_.size())
      throw PreconditionError("transition " + std::to_string(i) + " references a missing state");
    if (t.weight > (std::int64_t(1) << 31) || t.weight < -(std::int64_t(1) << 31))
      throw PreconditionError("transition " + std::to_string(i) + " weight exceeds 2^31");
    norm_ = std::max(norm_, t.weight < 0 ? -t.weight : t.weight);
    out_[t.src].push_back(i);
  }
}

std::optional<std::size_t> Vass1System::state_index(const std::string& name) const {
  for (std::size_t i = 0; i < states_.size(); ++i)
    if (states_[i] == name) return i;
  return std::nullopt;
}

namespace {

void require_state(const Vass1System& sys, std::size_t q, const char* what) {
  if (q >= sys.num_states())
    throw PreconditionError(std::string(what) + " state index " + std::to_string(q) +
                            " out of range");
}

}  // namespace

Vass1PathStats vass1_path_stats(const Vass1System& sys, const TransPath& path,
                                std::optional<std::size_t> start) {
  Vass1PathStats st;
  if (path.empty()) {
    if (!start) throw PreconditionError("empty path needs an explicit start state");
    require_state(sys, *start, "start");
    st.start = st.end = *start;
    return st;
  }
  for (auto i : path)
    if (i >= sys.transitions().size())
      throw MalformedPathError("transition index " + std::to_string(i) + " out of range");
  st.start = sys.transitions()[path[0]].src;
  if (start && *start != st.start)
    throw PreconditionError("path starts in state '" + sys.states()[st.start] + "', expected '" +
                            sys.states()[*start] + "'");
  std::size_t q = st.start;
  for (std::size_t j = 0; j < path.size(); ++j) {
    const auto& t = sys.transitions()[path[j]];
    if (t.src != q)
      throw PreconditionError("path step " + std::to_string(j) + " leaves state '" +
                              sys.states()[t.src] + "' but the run is in '" +
                              sys.states()[q] + "'");
    st.eff += t.weight;
    st.drop = std::max(st.drop, -st.eff);
    st.peak = std::max(st.peak, st.eff);
    q = t.dst;
  }
  st.end = q;
  return st;
}

bool vass1_is_box_reaching(const Vass1System& sys, const TransPath& path, std::size_t from,
                           std::size_t to, std::int64_t x) {
  if (from >= sys.num_states() || to >= sys.num_states() || x < 0) return false;
  std::size_t q = from;
  std::int64_t c = 0;
  for (auto i : path) {
    if (i >= sys.transitions().size()) return false;
    const auto& t = sys.transitions()[i];
    if (t.src != q) return false;
    c += t.weight;
    if (c < 0 || c > x) return false;
    q = t.dst;
  }
  return q == to && c == x;
}

Vass1Decision vass1_box_decide(const Vass1System& sys, std::size_t q0, std::size_t q_target,
                               std::int64_t x_target, std::uint64_t budget) {
  require_state(sys, q0, "initial");
  require_state(sys, q_target, "target");
  if (x_target < 0) throw PreconditionError("target counter must be nonnegative");
  Vass1Decision res;
  res.visited = 1;
  const std::uint64_t nq = sys.num_states();
  if (x_target == 0 && q0 == q_target) {
    res.reachable = true;
    res.witness = TransPath{};
    return res;
  }
  // parent transition + 1 per node, key x * |Q| + q.
  std::unordered_map<std::uint64_t, std::uint32_t> sparse;
  std::vector<std::uint32_t> dense;
  const std::uint64_t size = (static_cast<std::uint64_t>(x_target) + 1) * nq;
  const bool use_dense = size <= (std::uint64_t(1) << 25);
  if (use_dense) dense.assign(size, 0);
  constexpr std::uint32_t kRoot = std::numeric_limits<std::uint32_t>::max();
  auto get = [&](std::uint64_t k) -> std::uint32_t {
    if (use_dense) return dense[k];
    auto it = sparse.find(k);
    return it == sparse.end() ? 0 : it->second;
  };
  auto set = [&](std::uint64_t k, std::uint32_t v) {
    if (use_dense) dense[k] = v;
    else sparse.emplace(k, v);
  };
  const std::uint64_t root = q0, goal = static_cast<std::uint64_t>(x_target) * nq + q_target;
  set(root, kRoot);
  std::vector<std::uint64_t> frontier{root}, next;
  while (!frontier.empty()) {
    next.clear();
    for (auto key : frontier) {
      std::int64_t x = static_cast<std::int64_t>(key / nq);
      std::size_t q = static_cast<std::size_t>(key % nq);
      for (auto ti : sys.outgoing(q)) {
        const auto& t = sys.transitions()[ti];
        std::int64_t y = x + t.weight;
        if (y < 0 || y > x_target) continue;
        std::uint64_t nk = static_cast<std::uint64_t>(y) * nq + t.dst;
        if (get(nk) != 0) continue;
        set(nk, static_cast<std::uint32_t>(ti + 1));
        if (++res.visited > budget)
          throw ResourceError("node budget of " + std::to_string(budget) +
                              " configurations exhausted");
        if (nk == goal) {
          TransPath p;
          for (std::uint64_t cur = nk; cur != root;) {
            std::uint32_t m = get(cur);
            const auto& tt = sys.transitions()[m - 1];
            p.push_back(m - 1);
            std::int64_t px = static_cast<std::int64_t>(cur / nq) - tt.weight;
            cur = static_cast<std::uint64_t>(px) * nq + tt.src;
          }
          std::reverse(p.begin(), p.end());
          if (!vass1_is_box_reaching(sys, p, q0, q_target, x_target))
            throw InternalError("VASS witness is not box-reaching");
          res.reachable = true;
          res.witness = std::move(p);
          return res;
        }
        next.push_back(nk);
      }
    }
    std::sort(next.begin(), next.end());
    frontier.swap(next);
  }
  return res;
}

std::vector<std::int64_t> vass1_min_caps(const Vass1System& sys, std::size_t q0,
                                         std::int64_t limit, std::uint64_t budget) {
  require_state(sys, q0, "initial");
  if (limit < 0) throw PreconditionError("limit must be nonnegative");
  const std::uint64_t nq = sys.num_states();
  const std::uint64_t size = (static_cast<std::uint64_t>(limit) + 1) * nq;
  if (size > budget)
    throw ResourceError(std::to_string(size) + " configurations exceed node budget " +
                        std::to_string(budget));
  std::vector<std::int64_t> cost(size, -1);
  std::vector<std::uint64_t> stack;
  const auto& T = sys.transitions();
  for (std::int64_t c = 0; c <= limit; ++c) {
    stack.clear();
    auto admit = [&](std::int64_t x, std::size_t q) {
      std::uint64_t k = static_cast<std::uint64_t>(x) * nq + q;
      if (cost[k] >= 0) return;
      cost[k] = c;
      stack.push_back(k);
    };
    // Level c is entered from below by positive weights only.
    if (c == 0) admit(0, q0);
    for (const auto& t : T)
      if (t.weight > 0 && c - t.weight >= 0 &&
          cost[static_cast<std::uint64_t>(c - t.weight) * nq + t.src] >= 0)
        admit(c, t.dst);
    while (!stack.empty()) {
      std::uint64_t k = stack.back();
      stack.pop_back();
      std::int64_t x = static_cast<std::int64_t>(k / nq);
      for (auto ti : sys.outgoing(static_cast<std::size_t>(k % nq))) {
        std::int64_t y = x + T[ti].weight;
        if (y >= 0 && y <= c) admit(y, T[ti].dst);
      }
    }
  }
  return cost;
}

std::int64_t lps_overshoot(const Vass1System& sys, const Lps& lps) {
  require_state(sys, lps.cycle_state, "cycle");
  if (!lps.alpha.empty() && vass1_path_stats(sys, lps.alpha).end != lps.cycle_state)
    throw PreconditionError("alpha does not end in the cycle state");
  if (lps.beta.empty()) throw PreconditionError("beta must be a nonempty cycle");
  auto b = vass1_path_stats(sys, lps.beta, lps.cycle_state);
  if (b.end != lps.cycle_state) throw PreconditionError("beta is not a cycle");
  if (b.eff <= 0)
    throw PreconditionError("beta has effect " + std::to_string(b.eff) + ", not a pumping cycle");
  auto g = vass1_path_stats(sys, lps.gamma, lps.cycle_state);
  return std::max(g.peak - g.eff, (b.peak - b.eff) - g.eff);
}

bool closes(const Vass1System& sys, const TransPath& theta, const Lps& lps) {
  std::int64_t over = lps_overshoot(sys, lps);
  auto g = vass1_path_stats(sys, lps.gamma, lps.cycle_state);
  auto t = vass1_path_stats(sys, theta, g.end);
  return t.drop == 0 && t.peak == t.eff && t.eff >= over;
}

std::int64_t default_b_lps(const Vass1System& sys) {
  return static_cast<std::int64_t>(sys.num_states()) * (sys.norm() + 1) * 4;
}

namespace {

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

// Paths of length <= b from one start state, kept Pareto-minimal in
// (drop, peak, length) per (end state, effect).
struct PathDp {
  struct Entry {
    std::int32_t parent;
    std::uint32_t trans;
    std::uint32_t q;
    std::int32_t len;
    std::int64_t eff, drop, peak;
    bool dead;
  };
  std::vector<Entry> entries;

  PathDp(const Vass1System& sys, std::size_t start, std::int64_t b, std::uint64_t budget) {
    const std::int64_t R = b * sys.norm();
    const std::size_t width = static_cast<std::size_t>(2 * R + 1);
    std::vector<std::vector<std::uint32_t>> bucket(sys.num_states() * width);
    auto slot = [&](std::size_t q, std::int64_t eff) {
      return q * width + static_cast<std::size_t>(eff + R);
    };
    entries.push_back({-1, 0, static_cast<std::uint32_t>(start), 0, 0, 0, 0, false});
    bucket[slot(start, 0)].push_back(0);
    std::vector<std::uint32_t> layer{0}, next;
    for (std::int64_t len = 1; len <= b && !layer.empty(); ++len) {
      next.clear();
      for (auto id : layer) {
        if (entries[id].dead) continue;
        const Entry e = entries[id];
        for (auto ti : sys.outgoing(e.q)) {
          const auto& t = sys.transitions()[ti];
          std::int64_t eff = e.eff + t.weight;
          std::int64_t drop = std::max(e.drop, -eff), peak = std::max(e.peak, eff);
          auto& bk = bucket[slot(t.dst, eff)];
          bool dominated = false;
          for (auto o : bk)
            if (entries[o].drop <= drop && entries[o].peak <= peak) {
              dominated = true;
              break;
            }
          if (dominated) continue;
          // Only same-length entries can be dominated by the newcomer.
          bk.erase(std::remove_if(bk.begin(), bk.end(),
                                  [&](std::uint32_t o) {
                                    auto& oe = entries[o];
                                    if (oe.len == len && oe.drop >= drop && oe.peak >= peak) {
                                      oe.dead = true;
                                      return true;
                                    }
                                    return false;
                                  }),
                   bk.end());
          auto nid = static_cast<std::uint32_t>(entries.size());
          entries.push_back({static_cast<std::int32_t>(id), static_cast<std::uint32_t>(ti),
                             static_cast<std::uint32_t>(t.dst), static_cast<std::int32_t>(len),
                             eff, drop, peak, false});
          if (entries.size() > budget)
            throw ResourceError("LPS enumeration exceeded node budget " + std::to_string(budget));
          bk.push_back(nid);
          next.push_back(nid);
        }
      }
      layer.swap(next);
    }
  }

  TransPath path(std::uint32_t id) const {
    TransPath p;
    for (std::int32_t cur = static_cast<std::int32_t>(id); entries[cur].parent >= 0;
         cur = entries[cur].parent)
      p.push_back(entries[cur].trans);
    std::reverse(p.begin(), p.end());
    return p;
  }
};

struct OverStats {
  bool has_pos_cycle = false;
  std::int64_t max_over_gamma = 0, max_over_beta = 0, min_eff = 0;
};

// Exact maxima of over = peak - eff over all paths of length <= b.
OverStats over_stats(const Vass1System& sys, std::size_t start, std::int64_t b) {
  const std::int64_t R = b * sys.norm();
  const std::size_t width = static_cast<std::size_t>(2 * R + 1), nq = sys.num_states();
  std::vector<std::int64_t> cur(nq * width, -kInf), nxt;
  cur[start * width + static_cast<std::size_t>(R)] = 0;
  OverStats st;
  for (std::int64_t len = 1; len <= b; ++len) {
    nxt.assign(nq * width, -kInf);
    for (std::size_t q = 0; q < nq; ++q)
      for (std::size_t e = 0; e < width; ++e) {
        std::int64_t pk = cur[q * width + e];
        if (pk == -kInf) continue;
        std::int64_t eff = static_cast<std::int64_t>(e) - R;
        for (auto ti : sys.outgoing(q)) {
          const auto& t = sys.transitions()[ti];
          std::int64_t ne = eff + t.weight;
          auto& slot = nxt[t.dst * width + static_cast<std::size_t>(ne + R)];
          slot = std::max(slot, std::max(pk, ne));
        }
      }
    cur.swap(nxt);
    for (std::size_t q = 0; q < nq; ++q)
      for (std::size_t e = 0; e < width; ++e) {
        std::int64_t pk = cur[q * width + e];
        if (pk == -kInf) continue;
        std::int64_t eff = static_cast<std::int64_t>(e) - R;
        st.max_over_gamma = std::max(st.max_over_gamma, pk - eff);
        st.min_eff = std::min(st.min_eff, eff);
        if (q == start && eff > 0) {
          st.max_over_beta = st.has_pos_cycle ? std::max(st.max_over_beta, pk - eff) : pk - eff;
          st.has_pos_cycle = true;
        }
      }
  }
  return st;
}

std::int64_t checked_i64(__int128 v, const char* what) {
  if (v > (__int128(1) << 62)) throw ResourceError(std::string(what) + " overflows 64 bits");
  return static_cast<std::int64_t>(v);
}

std::int64_t mod_b(std::int64_t a, std::int64_t b) {
  std::int64_t r = a % b;
  return r < 0 ? r + b : r;
}

}  // namespace

SemilinearSet build_semilinear(const Vass1System& sys, std::size_t q0, std::size_t q_target,
                               std::int64_t b, const SemilinearOptions& opts) {
  require_state(sys, q0, "initial");
  require_state(sys, q_target, "target");
  if (b < 1) throw PreconditionError("b_lps must be at least 1");
  const std::size_t nq = sys.num_states();
  const std::int64_t T = sys.norm();
  SemilinearSet out;
  Vass1Bounds& bd = out.bounds;
  bd.b_lps = b;

  std::vector<OverStats> os(nq);
  for (std::size_t s = 0; s < nq; ++s) {
    os[s] = over_stats(sys, s, b);
    if (os[s].has_pos_cycle)
      bd.maxover = std::max({bd.maxover, os[s].max_over_gamma,
                             os[s].max_over_beta - os[s].min_eff});
  }
  using I = __int128;
  bd.theta_len_bound = checked_i64(I(T) * bd.maxover * I(nq), "theta length bound");
  bd.theta_eff_bound = checked_i64(I(bd.theta_len_bound) * T, "theta effect bound");
  bd.p3 = checked_i64(I(T) * (I(b) * b * T + 2 * I(b) + 2 * I(T) * bd.maxover * I(nq)), "p3");

  // S: box-reachable values up to p3, from the minimal caps.
  {
    auto caps = vass1_min_caps(sys, q0, bd.p3, opts.node_budget);
    for (std::int64_t x = 0; x <= bd.p3; ++x) {
      if (caps[static_cast<std::size_t>(x) * nq + q_target] != x) continue;
      auto& iv = out.explicit_intervals;
      if (!iv.empty() && iv.back().second == x - 1) iv.back().second = x;
      else iv.push_back({x, x});
    }
  }

  const std::int64_t H = bd.theta_eff_bound;
  std::vector<std::vector<char>> theta(nq);
  std::vector<bool> theta_any(nq, false);
  for (std::size_t g = 0; g < nq; ++g) {
    auto caps = vass1_min_caps(sys, g, H, opts.node_budget);
    theta[g].assign(static_cast<std::size_t>(H) + 1, 0);
    for (std::int64_t e = 0; e <= H; ++e)
      if (caps[static_cast<std::size_t>(e) * nq + q_target] == e) {
        theta[g][static_cast<std::size_t>(e)] = 1;
        theta_any[g] = true;
      }
  }
  // next_same[(g, B)][v]: least v' >= v, v' = v mod B, with theta[g][v'].
  std::unordered_map<std::uint64_t, std::vector<std::int64_t>> next_same;
  auto get_next_same = [&](std::size_t g, std::int64_t B) -> const std::vector<std::int64_t>& {
    std::uint64_t key = static_cast<std::uint64_t>(B) * nq + g;
    auto it = next_same.find(key);
    if (it != next_same.end()) return it->second;
    std::vector<std::int64_t> ns(static_cast<std::size_t>(H) + 1, -1);
    for (std::int64_t v = H; v >= 0; --v) {
      auto vi = static_cast<std::size_t>(v);
      if (theta[g][vi]) ns[vi] = v;
      else if (v + B <= H) ns[vi] = ns[static_cast<std::size_t>(v + B)];
    }
    return next_same.emplace(key, std::move(ns)).first->second;
  };

  PathDp alpha_dp(sys, q0, b, opts.node_budget);
  struct AlphaBest {
    std::int64_t peak = kInf;
    std::uint32_t id = 0;
  };
  // Per cycle state: effect -> least peak among N-paths from (0, q0).
  std::vector<std::vector<std::pair<std::int64_t, AlphaBest>>> alpha(nq);
  {
    std::vector<std::unordered_map<std::int64_t, AlphaBest>> m(nq);
    for (std::uint32_t id = 0; id < alpha_dp.entries.size(); ++id) {
      const auto& e = alpha_dp.entries[id];
      if (e.dead || e.drop != 0) continue;
      auto& ab = m[e.q][e.eff];
      if (e.peak < ab.peak) ab = {e.peak, id};
    }
    for (std::size_t q = 0; q < nq; ++q) {
      alpha[q].assign(m[q].begin(), m[q].end());
      std::sort(alpha[q].begin(), alpha[q].end(),
                [](const auto& a, const auto& c) { return a.first < c.first; });
    }
  }

  struct Best {
    std::int64_t base = kInf;
    std::size_t q1 = 0, g = 0;
    std::uint32_t a_id = 0, b_id = 0, g_id = 0;
    std::int64_t k = 0, theta_eff = 0;
  };
  std::vector<std::vector<Best>> best;  // [period][residue]
  std::vector<std::unique_ptr<PathDp>> dps(nq);

  for (std::size_t q1 = 0; q1 < nq; ++q1) {
    if (alpha[q1].empty() || !os[q1].has_pos_cycle) continue;
    dps[q1] = std::make_unique<PathDp>(sys, q1, b, opts.node_budget);
    const PathDp& dp = *dps[q1];
    struct Part {
      std::int64_t eff, drop, over;
      std::uint32_t id;
      std::size_t end;
    };
    std::vector<Part> betas, gammas;
    for (std::uint32_t id = 0; id < dp.entries.size(); ++id) {
      const auto& e = dp.entries[id];
      if (e.dead) continue;
      Part p{e.eff, e.drop, e.peak - e.eff, id, e.q};
      if (e.q == q1 && e.len >= 1 && e.eff > 0) betas.push_back(p);
      if (theta_any[e.q]) gammas.push_back(p);
    }
    // Pareto filter on (drop, over) per (end, eff).
    auto pareto = [](std::vector<Part>& v) {
      std::sort(v.begin(), v.end(), [](const Part& a, const Part& c) {
        if (a.end != c.end) return a.end < c.end;
        if (a.eff != c.eff) return a.eff < c.eff;
        if (a.drop != c.drop) return a.drop < c.drop;
        return a.over < c.over;
      });
      std::vector<Part> keep;
      for (std::size_t i = 0; i < v.size();) {
        std::size_t j = i;
        std::int64_t best_over = kInf;
        for (; j < v.size() && v[j].end == v[i].end && v[j].eff == v[i].eff; ++j)
          if (v[j].over < best_over) {
            best_over = v[j].over;
            keep.push_back(v[j]);
          }
        i = j;
      }
      v.swap(keep);
    };
    pareto(betas);
    pareto(gammas);

    std::vector<std::int64_t> U, Uarg_peak;
    std::vector<std::int64_t> Uarg_a;
    std::vector<std::uint32_t> Uarg_id;
    std::vector<std::int64_t> Ecls;
    for (const auto& be : betas) {
      const std::int64_t B = be.eff;
      if (static_cast<std::int64_t>(best.size()) <= B) best.resize(static_cast<std::size_t>(B) + 1);
      auto& row = best[static_cast<std::size_t>(B)];
      if (row.empty()) row.resize(static_cast<std::size_t>(B));
      // U[a]: least A + (peak(alpha) + 1) * B over alphas with A = a mod B, A >= drop(beta).
      U.assign(static_cast<std::size_t>(B), kInf);
      Uarg_a.assign(static_cast<std::size_t>(B), 0);
      Uarg_id.assign(static_cast<std::size_t>(B), 0);
      Uarg_peak.assign(static_cast<std::size_t>(B), 0);
      std::vector<std::size_t> live;
      for (const auto& [A, ab] : alpha[q1]) {
        if (A < be.drop) continue;
        auto cls = static_cast<std::size_t>(A % B);
        std::int64_t u = A + (ab.peak + 1) * B;
        if (u < U[cls]) {
          if (U[cls] == kInf) live.push_back(cls);
          U[cls] = u;
          Uarg_a[cls] = A;
          Uarg_id[cls] = ab.id;
          Uarg_peak[cls] = ab.peak;
        }
      }
      if (live.empty()) continue;
      std::sort(live.begin(), live.end());
      for (const auto& ga : gammas) {
        const std::int64_t tau = std::max(ga.over, be.over - ga.eff);
        if (tau > H) continue;
        const auto& ns = get_next_same(ga.end, B);
        Ecls.clear();
        for (std::int64_t v = tau; v < tau + B && v <= H; ++v)
          if (ns[static_cast<std::size_t>(v)] >= 0) Ecls.push_back(ns[static_cast<std::size_t>(v)]);
        if (Ecls.empty()) continue;
        out.work += live.size() * Ecls.size();
        if (out.work > opts.combination_budget) {
          if (!opts.allow_partial)
            throw ResourceError("LPS combination budget of " +
                                std::to_string(opts.combination_budget) + " exhausted");
          out.partial = true;
          goto finish;
        }
        for (auto cls : live) {
          // Least start of gamma >= drop(gamma) in the class, and at least U.
          std::int64_t cc = ga.drop + mod_b(static_cast<std::int64_t>(cls) - ga.drop, B);
          std::int64_t V = std::max(U[cls], cc);
          for (auto E : Ecls) {
            std::int64_t base = V + ga.eff + E;
            auto r = static_cast<std::size_t>(base % B);
            Best& bs = row[r];
            if (base < bs.base)
              bs = {base, q1, ga.end, Uarg_id[cls], be.id, ga.id, (V - Uarg_a[cls]) / B, E};
          }
        }
      }
    }
  }
finish:
  for (std::size_t B = 1; B < best.size(); ++B)
    for (std::size_t r = 0; r < best[B].size(); ++r) {
      const Best& bs = best[B][r];
      if (bs.base == kInf) continue;
      LinearComponent c;
      c.base = bs.base;
      c.period = static_cast<std::int64_t>(B);
      c.cycle_state = bs.q1;
      c.gamma_state = bs.g;
      c.k = bs.k;
      c.theta_eff = bs.theta_eff;
      c.alpha = alpha_dp.path(bs.a_id);
      c.beta = dps[bs.q1]->path(bs.b_id);
      c.gamma = dps[bs.q1]->path(bs.g_id);
      out.components.push_back(std::move(c));
    }
  // Drop components contained in a kept one with a dividing period.
  std::vector<LinearComponent> kept;
  for (auto& c : out.components) {
    bool covered = false;
    for (const auto& k : kept)
      if (c.period % k.period == 0 && c.base >= k.base && (c.base - k.base) % k.period == 0) {
        covered = true;
        break;
      }
    if (!covered) kept.push_back(std::move(c));
  }
  out.components.swap(kept);
  return out;
}

bool semilinear_member(const SemilinearSet& set, std::int64_t n) {
  if (n < 0) return false;
  auto it = std::upper_bound(set.explicit_intervals.begin(), set.explicit_intervals.end(),
                             std::make_pair(n, std::numeric_limits<std::int64_t>::max()));
  if (it != set.explicit_intervals.begin() && std::prev(it)->second >= n) return true;
  for (const auto& c : set.components)
    if (n >= c.base && (n - c.base) % c.period == 0) return true;
  return false;
}

TransPath materialize_component(const Vass1System& sys, const LinearComponent& c,
                                std::size_t q0, std::size_t q_target, std::uint64_t budget) {
  auto th = vass1_box_decide(sys, c.gamma_state, q_target, c.theta_eff, budget);
  if (!th.reachable) throw InternalError("closing suffix of a component is not box-reachable");
  TransPath p = c.alpha;
  for (std::int64_t i = 0; i < c.k; ++i) p.insert(p.end(), c.beta.begin(), c.beta.end());
  p.insert(p.end(), c.gamma.begin(), c.gamma.end());
  p.insert(p.end(), th.witness->begin(), th.witness->end());
  if (!vass1_is_box_reaching(sys, p, q0, q_target, c.base))
    throw InternalError("component path alpha beta^k gamma theta is not box-reaching");
  return p;
}

}  // namespace boxvas
