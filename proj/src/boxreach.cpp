#include "boxvas/boxreach.hpp"

#include "boxvas/steinitz.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <thread>
#include <unordered_map>

namespace boxvas {

std::string to_string(ThresholdCase c) {
  switch (c) {
    case ThresholdCase::ContainsQuadrant: return "ContainsQuadrant";
    case ThresholdCase::ContainedInQuadrant: return "ContainedInQuadrant";
    case ThresholdCase::IntersectsQuadrant: return "IntersectsQuadrant";
    case ThresholdCase::OneDimensional: return "OneDimensional";
    case ThresholdCase::HalfOrFullPlane: return "HalfOrFullPlane";
    case ThresholdCase::Degenerate: return "Degenerate";
  }
  return "?";
}

std::string to_string(WitnessMethod m) {
  switch (m) {
    case WitnessMethod::BfsSearch: return "BfsSearch";
    case WitnessMethod::ProofCase1: return "ProofCase1";
    case WitnessMethod::ProofCase2: return "ProofCase2";
    case WitnessMethod::Direct: return "Direct";
  }
  return "?";
}

namespace {

using I128 = __int128;
constexpr std::uint64_t kDenseLimit = std::uint64_t(1) << 25;

// Visited marks: generator index + 1, kRoot for the origin, 0 for unseen.
class Marks {
 public:
  static constexpr std::uint32_t kRoot = std::numeric_limits<std::uint32_t>::max();
  explicit Marks(std::uint64_t size) : dense_(size <= kDenseLimit) {
    if (dense_) vec_.assign(size, 0);
  }
  std::uint32_t get(std::uint64_t k) const {
    if (dense_) return vec_[k];
    auto it = map_.find(k);
    return it == map_.end() ? 0 : it->second;
  }
  void set(std::uint64_t k, std::uint32_t v) {
    if (dense_) vec_[k] = v;
    else map_.emplace(k, v);
  }

 private:
  bool dense_;
  std::vector<std::uint32_t> vec_;
  std::unordered_map<std::uint64_t, std::uint32_t> map_;
};

std::int64_t require_i64(const Int& v, const char* what) {
  auto x = to_i64(v);
  if (!x || *x > (std::int64_t(1) << 62)) throw ResourceError(std::string(what) + " too large");
  return *x;
}

SearchResult grid_search(const VasSystem& vas, const Vec& target, const Vec& cap,
                         std::uint64_t budget) {
  const std::size_t d = vas.dim();
  if (target.size() != d || cap.size() != d)
    throw PreconditionError("target and cap must have " + std::to_string(d) + " entries");
  if (!all_nonneg(target)) throw PreconditionError("target must be nonnegative");
  if (!leq(target, cap)) throw PreconditionError("target must lie below the cap");

  std::vector<std::int64_t> c(d), t(d);
  for (std::size_t k = 0; k < d; ++k) {
    c[k] = require_i64(cap[k], "cap");
    t[k] = require_i64(target[k], "target");
  }
  std::vector<std::uint64_t> stride(d);
  I128 size = 1;
  for (std::size_t k = d; k-- > 0;) {
    stride[k] = static_cast<std::uint64_t>(size);
    size *= I128(c[k]) + 1;
    if (size > I128(std::numeric_limits<std::int64_t>::max()))
      throw ResourceError("grid of " + to_string(cap) + " cannot be indexed in 63 bits");
  }

  // Generators that fit in the grid, with their key offsets.
  std::vector<std::size_t> orig;
  std::vector<std::vector<std::int64_t>> g;
  std::vector<std::int64_t> delta;
  for (std::size_t i = 0; i < vas.size(); ++i) {
    const Vec& v = vas.generator(i);
    if (is_zero(v)) continue;
    bool fits = true;
    for (std::size_t k = 0; k < d && fits; ++k)
      if (abs_int(v[k]) > cap[k]) fits = false;
    if (!fits) continue;
    std::vector<std::int64_t> w(d);
    I128 off = 0;
    for (std::size_t k = 0; k < d; ++k) {
      w[k] = *to_i64(v[k]);
      off += I128(w[k]) * I128(stride[k]);
    }
    orig.push_back(i);
    g.push_back(std::move(w));
    delta.push_back(static_cast<std::int64_t>(off));
  }

  SearchResult res;
  std::uint64_t tkey = 0;
  for (std::size_t k = 0; k < d; ++k) tkey += static_cast<std::uint64_t>(t[k]) * stride[k];
  res.visited = 1;
  if (tkey == 0) {
    res.reachable = true;
    res.witness = Path{};
    return res;
  }
  Marks marks(static_cast<std::uint64_t>(size));
  marks.set(0, Marks::kRoot);
  std::vector<std::uint64_t> frontier{0}, next;
  std::vector<std::int64_t> x(d);
  while (!frontier.empty()) {
    next.clear();
    for (auto key : frontier) {
      std::uint64_t rem = key;
      for (std::size_t k = 0; k < d; ++k) {
        x[k] = static_cast<std::int64_t>(rem / stride[k]);
        rem %= stride[k];
      }
      for (std::size_t j = 0; j < g.size(); ++j) {
        bool ok = true;
        for (std::size_t k = 0; k < d && ok; ++k) {
          std::int64_t y = x[k] + g[j][k];
          ok = y >= 0 && y <= c[k];
        }
        if (!ok) continue;
        std::uint64_t nk = static_cast<std::uint64_t>(static_cast<std::int64_t>(key) + delta[j]);
        if (marks.get(nk) != 0) continue;
        marks.set(nk, static_cast<std::uint32_t>(j + 1));
        if (++res.visited > budget)
          throw ResourceError("node budget of " + std::to_string(budget) +
                              " grid points exhausted");
        if (nk == tkey) {
          Path p;
          for (std::uint64_t cur = nk; cur != 0;) {
            std::uint32_t m = marks.get(cur);
            p.push_back(orig[m - 1]);
            cur = static_cast<std::uint64_t>(static_cast<std::int64_t>(cur) - delta[m - 1]);
          }
          std::reverse(p.begin(), p.end());
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

bool within_cap(const VasSystem& vas, const Path& p, const Vec& cap) {
  Vec cur(vas.dim(), 0);
  for (auto i : p) {
    cur = add(cur, vas.generator(i));
    if (!all_nonneg(cur) || !leq(cur, cap)) return false;
  }
  return true;
}

bool ge0(const Vec& v) { return all_nonneg(v); }

Vec primitive(const Vec& v) {
  Int g = gcd_int(v[0], v[1]);
  return {v[0] / g, v[1] / g};
}

Int line_coordinate(const Vec& b, const Vec& v) {
  return b[0] != 0 ? Int(v[0] / b[0]) : Int(v[1] / b[1]);
}

std::string str(const Int& v) { return to_string(v); }

}  // namespace

SearchResult decide_box_reach(const VasSystem& vas, const Vec& target, std::uint64_t budget) {
  SearchResult r = grid_search(vas, target, target, budget);
  if (r.reachable && !is_box_reaching_trace(vas, *r.witness, target))
    throw InternalError("BFS witness is not box-reaching");
  return r;
}

SearchResult decide_reach_capped(const VasSystem& vas, const Vec& target, const Vec& cap,
                                 std::uint64_t budget) {
  SearchResult r = grid_search(vas, target, cap, budget);
  if (r.reachable &&
      (effect(vas, *r.witness) != target || !within_cap(vas, *r.witness, cap)))
    throw InternalError("capped BFS witness leaves the cap");
  return r;
}

std::vector<std::int64_t> one_dim_min_peak(const std::vector<std::int64_t>& steps,
                                           std::int64_t limit, std::uint64_t budget) {
  if (limit < 0) throw PreconditionError("limit must be nonnegative");
  if (static_cast<std::uint64_t>(limit) + 1 > budget)
    throw ResourceError("1-D horizon " + std::to_string(limit) + " exceeds node budget " +
                        std::to_string(budget));
  std::vector<std::int64_t> cost(static_cast<std::size_t>(limit) + 1, -1);
  std::vector<std::int64_t> stack;
  for (std::int64_t c = 0; c <= limit; ++c) {
    // Nodes above c are unreached, so c can only be entered from below.
    bool enter = c == 0;
    for (auto a : steps)
      if (!enter && a > 0 && c - a >= 0 && cost[static_cast<std::size_t>(c - a)] >= 0) enter = true;
    if (!enter) continue;
    cost[static_cast<std::size_t>(c)] = c;
    stack.assign(1, c);
    while (!stack.empty()) {
      std::int64_t x = stack.back();
      stack.pop_back();
      for (auto a : steps) {
        std::int64_t y = x + a;
        if (y < 0 || y > c || cost[static_cast<std::size_t>(y)] >= 0) continue;
        cost[static_cast<std::size_t>(y)] = c;
        stack.push_back(y);
      }
    }
  }
  return cost;
}

OneVasThreshold one_vas_threshold(const std::vector<Int>& steps, std::uint64_t budget) {
  OneVasThreshold out;
  for (const auto& a : steps) {
    out.norm += abs_int(a);
    if (a > 0 && (out.min_positive_step == 0 || a < out.min_positive_step))
      out.min_positive_step = a;
  }
  if (out.min_positive_step == 0) {
    out.degenerate = true;
    return out;
  }
  const Int& n = out.norm;
  const Int n3 = n * n * n;
  // A reachable k has a path with peak below k + 2||V||: take a negative step
  // whenever the counter is at least ||V||, a positive one otherwise.
  out.horizon = 2 * n3 + 2 * n;
  if (out.horizon + 1 > Int(budget))
    throw ResourceError("1-VAS horizon " + str(out.horizon) + " exceeds node budget " +
                        std::to_string(budget));
  std::vector<std::int64_t> s;
  for (const auto& a : steps)
    if (a != 0) s.push_back(*to_i64(a));
  auto cost = one_dim_min_peak(s, *to_i64(out.horizon), budget);
  std::int64_t m1 = 0;
  const std::int64_t k_max = *to_i64(n3), n_max = *to_i64(2 * n3);
  for (std::int64_t k = 0; k <= k_max; ++k)
    if (cost[static_cast<std::size_t>(k)] >= 0) m1 = std::max(m1, cost[static_cast<std::size_t>(k)]);
  // Below 2||V||^3 the pumping argument does not apply; check directly.
  for (std::int64_t x = 0; x <= n_max; ++x)
    if (cost[static_cast<std::size_t>(x)] > x) m1 = std::max(m1, x + 1);
  out.m1 = m1;
  return out;
}

OneVasThreshold one_vas_threshold(const VasSystem& vas, std::uint64_t budget) {
  if (vas.dim() != 1) throw UnsupportedDimensionError("one_vas_threshold needs a 1-VAS");
  std::vector<Int> s;
  for (const auto& g : vas.generators()) s.push_back(g[0]);
  return one_vas_threshold(s, budget);
}

ThresholdReport compute_threshold(const VasSystem& vas, const DeepConstant& M,
                                  std::uint64_t budget) {
  if (vas.dim() != 2)
    throw UnsupportedDimensionError("compute_threshold requires a 2-VAS, got dimension " +
                                    std::to_string(vas.dim()));
  if (M.value < 0) throw PreconditionError("deep constant must be nonnegative");
  ThresholdReport rep;
  rep.M_used = M;
  rep.cone = cone_from_generators(vas);
  const Int& n = vas.norm();
  bool all_ge = true, any_ge = false;
  for (const auto& g : vas.generators()) {
    if (!ge0(g)) all_ge = false;
    else if (!is_zero(g)) any_ge = true;
  }
  if (all_ge) {
    rep.case_tag = ThresholdCase::ContainedInQuadrant;
    rep.W = 0;
    rep.formula_trace = "all generators nonnegative, reach = boxreach: W = 0";
    return rep;
  }
  if (!any_ge) {
    rep.case_tag = ThresholdCase::Degenerate;
    rep.degenerate = true;
    rep.W = 0;
    rep.formula_trace = "no nonzero generator is nonnegative, reach = {0}: W = 0 (vacuous)";
    return rep;
  }
  const auto cls = rep.cone.classification;
  if (cls == ConeClass::Ray || cls == ConeClass::Line) {
    Vec b = primitive(*rep.cone.chi1);
    if (!ge0(b)) b = scale(-1, b);
    if (!ge0(b)) {
      rep.case_tag = ThresholdCase::Degenerate;
      rep.degenerate = true;
      rep.W = 1;
      rep.formula_trace = "reach lies on a line meeting N^2 only at 0: W = 1 (vacuous)";
      return rep;
    }
    std::vector<Int> t;
    for (auto i : rep.cone.nonzero_indices) t.push_back(line_coordinate(b, vas.generator(i)));
    rep.case_tag = ThresholdCase::OneDimensional;
    rep.one_dim = one_vas_threshold(t, budget);
    rep.line_direction = b;
    rep.W = rep.one_dim->m1 * inf_norm(b);
    rep.formula_trace = "W = M1 * ||b|| = " + str(rep.one_dim->m1) + " * " + str(inf_norm(b));
    if (b[0] == 0 || b[1] == 0) {
      rep.W = std::max(rep.W, Int(1));
      rep.formula_trace += ", at least 1 since b = " + to_string(b) + " lies on an axis";
    }
    rep.formula_trace += " = " + str(rep.W);
    return rep;
  }
  const Int n3 = n * n * n;
  switch (rep.cone.quadrant_relation) {
    case QuadrantRelation::ContainsQuadrant:
      rep.case_tag = cls == ConeClass::ProperCone ? ThresholdCase::ContainsQuadrant
                                                  : ThresholdCase::HalfOrFullPlane;
      rep.W = 16 * n3 + M.value;
      rep.formula_trace = "W = 16*||V||^3 + M = 16*" + str(n) + "^3 + " + str(M.value) + " = " +
                          str(rep.W);
      return rep;
    case QuadrantRelation::IntersectsViaXAxisSide:
    case QuadrantRelation::IntersectsViaYAxisSide:
      rep.case_tag = ThresholdCase::IntersectsQuadrant;
      rep.W = 16 * n3 * n + 4 * n + n * M.value;
      rep.formula_trace = "W = 16*||V||^4 + 4*||V|| + ||V||*M = 16*" + str(n) + "^4 + 4*" +
                          str(n) + " + " + str(n) + "*" + str(M.value) + " = " + str(rep.W);
      return rep;
    case QuadrantRelation::ContainedInQuadrant:
      rep.case_tag = ThresholdCase::ContainedInQuadrant;
      rep.W = 0;
      rep.formula_trace = "cone inside the quadrant: W = 0";
      return rep;
    case QuadrantRelation::Other:
      break;
  }
  rep.case_tag = ThresholdCase::Degenerate;
  rep.degenerate = true;
  rep.W = 1;
  rep.formula_trace = "cone misses the open quadrant: W = 1 (vacuous)";
  return rep;
}

namespace {

// theta . rho' . theta with rho' a Steinitz order of the coefficients of
// target - 2 s_pos.
Path proof_case1(const VasSystem& vas, const ConeData& cone, const Vec& target,
                 const DeepConstant& M) {
  SeedVector seed = compute_seed(vas);
  Vec r = sub(target, scale(2, seed.s_pos));
  auto ic = int_cone_member(vas, cone, r);
  if (ic.status == IntConeResult::Status::Undecided)
    throw ResourceError("integer-cone search budget exhausted for " + to_string(r));
  if (ic.status == IntConeResult::Status::NonMember) {
    if (is_m_deep(cone, r, M) && lattice_member(vas, r).member)
      throw InternalError("M = " + str(M.value) + " is too small: " + to_string(r) +
                          " is M-deep and in the lattice but not in the integer cone");
    throw InternalError(to_string(r) + " is not in the integer cone");
  }
  Path rho = steinitz_path(vas, ic.coefficients);
  Path p = seed.s_pos_witness;
  p.insert(p.end(), rho.begin(), rho.end());
  p.insert(p.end(), seed.s_pos_witness.begin(), seed.s_pos_witness.end());
  return p;
}

// mu . xi' . eta using 4||V|| facet-parallel positive steps of the evidence path.
Path proof_case2(const VasSystem& vas, const Vec& f_up, const Path& evidence) {
  const Int& n = vas.norm();
  const std::size_t half = static_cast<std::size_t>(*to_i64(2 * n));
  std::vector<Int> rest(vas.size(), 0);
  Path mu, eta;
  for (auto i : evidence) {
    const Vec& g = vas.generator(i);
    bool parallel = dot(g, f_up) == 0 && g[0] > 0;
    if (parallel && mu.size() < half) mu.push_back(i);
    else if (parallel && eta.size() < half) eta.push_back(i);
    else rest[i] += 1;
  }
  if (eta.size() < half)
    throw InternalError("evidence path has " + std::to_string(mu.size() + eta.size()) +
                        " steps parallel to the positive extreme ray, fewer than 4||V||");
  Path xi = steinitz_path(vas, rest);
  Path p = mu;
  p.insert(p.end(), xi.begin(), xi.end());
  p.insert(p.end(), eta.begin(), eta.end());
  return p;
}

}  // namespace

WitnessBundle synthesize_box_witness(const VasSystem& vas, const Vec& target,
                                     const ReachEvidence& evidence,
                                     const std::optional<DeepConstant>& M_opt,
                                     std::uint64_t budget) {
  if (vas.dim() != 2)
    throw UnsupportedDimensionError("synthesize_box_witness requires a 2-VAS");
  if (target.size() != 2 || !all_nonneg(target))
    throw PreconditionError("target must be a nonnegative 2-vector");
  const DeepConstant M = M_opt.value_or(default_deep_constant(vas));
  ThresholdReport rep = compute_threshold(vas, M, budget);
  if (target[0] < rep.W || target[1] < rep.W)
    throw PreconditionError("target " + to_string(target) + " is below W = " + str(rep.W));

  std::vector<Int> coeffs;
  if (evidence.path) {
    if (!is_valid_n_trace(vas, *evidence.path, Vec{0, 0}) ||
        effect(vas, *evidence.path) != target)
      throw PreconditionError("evidence path is not an N-path from 0 to the target");
    coeffs.assign(vas.size(), 0);
    for (auto i : *evidence.path) coeffs[i] += 1;
  } else if (evidence.coefficients) {
    coeffs = *evidence.coefficients;
    if (coeffs.size() != vas.size())
      throw PreconditionError("evidence needs one coefficient per generator");
    Vec sum{0, 0};
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      if (coeffs[i] < 0) throw PreconditionError("evidence coefficients must be nonnegative");
      sum = add(sum, scale(coeffs[i], vas.generator(i)));
    }
    if (sum != target) throw PreconditionError("evidence coefficients do not sum to the target");
  } else {
    auto ic = int_cone_member(vas, rep.cone, target);
    if (ic.status == IntConeResult::Status::Undecided)
      throw ResourceError("integer-cone search budget exhausted for the target");
    if (ic.status == IntConeResult::Status::NonMember)
      throw PreconditionError("target is not in the integer cone, so it is not reachable");
    coeffs = ic.coefficients;
  }

  WitnessBundle wb;
  wb.target = target;
  Path p;
  switch (rep.case_tag) {
    case ThresholdCase::Degenerate:
      if (!is_zero(target))
        throw PreconditionError("degenerate system: no nonzero target at or above W = " +
                                str(rep.W) + " is reachable (" + rep.formula_trace + ")");
      wb.method = WitnessMethod::Direct;
      break;
    case ThresholdCase::ContainedInQuadrant:
      // Nonnegative steps never leave the box of their total.
      wb.method = WitnessMethod::Direct;
      if (evidence.path) p = *evidence.path;
      else
        for (std::size_t i = 0; i < coeffs.size(); ++i)
          for (Int k = 0; k < coeffs[i]; ++k) p.push_back(i);
      break;
    case ThresholdCase::OneDimensional: {
      wb.method = WitnessMethod::BfsSearch;
      auto r = decide_box_reach(vas, target, budget);
      if (!r.reachable)
        throw InternalError("reachable target above the 1-D threshold is not box-reachable");
      p = *r.witness;
      break;
    }
    case ThresholdCase::ContainsQuadrant:
    case ThresholdCase::HalfOrFullPlane:
      wb.method = WitnessMethod::ProofCase1;
      p = proof_case1(vas, rep.cone, target, M);
      break;
    case ThresholdCase::IntersectsQuadrant: {
      SeedVector seed = compute_seed(vas);
      Vec r = sub(target, scale(2, seed.s_pos));
      if (in_cone(rep.cone, r) && is_m_deep(rep.cone, r, M)) {
        wb.method = WitnessMethod::ProofCase1;
        p = proof_case1(vas, rep.cone, target, M);
        break;
      }
      if (!evidence.path)
        throw EvidenceInsufficientError(
            "target - 2 s_pos is not M-deep; the second proof case needs an N-path as evidence");
      const ConeData& c = rep.cone;
      Vec f_up;
      if (c.classification == ConeClass::HalfPlane) f_up = c.facets[0];
      else if (c.quadrant_relation == QuadrantRelation::IntersectsViaXAxisSide) f_up = c.facets[0];
      else f_up = c.facets[1];
      wb.method = WitnessMethod::ProofCase2;
      p = proof_case2(vas, f_up, *evidence.path);
      break;
    }
  }
  if (!is_box_reaching_trace(vas, p, target))
    throw InternalError("synthesized witness (" + to_string(wb.method) +
                        ") is not box-reaching");
  wb.path = make_path_record(vas, p);
  return wb;
}

WindowReport verify_window(const VasSystem& vas, const Vec& lo, const Vec& size,
                           std::optional<Int> cap_margin, std::uint64_t budget,
                           unsigned threads) {
  const std::size_t d = vas.dim();
  if (lo.size() != d || size.size() != d)
    throw PreconditionError("window corner and size need " + std::to_string(d) + " entries");
  if (!all_nonneg(lo) || !all_nonneg(size))
    throw PreconditionError("window must lie in the nonnegative orthant");
  WindowReport rep;
  rep.cap_margin = cap_margin.value_or(2 * vas.norm());
  if (rep.cap_margin < 0) throw PreconditionError("cap margin must be nonnegative");

  std::vector<Vec> targets;
  {
    Int count = 1;
    for (const auto& s : size) count *= s;
    if (count > Int(10'000'000)) throw ResourceError("window has more than 1e7 targets");
    if (count == 0) return rep;
    Vec off(d, 0);
    while (true) {
      targets.push_back(add(lo, off));
      std::size_t k = d;
      while (k > 0) {
        --k;
        if (++off[k] < size[k]) break;
        off[k] = 0;
        if (k == 0) goto done;
      }
    }
  done:;
  }
  enum Outcome : std::uint8_t { kUnreach, kAgree, kViolation, kSkipped };
  std::vector<Outcome> out(targets.size(), kUnreach);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < targets.size(); i = next++) {
      const Vec& t = targets[i];
      Vec cap = t;
      for (auto& x : cap) x += rep.cap_margin;
      try {
        if (!decide_reach_capped(vas, t, cap, budget).reachable) continue;
        out[i] = decide_box_reach(vas, t, budget).reachable ? kAgree : kViolation;
      } catch (const ResourceError&) {
        out[i] = kSkipped;
      }
    }
  };
  unsigned nt = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(targets.size())));
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < nt; ++k) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  auto smaller = [](const Vec& a, const Vec& b) {
    Int ma = inf_norm(a), mb = inf_norm(b);
    return ma != mb ? ma < mb : a < b;
  };
  for (std::size_t i = 0; i < targets.size(); ++i) {
    ++rep.checked;
    if (out[i] == kSkipped) {
      rep.skipped.push_back(targets[i]);
      continue;
    }
    if (out[i] != kUnreach) ++rep.capped_reachable;
    if (out[i] == kViolation) {
      rep.violations.push_back(targets[i]);
      if (!rep.min_violation || smaller(targets[i], *rep.min_violation))
        rep.min_violation = targets[i];
    }
  }
  return rep;
}

}  // namespace boxvas
