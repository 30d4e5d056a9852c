#include "boxvas/cli.hpp"

#include "boxvas/instance.hpp"
#include "boxvas/lift.hpp"
#include "boxvas/steinitz.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <functional>
#include <map>
#include <sstream>

namespace boxvas {

namespace {

using nlohmann::json;

json jint(const Int& v) {
  if (auto x = to_i64(v)) return *x;
  return to_string(v);
}

json jvec(const Vec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(jint(x));
  return a;
}

json jindices(const std::vector<std::size_t>& p) {
  json a = json::array();
  for (auto i : p) a.push_back(i);
  return a;
}

std::string vec_text(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
  return s + ")";
}

struct Envelope {
  json decision = nullptr;
  json payload = json::object();
  json witness = nullptr;
  std::uint64_t visited = 0;
  json warnings = json::array();
  std::string summary;
};

struct Options {
  std::uint64_t node_budget = kDefaultNodeBudget;
  unsigned threads = 1;
  std::string instance;
  std::string target, cap, lo, size, margin, m, evidence, from, to;
  std::vector<std::string> vectors;
  std::int64_t radius = -1, x = 0, b_lps = 0, member = -1;
  std::uint64_t combination_budget = SemilinearOptions{}.combination_budget;
};

const VasSystem& need_vas(const InstanceFile& f) {
  if (f.kind != InstanceFile::Kind::Vas) throw PreconditionError("command needs a 'vas' instance");
  return *f.vas;
}

const Vass1System& need_vass1(const InstanceFile& f) {
  if (f.kind != InstanceFile::Kind::Vass1)
    throw PreconditionError("command needs a 'vass1' instance");
  return *f.vass1;
}

Vec target_of(const VasSystem& vas, const std::string& text, const char* what) {
  Vec t = parse_vector(text);
  if (t.size() != vas.dim())
    throw ParseError(0, std::string(what) + " has " + std::to_string(t.size()) +
                            " entries, the system has dimension " + std::to_string(vas.dim()));
  return t;
}

std::size_t state_of(const Vass1System& s, const std::string& name) {
  auto q = s.state_index(name);
  if (!q) throw ParseError(0, "unknown state '" + name + "'");
  return *q;
}

DeepConstant deep_constant(const VasSystem& vas, const std::string& m) {
  if (m.empty()) return default_deep_constant(vas);
  Vec v = parse_vector(m);
  if (v.size() != 1 || v[0] < 0) throw ParseError(0, "--m must be one nonnegative integer");
  return {v[0], DeepConstant::Provenance::Configured};
}

json cone_json(const ConeData& c) {
  json j;
  j["class"] = to_string(c.classification);
  j["quadrant_relation"] = to_string(c.quadrant_relation);
  j["chi1"] = c.chi1 ? jvec(*c.chi1) : json(nullptr);
  j["chi2"] = c.chi2 ? jvec(*c.chi2) : json(nullptr);
  json f = json::array();
  for (const auto& v : c.facets) f.push_back(jvec(v));
  j["facets"] = f;
  return j;
}

void cmd_decide_box(const Options& o, Envelope& e) {
  auto f = load_instance(o.instance);
  const auto& vas = need_vas(f);
  Vec t = target_of(vas, o.target, "--target");
  auto r = decide_box_reach(vas, t, o.node_budget);
  e.visited = r.visited;
  e.decision = r.reachable;
  e.payload["target"] = jvec(t);
  if (r.witness) {
    if (!is_box_reaching_trace(vas, *r.witness, t))
      throw InternalError("witness does not box-reach the target");
    e.witness = jindices(*r.witness);
  }
  e.summary = "target " + vec_text(t) + (r.reachable ? " is" : " is not") + " box-reachable";
}

void cmd_decide_reach(const Options& o, Envelope& e) {
  auto f = load_instance(o.instance);
  const auto& vas = need_vas(f);
  Vec t = target_of(vas, o.target, "--target");
  Vec cap = target_of(vas, o.cap, "--cap");
  auto r = decide_reach_capped(vas, t, cap, o.node_budget);
  e.visited = r.visited;
  e.decision = r.reachable;
  e.payload["target"] = jvec(t);
  e.payload["cap"] = jvec(cap);
  if (r.witness) {
    // Witness checks: an N-path with the right effect whose prefixes stay under cap.
    auto dp = drop_peak(vas, *r.witness);
    if (!is_valid_n_trace(vas, *r.witness, Vec(vas.dim(), 0)) || effect(vas, *r.witness) != t ||
        !leq(dp.peak, cap))
      throw InternalError("witness does not reach the target under the cap");
    e.witness = jindices(*r.witness);
  }
  e.summary = "target " + vec_text(t) + (r.reachable ? " is" : " is not") +
              " reachable under cap " + vec_text(cap);
}

void cmd_threshold(const Options& o, Envelope& e) {
  auto f = load_instance(o.instance);
  const auto& vas = need_vas(f);
  DeepConstant M = deep_constant(vas, o.m);
  auto rep = compute_threshold(vas, M, o.node_budget);
  e.payload["W"] = jint(rep.W);
  e.payload["case"] = to_string(rep.case_tag);
  e.payload["degenerate"] = rep.degenerate;
  e.payload["M"] = jint(rep.M_used.value);
  e.payload["M_provenance"] = to_string(rep.M_used.provenance);
  e.payload["formula"] = rep.formula_trace;
  e.payload["cone"] = cone_json(rep.cone);
  if (rep.one_dim) {
    e.payload["one_dim"] = {{"m1", jint(rep.one_dim->m1)},
                            {"horizon", jint(rep.one_dim->horizon)},
                            {"degenerate", rep.one_dim->degenerate}};
  }
  if (rep.line_direction) e.payload["line_direction"] = jvec(*rep.line_direction);
  if (rep.degenerate) e.warnings.push_back("reach misses the open quadrant; W is vacuous");
  if (M.provenance == DeepConstant::Provenance::DefaultHeuristic && o.radius < 0)
    e.warnings.push_back("default deep constant used without --validate-radius");
  if (o.radius >= 0) {
    if (vas.dim() != 2) throw UnsupportedDimensionError("the deep-constant scan needs dimension 2");
    auto scan = ditc_falsification_scan(vas, M, o.radius);
    json ce = json::array(), un = json::array();
    for (const auto& v : scan.counterexamples) ce.push_back(jvec(v));
    for (const auto& v : scan.undecided) un.push_back(jvec(v));
    e.payload["ditc"] = {{"radius", o.radius},
                         {"scanned", scan.scanned},
                         {"deep_lattice_points", scan.deep_lattice_points},
                         {"counterexamples", ce},
                         {"undecided", un}};
    e.decision = scan.counterexamples.empty() && scan.undecided.empty();
    if (!scan.counterexamples.empty())
      e.warnings.push_back("deep constant falsified at radius " + std::to_string(o.radius));
  }
  e.summary = "W = " + to_string(rep.W) + " (" + to_string(rep.case_tag) + ", M = " +
              to_string(rep.M_used.value) + ")";
}

void cmd_seed(const Options& o, Envelope& e) {
  auto f = load_instance(o.instance);
  const auto& vas = need_vas(f);
  auto s = compute_seed(vas);
  if (!is_box_reaching_trace(vas, s.witness.indices, s.s))
    throw InternalError("seed witness does not box-reach s");
  e.payload["s"] = jvec(s.s);
  e.payload["s_pos"] = jvec(s.s_pos);
  e.payload["from_positive_generator"] = s.from_positive_generator;
  e.payload["witness_drop"] = jvec(s.witness.drop);
  e.payload["witness_peak"] = jvec(s.witness.peak);
  e.witness = jindices(s.witness.indices);
  e.summary = "seed s = " + vec_text(s.s) + ", s_pos = " + vec_text(s.s_pos);
}

void cmd_steinitz(const Options& o, Envelope& e) {
  std::vector<Vec> vs;
  for (const auto& t : o.vectors) vs.push_back(parse_vector(t));
  for (const auto& v : vs)
    if (v.size() != vs.front().size()) throw ParseError(0, "--vectors have mixed dimensions");
  auto r = steinitz_reorder(vs);
  if (!r.verified) throw InternalError("Steinitz corridor check failed");
  auto w = corridor_width(vs, r.permutation);
  e.payload["permutation"] = jindices(r.permutation);
  e.payload["corridor_bound"] = jint(r.corridor_bound);
  e.payload["corridor_width"] = w.str();
  e.decision = r.verified;
  e.summary = "reordered " + std::to_string(vs.size()) + " vectors, corridor width " + w.str() +
              " <= " + to_string(r.corridor_bound);
}

ReachEvidence parse_evidence(const std::string& text) {
  ReachEvidence ev;
  if (text.empty()) return ev;
  auto colon = text.find(':');
  if (colon == std::string::npos) throw ParseError(0, "--evidence must be coeffs:... or path:...");
  std::string kind = text.substr(0, colon), body = text.substr(colon + 1);
  if (kind == "coeffs") {
    ev.coefficients = parse_vector(body);
  } else if (kind == "path") {
    Path p;
    if (!body.empty())
      for (const auto& x : parse_vector(body)) {
        if (x < 0) throw ParseError(0, "negative generator index in path evidence");
        p.push_back(x.convert_to<std::size_t>());
      }
    ev.path = p;
  } else {
    throw ParseError(0, "unknown evidence kind '" + kind + "'");
  }
  return ev;
}

void cmd_witness(const Options& o, Envelope& e) {
  auto f = load_instance(o.instance);
  const auto& vas = need_vas(f);
  Vec t = target_of(vas, o.target, "--target");
  auto ev = parse_evidence(o.evidence);
  DeepConstant M = deep_constant(vas, o.m);
  auto b = synthesize_box_witness(vas, t, ev, M, o.node_budget);
  if (!is_box_reaching_trace(vas, b.path.indices, t))
    throw InternalError("synthesized witness does not box-reach the target");
  e.decision = true;
  e.payload["target"] = jvec(t);
  e.payload["method"] = to_string(b.method);
  e.payload["M"] = jint(M.value);
  e.payload["M_provenance"] = to_string(M.provenance);
  e.payload["length"] = b.path.indices.size();
  e.witness = jindices(b.path.indices);
  e.summary = "box-reaching witness of length " + std::to_string(b.path.indices.size()) +
              " for " + vec_text(t) + " via " + to_string(b.method);
}

void cmd_lift(const Options& o, Envelope& e) {
  auto f = load_instance(o.instance);
  const auto& vas = need_vas(f);
  auto L = lift_vas(vas);
  json gens = json::array();
  for (const auto& g : L.lifted.generators()) gens.push_back(jvec(g));
  e.payload["lifted_dim"] = L.lifted.dim();
  e.payload["lifted_generators"] = gens;
  e.payload["mirror_index_map"] = jindices(L.mirror_index_map);
  e.payload["unit_indices"] = jindices(L.unit_indices);
  e.summary = "lifted to dimension " + std::to_string(L.lifted.dim()) + " with " +
              std::to_string(L.lifted.size()) + " generators";
  if (o.target.empty()) return;
  Vec t = target_of(vas, o.target, "--target");
  auto d = decide_box_via_lift(vas, t, o.node_budget);
  e.visited = d.visited;
  e.decision = d.reachable;
  e.payload["target"] = jvec(t);
  if (d.projected_witness) {
    if (!is_box_reaching_trace(vas, *d.projected_witness, t))
      throw InternalError("projected lift witness does not box-reach the target");
    e.witness = jindices(*d.projected_witness);
    e.payload["lifted_witness"] = jindices(*d.lifted_witness);
  }
  e.summary += "; target " + vec_text(t) + (d.reachable ? " is" : " is not") + " box-reachable";
}

void cmd_verify_window(const Options& o, Envelope& e) {
  auto f = load_instance(o.instance);
  const auto& vas = need_vas(f);
  Vec lo = target_of(vas, o.lo, "--lo"), size = target_of(vas, o.size, "--size");
  std::optional<Int> margin;
  if (!o.margin.empty()) {
    Vec m = parse_vector(o.margin);
    if (m.size() != 1 || m[0] < 0) throw ParseError(0, "--margin must be one nonnegative integer");
    margin = m[0];
  }
  auto r = verify_window(vas, lo, size, margin, o.node_budget, o.threads);
  json viol = json::array(), skip = json::array();
  for (const auto& v : r.violations) viol.push_back(jvec(v));
  for (const auto& v : r.skipped) skip.push_back(jvec(v));
  e.decision = r.violations.empty();
  e.payload["lo"] = jvec(lo);
  e.payload["size"] = jvec(size);
  e.payload["cap_margin"] = jint(r.cap_margin);
  e.payload["checked"] = r.checked;
  e.payload["capped_reachable"] = r.capped_reachable;
  e.payload["violations"] = viol;
  e.payload["skipped"] = skip;
  e.payload["min_violation"] = r.min_violation ? jvec(*r.min_violation) : json(nullptr);
  if (!r.skipped.empty())
    e.warnings.push_back(std::to_string(r.skipped.size()) + " targets skipped on budget");
  e.summary = std::to_string(r.checked) + " targets checked, " +
              std::to_string(r.violations.size()) + " violations, " +
              std::to_string(r.skipped.size()) + " skipped";
}

void cmd_vass1_decide(const Options& o, Envelope& e) {
  auto f = load_instance(o.instance);
  const auto& s = need_vass1(f);
  std::size_t from = o.from.empty() ? f.init : state_of(s, o.from);
  std::size_t to = state_of(s, o.to);
  auto r = vass1_box_decide(s, from, to, o.x, o.node_budget);
  e.visited = r.visited;
  e.decision = r.reachable;
  e.payload["from"] = s.states()[from];
  e.payload["to"] = s.states()[to];
  e.payload["x"] = o.x;
  if (r.witness) {
    if (!vass1_is_box_reaching(s, *r.witness, from, to, o.x))
      throw InternalError("VASS witness is not box-reaching");
    e.witness = jindices(*r.witness);
  }
  e.summary = "(" + std::to_string(o.x) + ", " + s.states()[to] + ")" +
              (r.reachable ? " is" : " is not") + " box-reachable from " + s.states()[from];
}

void cmd_vass1_semilinear(const Options& o, Envelope& e) {
  auto f = load_instance(o.instance);
  const auto& s = need_vass1(f);
  std::size_t from = o.from.empty() ? f.init : state_of(s, o.from);
  std::size_t to = state_of(s, o.to);
  std::int64_t b = o.b_lps > 0 ? o.b_lps : default_b_lps(s);
  SemilinearOptions so;
  so.node_budget = o.node_budget;
  so.combination_budget = o.combination_budget;
  auto set = build_semilinear(s, from, to, b, so);
  json comps = json::array();
  for (const auto& c : set.components)
    comps.push_back({{"base", c.base},
                     {"period", c.period},
                     {"cycle_state", s.states()[c.cycle_state]},
                     {"gamma_state", s.states()[c.gamma_state]},
                     {"k", c.k},
                     {"theta_eff", c.theta_eff},
                     {"alpha", jindices(c.alpha)},
                     {"beta", jindices(c.beta)},
                     {"gamma", jindices(c.gamma)}});
  json iv = json::array();
  for (const auto& [a, z] : set.explicit_intervals) iv.push_back({a, z});
  e.payload["from"] = s.states()[from];
  e.payload["to"] = s.states()[to];
  e.payload["bounds"] = {{"b_lps", set.bounds.b_lps},
                         {"maxover", set.bounds.maxover},
                         {"p3", set.bounds.p3},
                         {"theta_len_bound", set.bounds.theta_len_bound},
                         {"theta_eff_bound", set.bounds.theta_eff_bound}};
  e.payload["explicit_intervals"] = iv;
  e.payload["components"] = comps;
  e.payload["work"] = set.work;
  e.payload["partial"] = set.partial;
  e.warnings.push_back("b_lps is a configured bound, not a proven length bound");
  if (o.member >= 0) {
    bool in = semilinear_member(set, o.member);
    e.decision = in;
    e.payload["member"] = o.member;
    // A member above the explicit range is certified by a materialized path.
    if (in && o.member > set.bounds.p3) {
      for (const auto& c : set.components)
        if (o.member >= c.base && (o.member - c.base) % c.period == 0) {
          LinearComponent shifted = c;
          shifted.k += (o.member - c.base) / c.period;
          shifted.base = o.member;
          auto p = materialize_component(s, shifted, from, to, o.node_budget);
          e.witness = jindices(p);
          break;
        }
    } else if (in) {
      auto r = vass1_box_decide(s, from, to, o.member, o.node_budget);
      if (!r.reachable) throw InternalError("explicit member is not box-reachable");
      e.witness = jindices(*r.witness);
    }
  }
  e.summary = std::to_string(set.components.size()) + " linear components, " +
              std::to_string(set.explicit_intervals.size()) + " explicit intervals up to " +
              std::to_string(set.bounds.p3);
}

}  // namespace

CliOutcome run_command(const std::vector<std::string>& args) {
  CLI::App app{"box-reachability toolkit for vector addition systems", "boxvas"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--node-budget", o.node_budget, "configuration budget per search");
  app.add_option("--threads", o.threads, "worker threads for verify-window")->check(CLI::Range(1u, 256u));

  std::map<CLI::App*, std::function<void(const Options&, Envelope&)>> handlers;
  auto sub = [&](const char* name, const char* help, auto fn) {
    CLI::App* s = app.add_subcommand(name, help);
    handlers[s] = fn;
    return s;
  };
  auto inst = [&](CLI::App* s) { s->add_option("--instance", o.instance, "instance file")->required(); };

  auto* c = sub("decide-box", "decide box-reachability of a target", cmd_decide_box);
  inst(c);
  c->add_option("--target", o.target, "comma-separated target")->required();

  c = sub("decide-reach", "decide reachability under a cap", cmd_decide_reach);
  inst(c);
  c->add_option("--target", o.target, "comma-separated target")->required();
  c->add_option("--cap", o.cap, "comma-separated cap")->required();

  c = sub("threshold", "compute the threshold W", cmd_threshold);
  inst(c);
  c->add_option("--m", o.m, "deep constant (default 16||V||^3)");
  c->add_option("--validate-radius", o.radius, "scan radius for the deep constant");

  c = sub("seed", "compute the seed vector", cmd_seed);
  inst(c);

  c = sub("steinitz", "Steinitz reordering of vectors", cmd_steinitz);
  c->add_option("--vectors", o.vectors, "comma-separated vectors")->required()->expected(1, -1);

  c = sub("witness", "synthesize a box-reaching witness above W", cmd_witness);
  inst(c);
  c->add_option("--target", o.target, "comma-separated target")->required();
  c->add_option("--evidence", o.evidence, "coeffs:c1,...,cn or path:i1,...,il");
  c->add_option("--m", o.m, "deep constant (default 16||V||^3)");

  c = sub("lift", "lift to the doubled system", cmd_lift);
  inst(c);
  c->add_option("--target", o.target, "decide this target via the lift");

  c = sub("verify-window", "compare capped and box reachability on a window", cmd_verify_window);
  inst(c);
  c->add_option("--lo", o.lo, "window corner")->required();
  c->add_option("--size", o.size, "window extent per coordinate")->required();
  c->add_option("--margin", o.margin, "cap margin (default 2||V||)");

  c = sub("vass1-decide", "decide box-reachability in a 1-VASS", cmd_vass1_decide);
  inst(c);
  c->add_option("--from", o.from, "start state (default: init)");
  c->add_option("--to", o.to, "target state")->required();
  c->add_option("--x", o.x, "target counter")->required()->check(CLI::NonNegativeNumber);

  c = sub("vass1-semilinear", "semilinear box-reachability set of a 1-VASS", cmd_vass1_semilinear);
  inst(c);
  c->add_option("--from", o.from, "start state (default: init)");
  c->add_option("--to", o.to, "target state")->required();
  c->add_option("--b-lps", o.b_lps, "LPS length bound (default |Q|(||T||+1)4)");
  c->add_option("--combination-budget", o.combination_budget, "LPS combination work limit");
  c->add_option("--member", o.member, "also decide membership of this value");

  CliOutcome out;
  json env;
  std::string command_name;
  auto start = std::chrono::steady_clock::now();
  Envelope e;
  std::string error_kind, error_msg;
  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
      app.parse(rev);
    } catch (const CLI::Success&) {
      out.stdout_text = app.help();
      return out;
    } catch (const CLI::ParseError& pe) {
      throw ParseError(0, pe.what());
    }
    for (auto& [s, fn] : handlers)
      if (s->parsed()) {
        command_name = s->get_name();
        fn(o, e);
      }
  } catch (const ParseError& ex) {
    out.exit_code = 2;
    error_kind = "usage";
    error_msg = ex.what();
  } catch (const ResourceError& ex) {
    out.exit_code = 4;
    error_kind = "resource";
    error_msg = ex.what();
  } catch (const InternalError& ex) {
    out.exit_code = 5;
    error_kind = "internal";
    error_msg = ex.what();
  } catch (const PreconditionError& ex) {
    out.exit_code = 3;
    error_kind = "precondition";
    error_msg = ex.what();
  } catch (const MalformedPathError& ex) {
    out.exit_code = 3;
    error_kind = "precondition";
    error_msg = ex.what();
  } catch (const std::exception& ex) {
    out.exit_code = 5;
    error_kind = "internal";
    error_msg = ex.what();
  }
  auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
  env["command"] = {{"name", command_name}, {"argv", args}};
  env["decision"] = e.decision;
  env["payload"] = e.payload;
  env["witness"] = e.witness;
  env["timing"] = {{"elapsed_ms", ms.count()}};
  env["budget"] = {{"node_budget", o.node_budget}, {"visited", e.visited}};
  env["warnings"] = e.warnings;
  if (out.exit_code != 0) env["error"] = {{"kind", error_kind}, {"message", error_msg}};
  out.stdout_text = env.dump() + "\n";
  std::ostringstream hs;
  if (out.exit_code != 0) hs << "boxvas: " << error_kind << " error: " << error_msg << "\n";
  else hs << command_name << ": " << e.summary << "\n";
  for (const auto& w : e.warnings) hs << "warning: " << w.get<std::string>() << "\n";
  out.stderr_text = hs.str();
  return out;
}

}  // namespace boxvas
