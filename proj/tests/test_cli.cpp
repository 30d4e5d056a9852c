#include "boxvas/cli.hpp"
#include "boxvas/instance.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <random>

using namespace boxvas;
using nlohmann::json;

namespace {

std::string write_temp(const std::string& name, const std::string& text) {
  std::string path = std::string(P_tmpdir) + "/boxvas_test_" + name;
  std::ofstream(path) << text;
  return path;
}

json run_json(const std::vector<std::string>& args, int expect_code = 0) {
  auto out = run_command(args);
  CHECK_MESSAGE(out.exit_code == expect_code, out.stderr_text);
  return json::parse(out.stdout_text);
}

int parse_error_line(const std::string& text) {
  try {
    parse_instance(text);
  } catch (const ParseError& e) {
    return e.line;
  }
  return -1;
}

}  // namespace

TEST_CASE("grammar examples") {
  auto e1 = parse_instance("vas 2\n-1 2\n2 -1\n10 10\n");
  REQUIRE(e1.kind == InstanceFile::Kind::Vas);
  CHECK(e1.vas->generators() == std::vector<Vec>{{-1, 2}, {2, -1}, {10, 10}});
  auto empty = parse_instance("vas 2\n");
  CHECK(empty.vas->size() == 0);
  auto v = parse_instance("vass1\nstates a b\ninit a\ntrans a 3 b\ntrans b -2 a\n");
  REQUIRE(v.kind == InstanceFile::Kind::Vass1);
  CHECK(v.vass1->num_states() == 2);
  CHECK(v.vass1->transitions()[1].weight == -2);
  auto c = parse_instance("# header comment\n\nvas 1   # dim\n  5\n\n-2 # step\n");
  CHECK(c.vas->generators() == std::vector<Vec>{{5}, {-2}});
}

TEST_CASE("parse errors carry line numbers") {
  CHECK(parse_error_line("vas 2\n1 2\n1 2 3\n") == 3);
  CHECK(parse_error_line("vas 2\n1 x\n") == 2);
  CHECK(parse_error_line("\n\nvass1\nstates a\ninit a\ntrans a 1 c\n") == 6);
  CHECK(parse_error_line("vass1\ninit a\n") == 2);
  CHECK(parse_error_line("petri 2\n") == 1);
  CHECK(parse_error_line("vass1\nstates a\n") == 3);
  CHECK(parse_error_line("") == 1);
}

TEST_CASE("serialize then parse is the identity on generated instances") {
  std::mt19937_64 rng(99);
  for (int iter = 0; iter < 300; ++iter) {
    InstanceFile f;
    if (iter % 2 == 0) {
      std::size_t d = 1 + rng() % 4;
      std::vector<Vec> g(rng() % 6, Vec(d));
      for (auto& x : g)
        for (auto& c : x) c = Int(static_cast<long>(rng() % 2001) - 1000) * (iter % 7 == 0 ? Int("1000000000000") : Int(1));
      f.kind = InstanceFile::Kind::Vas;
      f.vas.emplace(d, g);
    } else {
      std::size_t n = 1 + rng() % 4;
      std::vector<std::string> names;
      for (std::size_t i = 0; i < n; ++i) names.push_back("s" + std::to_string(rng() % 1000) + "_" + std::to_string(i));
      std::vector<Transition> ts(rng() % 7);
      for (auto& t : ts) t = {rng() % n, static_cast<std::int64_t>(rng() % 41) - 20, rng() % n};
      f.kind = InstanceFile::Kind::Vass1;
      f.vass1.emplace(names, ts);
      f.init = rng() % n;
    }
    std::string text = serialize_instance(f);
    auto g = parse_instance(text);
    CHECK(serialize_instance(g) == text);
    if (f.kind == InstanceFile::Kind::Vas) {
      CHECK(g.vas->generators() == f.vas->generators());
    } else {
      CHECK(g.init == f.init);
      CHECK(g.vass1->states() == f.vass1->states());
    }
  }
}

TEST_CASE("decide-box on the example file") {
  auto path = write_temp("ex1.vas", "vas 2\n-1 2\n2 -1\n10 10\n");
  auto yes = run_json({"decide-box", "--instance", path, "--target", "21,21"});
  CHECK(yes["decision"] == true);
  CHECK(yes["witness"] == json::array({2, 0, 1, 2}));
  CHECK(yes["command"]["name"] == "decide-box");
  auto no = run_json({"decide-box", "--instance", path, "--target", "11,11"});
  CHECK(no["decision"] == false);
  CHECK(no["witness"].is_null());
  run_json({"decide-box", "--instance", path, "--target", "21,x"}, 2);
  run_json({"decide-box", "--instance", path, "--target", "21,21,3"}, 2);
  run_json({"decide-box", "--instance", path + ".missing", "--target", "1,1"}, 2);
  run_json({"decide-box", "--instance", path}, 2);
  run_json({"frobnicate"}, 2);
  run_json({"--node-budget", "3", "decide-box", "--instance", path, "--target", "40,40"}, 4);
}

TEST_CASE("output is stable apart from timing") {
  auto path = write_temp("ex1b.vas", "vas 2\n-1 2\n2 -1\n10 10\n");
  std::vector<std::string> args{"verify-window", "--instance", path, "--lo", "18,18", "--size", "4,4"};
  auto a = run_json(args), b = run_json(args);
  a.erase("timing");
  b.erase("timing");
  CHECK(a.dump() == b.dump());
}

TEST_CASE("every subcommand produces an envelope") {
  auto vas = write_temp("sub.vas", "vas 2\n1 1\n1 -1\n");
  auto vass = write_temp("sub.vass", "vass1\nstates a b\ninit a\ntrans a 3 b\ntrans b -2 a\n");
  for (auto key : {"command", "decision", "payload", "witness", "timing", "budget", "warnings"})
    CHECK(run_json({"seed", "--instance", vas}).contains(key));
  auto th = run_json({"threshold", "--instance", vas, "--validate-radius", "10"});
  CHECK(th["payload"]["W"] == 8208);
  CHECK(th["payload"]["M_provenance"] == "DefaultHeuristic");
  auto thm = run_json({"threshold", "--instance", vas, "--m", "5"});
  CHECK(thm["payload"]["M_provenance"] == "Configured");
  CHECK(thm["payload"]["M"] == 5);
  auto w = run_json({"witness", "--instance", vas, "--target", "10000,8300"});
  CHECK(w["payload"]["method"] == "ProofCase1");
  auto w2 = run_json({"witness", "--instance", vas, "--target", "9000,8300"}, 3);
  CHECK(w2["error"]["kind"] == "precondition");
  auto st = run_json({"steinitz", "--vectors", "1,2", "-3,4", "2,-1"});
  CHECK(st["decision"] == true);
  auto lf = run_json({"lift", "--instance", vas, "--target", "4,2"});
  CHECK(lf["decision"] == true);
  auto dr = run_json({"decide-reach", "--instance", vas, "--target", "2,0", "--cap", "2,1"});
  CHECK(dr["decision"] == true);
  auto vd = run_json({"vass1-decide", "--instance", vass, "--to", "b", "--x", "4"});
  CHECK(vd["decision"] == true);
  CHECK(vd["witness"] == json::array({0, 1, 0}));
  auto vs = run_json({"vass1-semilinear", "--instance", vass, "--to", "b", "--member", "20000"});
  CHECK(vs["decision"] == true);
  CHECK(vs["witness"].size() > 0);
  run_json({"vass1-decide", "--instance", vas, "--to", "b", "--x", "4"}, 3);
  run_json({"vass1-decide", "--instance", vass, "--to", "zz", "--x", "4"}, 2);
}
