// Copyright 2026 The Blackbox Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <fstream>
#include <sstream>

#include <doctest.h>
#include <json.hpp>

#include "blackbox/bridge.hpp"
#include "blackbox/calculus.hpp"
#include "cli.hpp"

using blackbox::cli::run;
namespace lg = blackbox::logic;
namespace q = blackbox::quantum;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(BLACKBOX_TEST_DATA_DIR) + "/" + name; }

std::string golden(const std::string& name) {
  std::ifstream in(std::string(BLACKBOX_TEST_GOLDEN_DIR) + "/" + name);
  REQUIRE_MESSAGE(in.good(), "missing golden file " << name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct GoldenCase {
  const char* file;
  std::vector<std::string> args;
};

const std::vector<GoldenCase> kGolden{
    {"judge_psi_plus.txt", {"judge", "--state", "bell:psi+"}},
    {"judge_uniform.txt", {"judge", "--state", "vec:(0.5,0);(0.5,0);(0.5,0);(0.5,0)"}},
    {"judge_basis01.txt", {"judge", "--state", "basis:01"}},
    {"judge_qubit.txt", {"judge", "--state", "vec2:(0.5477225575051661,0);(0,0.8366600265340756)"}},
    {"judge_psi_minus.json", {"judge", "--state", "bell:psi-", "--json"}},
    {"classify_intermediate.json",
     {"classify", "--state", "vec:(0.9486832980505138,0);(0,0);(0,0);(0.31622776601683794,0)", "--json"}},
    {"simulate_psi_plus.txt", {"simulate", "--state", "bell:psi+", "--mirror", "mirror2:phi=0.5,gamma=1,delta=-0.25"}},
    {"simulate_qubit.json", {"simulate", "--state", "basis:1", "--mirror", "mirror1:phi=0,alpha=1.5707963267948966", "--json"}},
    {"outcomes_uniform.txt", {"outcomes", "--state", "vec:(0.5,0);(0.5,0);(0.5,0);(0.5,0)"}},
    {"outcomes_phi_minus.json", {"outcomes", "--state", "bell:phi-", "--json"}},
    {"superpose_psi_plus.txt", {"superpose", "--state", "bell:psi+", "--atoms", "Q1,Q2"}},
    {"verify_psi_minus.json", {"verify", "--state", "bell:psi-", "--json"}},
    {"derive_psi_plus_lr.txt", {"derive", "--state", "bell:psi+"}},
    {"derive_uniform_rl.txt", {"derive", "--state", "vec:(0.5,0);(0.5,0);(0.5,0);(0.5,0)", "--direction", "rl"}},
    {"parse_unicode.txt", {"parse", "⊢ (A & A⊥) ⊘₁ (B & B⊥)"}},
};

}  // namespace

TEST_CASE("golden outputs") {
  for (const auto& c : kGolden) {
    INFO(c.file);
    const auto r = invoke(c.args);
    CHECK(r.code == 0);
    CHECK(r.out == golden(c.file));
  }
}

TEST_CASE("output is deterministic") {
  for (const auto& c : kGolden) {
    CHECK(invoke(c.args).out == invoke(c.args).out);
  }
}

TEST_CASE("check command") {
  const auto ok = invoke({"check", "--file", data("entderiv.drv"), "--premise", "|- (A % B) & (A' % B')"});
  CHECK(ok.code == 0);
  CHECK(ok.out == "ACCEPT\n");

  const auto cut = invoke({"check", "--file", data("cut.drv"), "--premise", "A |- B", "--premise", "B |- C"});
  CHECK(cut.code == 1);
  CHECK(cut.out == "REJECT root CutNotAdmissible\n");

  const auto vis = invoke({"check", "--file", data("visibility.drv"), "--premise", "|- A, C", "--premise", "|- B, C"});
  CHECK(vis.code == 1);
  CHECK(vis.out == "REJECT root VisibilityViolation\n");

  const auto unknown = invoke({"check", "--file", data("entderiv.drv")});
  CHECK(unknown.code == 1);
  CHECK(unknown.out == "REJECT root.0.0.0.0 UnknownPremise\n");
}

TEST_CASE("exit codes") {
  CHECK(invoke({"classify", "--state", "bell:psi+"}).code == 0);
  CHECK(invoke({"--help"}).code == 0);

  const auto inter = invoke({"judge", "--state", "vec:(0.9486832980505138,0);(0,0);(0,0);(0.31622776601683794,0)"});
  CHECK(inter.code == 1);
  CHECK(inter.out.empty());
  CHECK(inter.err.find("0.6") != std::string::npos);
  CHECK(invoke({"judge", "--state", "vec:(1,0);(1,0);(0,0);(0,0)"}).code == 1);
  CHECK(invoke({"judge", "--state", "vec:(0.5,0);(0.5,0);(0.5,0);(-0.5,0)"}).code == 1);
  CHECK(invoke({"derive", "--state", "vec:(0.7071067811865476,0);(0.7071067811865476,0);(0,0);(0,0)"}).code == 1);

  CHECK(invoke({}).code == 2);
  CHECK(invoke({"frobnicate"}).code == 2);
  CHECK(invoke({"judge"}).code == 2);
  CHECK(invoke({"judge", "--state", "bell:xyz"}).code == 2);
  CHECK(invoke({"judge", "--state", "bell:psi+", "--atoms", "a,b"}).code == 2);
  CHECK(invoke({"derive", "--state", "bell:psi+", "--direction", "up"}).code == 2);
  CHECK(invoke({"parse", "A &"}).code == 2);
  CHECK(invoke({"check", "--file", data("missing.drv")}).code == 2);
  CHECK(invoke({"simulate", "--state", "bell:psi+", "--mirror", "mirror1:phi=0,alpha=0"}).code == 2);
}

TEST_CASE("json envelope fields") {
  const auto r = invoke({"judge", "--state", "bell:phi+", "--json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("command") == "judge");
  CHECK(j.at("input").at("state") == "bell:phi+");
  CHECK(j.at("result") == "|- (A & A') %1 (B & B')");
  CHECK(j.at("regime") == "bell");
  REQUIRE(j.at("support").size() == 2);
  CHECK(j.at("support")[0].at("outcome") == "01");
  CHECK(j.at("support")[1].at("outcome") == "10");

  const auto p = nlohmann::json::parse(invoke({"parse", "A & B", "--json"}).out);
  CHECK(p.at("regime").is_null());
  CHECK(p.at("support").is_null());
}

TEST_CASE("the command line is a thin shell") {
  for (const std::string lit : {"bell:psi+", "bell:phi-", "basis:10", "vec:(0.5,0);(-0.5,0);(0.5,0);(-0.5,0)",
                                "vec:(0.6,0);(0,0);(0.8,0);(0,0)"}) {
    INFO(lit);
    const auto s = std::get<q::Register2Q>(q::parse_state(lit));
    CHECK(invoke({"judge", "--state", lit}).out == blackbox::bridge::render(blackbox::bridge::judge_2q(s)));
    const auto cls = q::classify(s);
    CHECK(invoke({"classify", "--state", lit}).out ==
          "regime: " + blackbox::bridge::regime_label(cls) + "\ndegree: " +
              blackbox::bridge::format_probability(cls.degree) + "\n");
    CHECK(invoke({"verify", "--state", lit}).out == blackbox::bridge::verify_equivalence(s).render() + "\n");
  }
  const auto d = lg::parse_derivation(invoke({"derive", "--state", "bell:psi-"}).out);
  CHECK(d == blackbox::bridge::equivalence(q::make_bell("psi-"))->forward);
  const std::vector<lg::Statement> hyps{lg::parse_statement("|- (A % B) & (A' % B')")};
  CHECK(lg::check(d, hyps).accepted);
}

TEST_CASE("parse accepts files and normalizes text") {
  const auto r = invoke({"parse", "--file", data("entderiv.drv")});
  CHECK(r.code == 0);
  std::ifstream in(data("entderiv.drv"));
  std::ostringstream ss;
  ss << in.rdbuf();
  CHECK(r.out == ss.str());
  CHECK(invoke({"parse", "((A & B)) % C'"}).out == "(A & B) % C'\n");
  CHECK(invoke({"parse", "G, H ⊢ A ≍ B"}).out == "G, H |- A ~0 B\n");
}
