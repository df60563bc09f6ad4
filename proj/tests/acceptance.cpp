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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>

#include "blackbox/bridge.hpp"
#include "blackbox/calculus.hpp"
#include "blackbox/errors.hpp"
#include "blackbox/formulas.hpp"
#include "blackbox/quantum.hpp"
#include "generators.hpp"
#include "oracles.hpp"

namespace q = blackbox::quantum;
namespace lg = blackbox::logic;
namespace br = blackbox::bridge;

namespace {

constexpr double kExactTol = 1e-12;
constexpr double kBellTol = 1e-9;
constexpr double kRuntimeLimitSeconds = 1.0;

struct Verdict {
  bool pass = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && pass) {
      pass = false;
      detail = what;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt(const char* pattern, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, x);
  return buf;
}

Verdict probability_preservation() {
  Verdict v;
  gen::Rng rng(1001);
  const auto start = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const auto s1 = gen::register1(rng);
    const auto p1 = s1.probabilities();
    const auto r1 = q::apply_mirror(gen::mirror1(rng), s1).probabilities();
    for (int k = 0; k < 2; ++k) worst = std::max(worst, std::abs(r1[k] - p1[k]));
    const auto s2 = gen::register2(rng);
    const auto p2 = s2.probabilities();
    const auto r2 = q::apply_mirror(gen::mirror2(rng), s2).probabilities();
    for (int k = 0; k < 4; ++k) worst = std::max(worst, std::abs(r2[k] - p2[k]));
  }
  const double elapsed = seconds_since(start);
  v.require(worst < kExactTol, fmt("max deviation %.3g", worst));
  v.require(elapsed < kRuntimeLimitSeconds, fmt("runtime %.3f s", elapsed));
  if (v.pass) v.detail = fmt("max deviation %.3g", worst) + fmt(", %.3f s", elapsed);
  return v;
}

Verdict tensor_closure() {
  Verdict v;
  gen::Rng rng(1002);
  const auto start = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const auto m1 = gen::mirror1(rng);
    const auto m2 = gen::mirror1(rng);
    const auto t = q::tensor_mirrors(m1, m2);
    worst = std::max(worst, oracle::max_entry_diff(t.matrix(), oracle::kron(m1.matrix(), m2.matrix())));
    const auto a = m1.alpha.value();
    const auto b = m2.alpha.value();
    worst = std::max(worst, std::abs(t.gamma.value() - a * b));
    worst = std::max(worst, std::abs(t.delta.value() - a * std::conj(b)));
    worst = std::max(worst, std::abs(t.phase.value() - m1.phase.value() * m2.phase.value()));
  }
  const double elapsed = seconds_since(start);
  v.require(worst < kExactTol, fmt("max entry deviation %.3g", worst));
  v.require(elapsed < kRuntimeLimitSeconds, fmt("runtime %.3f s", elapsed));
  if (v.pass) v.detail = fmt("max entry deviation %.3g", worst) + fmt(", %.3f s", elapsed);
  return v;
}

Verdict projector_decomposition() {
  Verdict v;
  gen::Rng rng(1003);
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const auto m1 = gen::mirror1(rng);
    worst = std::max(worst, oracle::max_entry_diff(oracle::reassemble(q::decompose_mirror(m1)), m1.matrix()));
    const auto m2 = gen::mirror2(rng);
    worst = std::max(worst, oracle::max_entry_diff(oracle::reassemble(q::decompose_mirror(m2)), m2.matrix()));
  }
  v.require(worst < kExactTol, fmt("max entry deviation %.3g", worst));
  if (v.pass) v.detail = fmt("max entry deviation %.3g", worst);
  return v;
}

Verdict bell_single_particle() {
  Verdict v;
  gen::Rng rng(1004);
  const q::Bell bells[] = {q::Bell::PsiPlus, q::Bell::PsiMinus, q::Bell::PhiPlus, q::Bell::PhiMinus};
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const auto m = gen::mirror2(rng);
    for (auto b : bells) {
      const auto s = q::apply_mirror(m, q::make_bell(b));
      worst = std::max(worst, std::abs(q::concurrence(s) - 1.0));
      const auto sup = br::support(s);
      const bool shape = sup.size() == 2 && ((sup[0].outcome == "00" && sup[1].outcome == "11") ||
                                             (sup[0].outcome == "01" && sup[1].outcome == "10"));
      v.require(shape, "support is not a correlated pair");
      for (const auto& e : sup) worst = std::max(worst, std::abs(e.probability - 0.5));
    }
  }
  v.require(worst < kBellTol, fmt("max deviation %.3g", worst));
  if (v.pass) v.detail = fmt("max deviation %.3g", worst);
  return v;
}

std::vector<q::Register2Q> bell_pool() {
  return {q::make_bell(q::Bell::PsiPlus), q::make_bell(q::Bell::PsiMinus), q::make_bell(q::Bell::PhiPlus),
          q::make_bell(q::Bell::PhiMinus)};
}

std::vector<q::Register2Q> product_pool() {
  gen::Rng rng(1005);
  std::vector<q::Register2Q> out;
  for (int i = 0; i < 100; ++i) out.push_back(gen::full_support_product(rng));
  return out;
}

Verdict judgement_mapping() {
  Verdict v;
  const lg::Atom a{"A", false};
  const lg::Atom b{"B", false};
  const auto ent = lg::assert_formula(lg::entangled_judgement(a, b));
  const auto sep = lg::assert_formula(lg::separable_judgement(a, b));
  for (const auto& s : bell_pool()) v.require(br::judge_2q(s).sequent == ent, "bell state misjudged");
  for (const auto& s : product_pool()) v.require(br::judge_2q(s).sequent == sep, "product state misjudged");
  gen::Rng rng(1006);
  int raised = 0;
  for (int i = 0; i < 100; ++i) {
    try {
      br::judge_2q(gen::partially_entangled(rng));
    } catch (const blackbox::IntermediateRegime&) {
      ++raised;
    }
  }
  v.require(raised == 100, std::to_string(raised) + "/100 partially entangled states raised");
  if (v.pass) v.detail = "4 bell, 100 product, 100 intermediate";
  return v;
}

Verdict equivalence_engine() {
  Verdict v;
  const lg::Atom a{"A", false};
  const lg::Atom b{"B", false};
  struct Engine {
    lg::Derivation tree;
    lg::Formula premise;
    std::size_t leaves;
  };
  const std::vector<Engine> engines{
      {lg::derive_entangled_equivalence(a, b, lg::Direction::LeftToRight), lg::entangled_superposition(a, b), 2},
      {lg::derive_entangled_equivalence(a, b, lg::Direction::RightToLeft), lg::entangled_judgement(a, b), 2},
      {lg::derive_separable_equivalence(a, b, lg::Direction::LeftToRight), lg::separable_superposition(a, b), 4},
      {lg::derive_separable_equivalence(a, b, lg::Direction::RightToLeft), lg::separable_judgement(a, b), 4},
  };
  for (const auto& e : engines) {
    const std::vector<lg::Statement> hyps{lg::assert_formula(e.premise)};
    v.require(lg::check(e.tree, hyps).accepted, "derivation rejected");
    v.require(lg::leaves(e.tree).size() == e.leaves, "wrong number of branch leaves");
  }
  std::size_t verified = 0;
  for (const auto& pool : {bell_pool(), product_pool()}) {
    for (const auto& s : pool) {
      const auto r = br::verify_equivalence(s);
      v.require(r.accepted, "verify_equivalence: " + r.render());
      verified += r.accepted;
    }
  }
  if (v.pass) v.detail = "4 engines, " + std::to_string(verified) + " states verified";
  return v;
}

Verdict rejection_corpus() {
  Verdict v;
  const lg::Atom a{"A", false};
  const lg::Atom b{"B", false};
  std::size_t cases = 0;
  auto expect = [&](const lg::Derivation& d, const std::vector<lg::Statement>& hyps, lg::Reason reason) {
    const auto r = lg::check(d, hyps);
    ++cases;
    v.require(!r.accepted && r.reason == reason,
              "expected " + std::string(lg::reason_code(reason)) + ", got " + r.render());
  };

  const std::vector<lg::Statement> cut_hyps{lg::parse_statement("A |- B"), lg::parse_statement("B |- C")};
  expect(lg::parse_derivation("(cut concl: A |- C prem: (premise concl: A |- B) prem: (premise concl: B |- C))"),
         cut_hyps, lg::Reason::CutNotAdmissible);
  expect(lg::parse_derivation("(cut concl: |- A)"), {}, lg::Reason::CutNotAdmissible);
  {
    auto d = lg::derive_separable_equivalence(a, b, lg::Direction::LeftToRight);
    d.premises[0].premises[2].premises[0].rule = lg::Rule::Cut;
    expect(d, {lg::assert_formula(lg::separable_superposition(a, b))}, lg::Reason::CutNotAdmissible);
  }

  const std::vector<lg::Statement> vis_hyps{lg::parse_statement("|- A, C"), lg::parse_statement("|- B, C")};
  expect(lg::parse_derivation(
             "(andF concl: |- A & B, C prem: (premise concl: |- A, C) prem: (premise concl: |- B, C))"),
         vis_hyps, lg::Reason::VisibilityViolation);
  expect(lg::parse_derivation(
             "(andF concl: |- C, A & B prem: (premise concl: |- C, A) prem: (premise concl: |- C, B))"),
         {lg::parse_statement("|- C, A"), lg::parse_statement("|- C, B")}, lg::Reason::VisibilityViolation);
  {
    auto d = lg::derive_entangled_equivalence(a, b, lg::Direction::RightToLeft);
    std::get<lg::Sequent>(d.conclusion).succedent.push_back(lg::atom("C"));
    expect(d, {lg::assert_formula(lg::entangled_judgement(a, b))}, lg::Reason::VisibilityViolation);
  }

  struct Accepted {
    lg::Derivation tree;
    std::vector<lg::Statement> hyps;
  };
  const std::vector<Accepted> accepted{
      {lg::derive_entangled_equivalence(a, b, lg::Direction::LeftToRight),
       {lg::assert_formula(lg::entangled_superposition(a, b))}},
      {lg::derive_entangled_equivalence(a, b, lg::Direction::RightToLeft),
       {lg::assert_formula(lg::entangled_judgement(a, b))}},
      {lg::derive_separable_equivalence(a, b, lg::Direction::LeftToRight),
       {lg::assert_formula(lg::separable_superposition(a, b))}},
      {lg::derive_separable_equivalence(a, b, lg::Direction::RightToLeft),
       {lg::assert_formula(lg::separable_judgement(a, b))}},
  };
  gen::Rng rng(1007);
  std::size_t mutations = 0;
  for (const auto& acc : accepted) {
    v.require(lg::check(acc.tree, acc.hyps).accepted, "unmutated tree rejected");
    for (int i = 0; i < 100; ++i) {
      const auto m = gen::mutate(acc.tree, rng);
      const auto r = lg::check(m.tree, acc.hyps);
      ++mutations;
      bool correct = false;
      if (r.accepted) {
        correct = false;
      } else if (m.kind == gen::MutationKind::Rule && m.new_rule == lg::Rule::Cut) {
        correct = r.reason == lg::Reason::CutNotAdmissible;
      } else if (m.kind == gen::MutationKind::Atom && m.at_leaf) {
        correct = r.reason == lg::Reason::UnknownPremise;
      } else if (m.kind == gen::MutationKind::Rule && m.at_leaf) {
        correct = r.reason == lg::Reason::ArityMismatch;
      } else {
        correct = r.reason == lg::Reason::SchemaMismatch || r.reason == lg::Reason::ArityMismatch ||
                  r.reason == lg::Reason::VisibilityViolation;
      }
      v.require(correct, "mutation misjudged: " + r.render());
    }
  }
  if (v.pass) {
    v.detail = std::to_string(cases) + " fixed cases, " + std::to_string(mutations) + " mutations";
  }
  return v;
}

Verdict parser_round_trip() {
  Verdict v;
  gen::Rng rng(1008);
  for (int i = 0; i < 1000; ++i) {
    std::string text;
    std::function<std::string(const std::string&)> reprint;
    switch (i % 3) {
      case 0:
        text = lg::print(gen::formula(rng, 4));
        reprint = [](const std::string& t) { return lg::print(lg::parse_formula(t)); };
        break;
      case 1:
        text = lg::print(gen::statement(rng, 3));
        reprint = [](const std::string& t) { return lg::print(lg::parse_statement(t)); };
        break;
      default:
        text = lg::print_derivation(gen::derivation(rng, 3));
        reprint = [](const std::string& t) { return lg::print_derivation(lg::parse_derivation(t)); };
        break;
    }
    const auto once = reprint(text);
    v.require(once == text && reprint(once) == once, "not a fixed point: " + text);
  }

  using lg::atom;
  const lg::Formula A = atom("A");
  const lg::Formula Ad = atom("A", true);
  const lg::Formula B = atom("B");
  const lg::Formula Bd = atom("B", true);
  const std::pair<const char*, lg::Formula> displayed[] = {
      {"A & A⊥", lg::make_and(A, Ad)},
      {"(A & A⊥) ⊘₀ (B & B⊥)", lg::make_par0(lg::make_and(A, Ad), lg::make_and(B, Bd))},
      {"(A & A⊥) ⊘₁ (B & B⊥)", lg::make_par1(lg::make_and(A, Ad), lg::make_and(B, Bd))},
      {"(A ⊘ B) & (A ⊘ B⊥) & (A⊥ ⊘ B) & (A⊥ ⊘ B⊥)",
       lg::make_and(lg::make_and(lg::make_and(lg::make_par(A, B), lg::make_par(A, Bd)), lg::make_par(Ad, B)),
                    lg::make_par(Ad, Bd))},
      {"(A ⊘ B) & (A⊥ ⊘ B⊥)", lg::make_and(lg::make_par(A, B), lg::make_par(Ad, Bd))},
  };
  for (const auto& [text, ast] : displayed) {
    v.require(lg::parse_formula(text) == ast, std::string("unexpected AST for ") + text);
    v.require(lg::parse_statement(std::string("⊢ ") + text) == lg::Statement(lg::assert_formula(ast)),
              std::string("unexpected sequent for ") + text);
  }
  if (v.pass) v.detail = "1000 texts, 5 displayed formulas";
  return v;
}

}  // namespace

int main() {
  const std::pair<const char*, Verdict (*)()> criteria[] = {
      {"probability preservation", probability_preservation},
      {"mirror tensor closure", tensor_closure},
      {"projector decomposition", projector_decomposition},
      {"bell single-particle behavior", bell_single_particle},
      {"judgement mapping", judgement_mapping},
      {"equivalence engine", equivalence_engine},
      {"checker rejection corpus", rejection_corpus},
      {"parser round trip", parser_round_trip},
  };
  int failures = 0;
  int index = 0;
  for (const auto& [name, fn] : criteria) {
    ++index;
    Verdict v;
    try {
      v = fn();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail = std::string("exception: ") + e.what();
    }
    failures += !v.pass;
    std::printf("%s %d %s: %s\n", v.pass ? "PASS" : "FAIL", index, name, v.detail.c_str());
  }
  return failures == 0 ? 0 : 1;
}
