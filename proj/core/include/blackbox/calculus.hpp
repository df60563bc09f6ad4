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

// Derivations in the internal calculus and their checker.
//
// Rule schemas (Γ is the antecedent context, identical in every premise and
// the conclusion of a step):
//
//   andF      Γ |- F1  ...  Γ |- Fn          =>  Γ |- F1 & ... & Fn   (n >= 2)
//   andR      Γ |- F1 & ... & Fn             =>  Γ |- Fi
//             Both & rules are visible: every succedent holds exactly one
//             formula.
//   parF      Γ |- Δ, A, B, Δ'               =>  Γ |- Δ, A % B, Δ'
//   parR      inverse of parF
//   andCongr  Γ |- A, B   Γ |- A', B'        =>  Γ |- (A & A') ~1 (B & B')
//   andCongrR Γ |- (A & A') ~1 (B & B')      =>  Γ |- A, B  or  Γ |- A', B'
//   andCont   Γ |- A, B   Γ |- A, B'   Γ |- A', B   Γ |- A', B'
//                                            =>  Γ |- (A & A') ~0 (B & B')
//   andContR  Γ |- (A & A') ~0 (B & B')      =>  any one of the four above
//   par0F     Γ |- L ~0 R                    =>  Γ |- L %0 R
//   par1F     Γ |- L ~1 R                    =>  Γ |- L %1 R
//   par0R / par1R: inverses
//   premise   a leaf; its conclusion must be a declared hypothesis
//   cut       never admissible
//
// A and B range over atoms of either polarity.

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "blackbox/formulas.hpp"

namespace blackbox::logic {

enum class Rule {
  AndForm,
  AndRefl,
  ParForm,
  ParRefl,
  Par0Form,
  Par0Refl,
  Par1Form,
  Par1Refl,
  AndCongr,
  AndCongrRefl,
  AndCont,
  AndContRefl,
  Premise,
  Cut,
};

inline constexpr Rule kAllRules[] = {
    Rule::AndForm,  Rule::AndRefl,      Rule::ParForm, Rule::ParRefl,     Rule::Par0Form,
    Rule::Par0Refl, Rule::Par1Form,     Rule::Par1Refl, Rule::AndCongr,   Rule::AndCongrRefl,
    Rule::AndCont,  Rule::AndContRefl,  Rule::Premise, Rule::Cut,
};

/// File-format token: andF, andR, ..., premise, cut.
std::string_view rule_token(Rule r);
std::optional<Rule> rule_from_token(std::string_view token);

struct Derivation {
  Statement conclusion;
  Rule rule;
  std::vector<Derivation> premises;

  friend bool operator==(const Derivation&, const Derivation&) = default;
};

Derivation leaf(Statement conclusion);
Derivation step(Statement conclusion, Rule rule, std::vector<Derivation> premises);

/// Premise leaves, left to right.
std::vector<const Derivation*> leaves(const Derivation& d);
std::size_t size(const Derivation& d);
bool contains_rule(const Derivation& d, Rule r);

enum class Reason {
  CutNotAdmissible,
  VisibilityViolation,
  UnknownPremise,
  ArityMismatch,
  SchemaMismatch,
  NotDerivable,
};

std::string_view reason_code(Reason r);

struct CheckReport {
  bool accepted = true;
  std::string path;  // "root", "root.0.1", ...; empty when accepted
  Reason reason = Reason::SchemaMismatch;
  std::string detail;

  static CheckReport accept() { return {}; }
  static CheckReport reject(std::string path, Reason reason, std::string detail = {});

  /// "ACCEPT" or "REJECT <path> <reason-code>"
  std::string render() const;
};

/// Checks every node of `d` against its rule schema. Any Cut node is
/// rejected before the schema pass; otherwise the first failing node in
/// post-order is reported.
CheckReport check(const Derivation& d, std::span<const Statement> allowed_premises);

// --- Derivation file format ---------------------------------------------
//   tree := "(" RULE "concl:" statement ("prem:" tree)* ")"

Derivation parse_derivation(std::string_view text);
/// One node per line, children indented by two spaces.
std::string print_derivation(const Derivation& d);

// --- Equivalence engines -------------------------------------------------

/// lr: from the superposition of external judgements to the internal
/// judgement; rl: the reverse reading.
enum class Direction { LeftToRight, RightToLeft };

/// (A % B) & (A' % B')
Formula entangled_superposition(const Atom& a, const Atom& b);
/// (A & A') %1 (B & B')
Formula entangled_judgement(const Atom& a, const Atom& b);
/// (A % B) & (A % B') & (A' % B) & (A' % B')
Formula separable_superposition(const Atom& a, const Atom& b);
/// (A & A') %0 (B & B')
Formula separable_judgement(const Atom& a, const Atom& b);

Derivation derive_entangled_equivalence(const Atom& a, const Atom& b, Direction dir);
Derivation derive_separable_equivalence(const Atom& a, const Atom& b, Direction dir);
/// |- A & A' disassembled into |- A and |- A' and assembled again.
Derivation derive_one_qubit(const Atom& a);

}  // namespace blackbox::logic
