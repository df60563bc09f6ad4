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

// The internal observer: turns register states into judgements of the
// internal logic and checks them against the calculus.
//
// Outcome-to-atom mapping: qubit 1 reads |0> as A and |1> as A'; qubit 2
// reads |0> as B and |1> as B'. For a maximally entangled register with
// anti-correlated support {01, 10}, B names the qubit-2 result that pairs
// with A, so qubit 2 reads |1> as B and |0> as B'.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "blackbox/calculus.hpp"
#include "blackbox/formulas.hpp"
#include "blackbox/quantum.hpp"

namespace blackbox::bridge {

/// An outcome is in the support when its probability exceeds this.
inline constexpr double kSupportEpsilon = 1e-9;

struct AtomNames {
  std::string first = "A";
  std::string second = "B";
};

struct SupportEntry {
  std::string outcome;  // "0", "1" or "00" ... "11"
  double probability;

  friend bool operator==(const SupportEntry&, const SupportEntry&) = default;
};

struct Judgement {
  logic::Sequent sequent;
  std::optional<quantum::CorrelationClass> regime;  // absent for one qubit
  std::vector<SupportEntry> support;
};

std::vector<SupportEntry> support(const quantum::Register1Q& q);
std::vector<SupportEntry> support(const quantum::Register2Q& s);

/// |- A & A' when both outcomes are possible, |- A or |- A' otherwise.
Judgement judge_1q(const quantum::Register1Q& q, std::string_view atom = "A");

/// Throws IntermediateRegime for partially entangled registers and
/// UnsupportedSupport for supports that admit no judgement shape.
Judgement judge_2q(const quantum::Register2Q& s, const AtomNames& atoms = {});

/// One |- X % Y per outcome in the support, in basis order.
std::vector<logic::Sequent> external_outcomes(const quantum::Register2Q& s,
                                              const AtomNames& atoms = {});

/// The & chain of the external outcomes.
logic::Formula superposed_external(const quantum::Register2Q& s, const AtomNames& atoms = {});

struct Equivalence {
  logic::Formula external;   // superposed_external(s)
  logic::Formula internal;   // the formula of judge_2q(s)
  logic::Derivation forward;   // external => internal
  logic::Derivation backward;  // internal => external
};

/// The pair of derivations connecting the two readings of `s`, or nullopt
/// when the calculus has none (a determined qubit next to a superposed one).
std::optional<Equivalence> equivalence(const quantum::Register2Q& s, const AtomNames& atoms = {});

/// Checks both derivations and their endpoints. Propagates
/// IntermediateRegime.
logic::CheckReport verify_equivalence(const quantum::Register2Q& s, const AtomNames& atoms = {});

/// "separable", "bell" or "intermediate(<degree>)".
std::string regime_label(const quantum::CorrelationClass& c);

/// Sequent line, optional regime line, then one "<outcome> <p>" line per
/// support entry. Probabilities carry 12 significant digits.
std::string render(const Judgement& j);

std::string format_probability(double p);

}  // namespace blackbox::bridge
