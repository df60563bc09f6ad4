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

#include "blackbox/bridge.hpp"

#include <cstdio>
#include <stdexcept>

#include "blackbox/errors.hpp"

namespace blackbox::bridge {

namespace {

using logic::Atom;
using logic::Formula;
using logic::Sequent;
using quantum::Regime;
using quantum::Register2Q;

constexpr const char* kLabels[] = {"00", "01", "10", "11"};

void require_identifier(std::string_view name) {
  if (!logic::is_identifier(name)) {
    throw std::invalid_argument("atom name must match [A-Z][A-Za-z0-9]*: '" + std::string(name) + "'");
  }
}

std::vector<int> support_indices(const Register2Q& s) {
  std::vector<int> out;
  const auto p = s.probabilities();
  for (int i = 0; i < 4; ++i) {
    if (p[static_cast<std::size_t>(i)] > kSupportEpsilon) out.push_back(i);
  }
  return out;
}

// Qubit-2 polarity: true when |1> reads as B (anti-correlated Bell support).
bool second_flipped(const Register2Q& s) {
  return quantum::classify(s).tag == Regime::MaximallyEntangled &&
         support_indices(s) == std::vector<int>{1, 2};
}

struct Reading {
  Atom first;
  Atom second;
  bool flipped;

  Atom qubit1(int bit) const { return bit == 0 ? first : logic::dualize(first); }
  Atom qubit2(int bit) const {
    return (bit == 0) != flipped ? second : logic::dualize(second);
  }
  Formula outcome(int index) const {
    return logic::make_par(Formula(qubit1(index >> 1)), Formula(qubit2(index & 1)));
  }
};

Reading reading_of(const Register2Q& s, const AtomNames& atoms) {
  require_identifier(atoms.first);
  require_identifier(atoms.second);
  return {Atom{atoms.first, false}, Atom{atoms.second, false}, second_flipped(s)};
}

}  // namespace

std::vector<SupportEntry> support(const quantum::Register1Q& q) {
  std::vector<SupportEntry> out;
  const auto p = q.probabilities();
  for (std::size_t i = 0; i < 2; ++i) {
    if (p[i] > kSupportEpsilon) out.push_back({i == 0 ? "0" : "1", p[i]});
  }
  return out;
}

std::vector<SupportEntry> support(const Register2Q& s) {
  std::vector<SupportEntry> out;
  const auto p = s.probabilities();
  for (int i : support_indices(s)) out.push_back({kLabels[i], p[static_cast<std::size_t>(i)]});
  return out;
}

Judgement judge_1q(const quantum::Register1Q& q, std::string_view atom_name) {
  require_identifier(atom_name);
  const Atom a{std::string(atom_name), false};
  auto entries = support(q);
  Formula f = entries.size() == 2 ? logic::superposition(a)
                                  : Formula(entries.front().outcome == "0" ? a : logic::dualize(a));
  return {logic::assert_formula(std::move(f)), std::nullopt, std::move(entries)};
}

Judgement judge_2q(const Register2Q& s, const AtomNames& atoms) {
  const auto regime = quantum::classify(s);
  if (regime.tag == Regime::Intermediate) throw IntermediateRegime(regime.degree);
  const Reading r = reading_of(s, atoms);
  const auto idx = support_indices(s);

  auto judged = [&](Formula f) {
    return Judgement{logic::assert_formula(std::move(f)), regime, support(s)};
  };

  if (regime.tag == Regime::MaximallyEntangled) {
    if (idx != std::vector<int>{0, 3} && idx != std::vector<int>{1, 2}) {
      throw UnsupportedSupport("maximally entangled register is not a computational-basis Bell pair");
    }
    return judged(logic::entangled_judgement(r.first, r.second));
  }
  switch (idx.size()) {
    case 4:
      return judged(logic::separable_judgement(r.first, r.second));
    case 1:
      return judged(r.outcome(idx[0]));
    case 2:
      if ((idx[0] >> 1) == (idx[1] >> 1)) {
        // qubit 1 determined, qubit 2 superposed
        return judged(logic::make_par(Formula(r.qubit1(idx[0] >> 1)), logic::superposition(r.second)));
      }
      if ((idx[0] & 1) == (idx[1] & 1)) {
        return judged(logic::make_par(logic::superposition(r.first), Formula(r.qubit2(idx[0] & 1))));
      }
      break;
    default:
      break;
  }
  throw UnsupportedSupport("separable register with a support of " + std::to_string(idx.size()) +
                           " outcomes has no judgement shape");
}

std::vector<Sequent> external_outcomes(const Register2Q& s, const AtomNames& atoms) {
  const Reading r = reading_of(s, atoms);
  std::vector<Sequent> out;
  for (int i : support_indices(s)) out.push_back(logic::assert_formula(r.outcome(i)));
  return out;
}

Formula superposed_external(const Register2Q& s, const AtomNames& atoms) {
  std::vector<Formula> items;
  for (auto& seq : external_outcomes(s, atoms)) items.push_back(seq.succedent.front());
  return logic::and_chain(items);
}

std::optional<Equivalence> equivalence(const Register2Q& s, const AtomNames& atoms) {
  const Judgement j = judge_2q(s, atoms);
  Formula external = superposed_external(s, atoms);
  Formula internal = j.sequent.succedent.front();
  const Atom a{atoms.first, false};
  const Atom b{atoms.second, false};
  using logic::Direction;

  if (j.regime->tag == Regime::MaximallyEntangled) {
    return Equivalence{external, internal,
                       logic::derive_entangled_equivalence(a, b, Direction::LeftToRight),
                       logic::derive_entangled_equivalence(a, b, Direction::RightToLeft)};
  }
  switch (j.support.size()) {
    case 4:
      return Equivalence{external, internal,
                         logic::derive_separable_equivalence(a, b, Direction::LeftToRight),
                         logic::derive_separable_equivalence(a, b, Direction::RightToLeft)};
    case 1:
      return Equivalence{external, internal, logic::leaf(logic::assert_formula(external)),
                         logic::leaf(logic::assert_formula(internal))};
    default:
      return std::nullopt;
  }
}

namespace {

bool has_endpoints(const logic::Derivation& d, const Formula& from, const Formula& to) {
  if (d.conclusion != logic::Statement(logic::assert_formula(to))) return false;
  const logic::Statement hypothesis = logic::assert_formula(from);
  for (const auto* l : logic::leaves(d)) {
    if (l->conclusion != hypothesis) return false;
  }
  return true;
}

}  // namespace

logic::CheckReport verify_equivalence(const Register2Q& s, const AtomNames& atoms) {
  using logic::CheckReport;
  using logic::Reason;
  const auto eq = equivalence(s, atoms);
  if (!eq) {
    return CheckReport::reject("root", Reason::NotDerivable,
                               "distributing a determined qubit over a superposition needs a context");
  }
  const std::vector<logic::Statement> external{logic::assert_formula(eq->external)};
  const std::vector<logic::Statement> internal{logic::assert_formula(eq->internal)};
  if (auto r = logic::check(eq->forward, external); !r.accepted) return r;
  if (auto r = logic::check(eq->backward, internal); !r.accepted) return r;
  if (!has_endpoints(eq->forward, eq->external, eq->internal) ||
      !has_endpoints(eq->backward, eq->internal, eq->external)) {
    return CheckReport::reject("root", Reason::SchemaMismatch, "derivation endpoints differ");
  }
  return CheckReport::accept();
}

std::string format_probability(double p) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", p);
  return buf;
}

std::string regime_label(const quantum::CorrelationClass& c) {
  if (c.tag == Regime::Intermediate) return "intermediate(" + format_probability(c.degree) + ")";
  return quantum::to_string(c.tag);
}

std::string render(const Judgement& j) {
  std::string out = logic::print(j.sequent) + "\n";
  if (j.regime) out += "regime: " + regime_label(*j.regime) + "\n";
  for (const auto& e : j.support) out += e.outcome + " " + format_probability(e.probability) + "\n";
  return out;
}

}  // namespace blackbox::bridge
