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

#include "blackbox/calculus.hpp"

namespace blackbox::logic {

namespace {

Formula par_of(const Atom& x, const Atom& y) { return make_par(Formula(x), Formula(y)); }

// The external register judgements the superposition is built from, in
// basis order.
std::vector<std::pair<Atom, Atom>> entangled_outcomes(const Atom& a, const Atom& b) {
  return {{a, b}, {dualize(a), dualize(b)}};
}

std::vector<std::pair<Atom, Atom>> separable_outcomes(const Atom& a, const Atom& b) {
  return {{a, b}, {a, dualize(b)}, {dualize(a), b}, {dualize(a), dualize(b)}};
}

Formula chain_of(const std::vector<std::pair<Atom, Atom>>& outcomes) {
  std::vector<Formula> items;
  for (const auto& [x, y] : outcomes) items.push_back(par_of(x, y));
  return and_chain(items);
}

Sequent comma(const Atom& x, const Atom& y) { return Sequent({}, {Formula(x), Formula(y)}); }

// Shared skeleton of both two-qubit derivations. Left to right each branch
// reads  premise -andR-> |- X % Y -parR-> |- X, Y  and the branches are joined
// by the assembly rule, then the linked pair is reflected into a connective.
// Right to left is the mirror image.
Derivation two_qubit(const Atom& a, const Atom& b, Direction dir, MetaLink link) {
  const bool entangled = link == MetaLink::MaxEnt;
  const auto outcomes = entangled ? entangled_outcomes(a, b) : separable_outcomes(a, b);
  const Formula chain = chain_of(outcomes);
  const LinkedSequent linked{{}, {superposition(a), link, superposition(b)}};
  const Formula judged = entangled ? entangled_judgement(a, b) : separable_judgement(a, b);
  const Rule assemble = entangled ? Rule::AndCongr : Rule::AndCont;
  const Rule disassemble = entangled ? Rule::AndCongrRefl : Rule::AndContRefl;
  const Rule to_par = entangled ? Rule::Par1Form : Rule::Par0Form;
  const Rule from_par = entangled ? Rule::Par1Refl : Rule::Par0Refl;

  std::vector<Derivation> branches;
  if (dir == Direction::LeftToRight) {
    for (const auto& [x, y] : outcomes) {
      Derivation picked = step(assert_formula(par_of(x, y)), Rule::AndRefl, {leaf(assert_formula(chain))});
      branches.push_back(step(comma(x, y), Rule::ParRefl, {std::move(picked)}));
    }
    Derivation joined = step(linked, assemble, std::move(branches));
    return step(assert_formula(judged), to_par, {std::move(joined)});
  }
  for (const auto& [x, y] : outcomes) {
    Derivation unlinked = step(linked, from_par, {leaf(assert_formula(judged))});
    Derivation split = step(comma(x, y), disassemble, {std::move(unlinked)});
    branches.push_back(step(assert_formula(par_of(x, y)), Rule::ParForm, {std::move(split)}));
  }
  return step(assert_formula(chain), Rule::AndForm, std::move(branches));
}

}  // namespace

Formula entangled_superposition(const Atom& a, const Atom& b) {
  return chain_of(entangled_outcomes(a, b));
}

Formula entangled_judgement(const Atom& a, const Atom& b) {
  return make_par1(superposition(a), superposition(b));
}

Formula separable_superposition(const Atom& a, const Atom& b) {
  return chain_of(separable_outcomes(a, b));
}

Formula separable_judgement(const Atom& a, const Atom& b) {
  return make_par0(superposition(a), superposition(b));
}

Derivation derive_entangled_equivalence(const Atom& a, const Atom& b, Direction dir) {
  return two_qubit(a, b, dir, MetaLink::MaxEnt);
}

Derivation derive_separable_equivalence(const Atom& a, const Atom& b, Direction dir) {
  return two_qubit(a, b, dir, MetaLink::NonEnt);
}

Derivation derive_one_qubit(const Atom& a) {
  const Formula whole = superposition(a);
  std::vector<Derivation> parts;
  for (const Atom& x : {a, dualize(a)}) {
    parts.push_back(step(assert_formula(Formula(x)), Rule::AndRefl, {leaf(assert_formula(whole))}));
  }
  return step(assert_formula(whole), Rule::AndForm, std::move(parts));
}

}  // namespace blackbox::logic
