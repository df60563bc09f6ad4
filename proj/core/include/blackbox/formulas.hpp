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

// Object language of the internal logic: atoms with duals, the connectives
// & (with), % (par), %0 (par, no correlation), %1 (par, maximal
// correlation), sequents, and the metalinguistic register links ~0 / ~1.
//
// Surface syntax (ASCII; the Unicode glyphs ⊥ ⊢ ⊘ ≍ ⋈ are accepted on input):
//   sequent     := [formulalist] "|-" formulalist
//   statement   := [formulalist] "|-" (formulalist | formula link formula)
//   formulalist := formula ("," formula)*
//   formula     := atom | "(" formula ")" | formula binop formula
//   binop       := "&" | "%" | "%0" | "%1"        link := "~0" | "~1"
//   atom        := IDENT ["'"]                    IDENT := [A-Z][A-Za-z0-9]*
// Binary connectives share one precedence level and associate to the left.

#pragma once

#include <compare>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace blackbox::logic {

struct Atom {
  std::string name;
  bool dual = false;

  friend auto operator<=>(const Atom&, const Atom&) = default;
};

/// A -> A', A' -> A
Atom dualize(const Atom& a);

/// True for [A-Z][A-Za-z0-9]*.
bool is_identifier(std::string_view name);

enum class Connective { And, Par, Par0, Par1 };

std::string_view symbol(Connective c);

/// Immutable formula tree. Copies share subtrees.
class Formula {
 public:
  explicit Formula(Atom atom);
  Formula(Connective op, Formula lhs, Formula rhs);

  bool is_atom() const noexcept { return std::holds_alternative<Atom>(node_); }
  bool is(Connective op) const noexcept { return !is_atom() && connective() == op; }

  /// Preconditions: is_atom() / !is_atom() respectively.
  const Atom& atom() const { return std::get<Atom>(node_); }
  Connective connective() const { return std::get<Binary>(node_).op; }
  const Formula& lhs() const { return *std::get<Binary>(node_).lhs; }
  const Formula& rhs() const { return *std::get<Binary>(node_).rhs; }

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Binary {
    Connective op;
    std::shared_ptr<const Formula> lhs;
    std::shared_ptr<const Formula> rhs;
  };
  std::variant<Atom, Binary> node_;
};

Formula atom(std::string name, bool dual = false);
Formula make_and(Formula lhs, Formula rhs);
Formula make_par(Formula lhs, Formula rhs);
Formula make_par0(Formula lhs, Formula rhs);
Formula make_par1(Formula lhs, Formula rhs);

/// Left-associated chain f0 & f1 & ... ; a single element is returned as is.
Formula and_chain(const std::vector<Formula>& items);
/// Inverse of and_chain along the left spine: ((a & b) & c) -> [a, b, c].
/// A non-& formula yields a one-element list.
std::vector<Formula> and_components(const Formula& f);

/// X & X' for an atom X.
Formula superposition(const Atom& x);

/// context |- succedent. The succedent is never empty.
struct Sequent {
  std::vector<Formula> context;
  std::vector<Formula> succedent;

  Sequent() = default;
  /// Throws std::invalid_argument on an empty succedent.
  Sequent(std::vector<Formula> context, std::vector<Formula> succedent);

  friend bool operator==(const Sequent&, const Sequent&) = default;
};

/// |- f
Sequent assert_formula(Formula f);

enum class MetaLink { Comma, NonEnt, MaxEnt };

std::string_view symbol(MetaLink link);

struct LinkedPair {
  Formula left;
  MetaLink link;
  Formula right;

  friend bool operator==(const LinkedPair&, const LinkedPair&) = default;
};

/// context |- left ~ right, for the two register links that are not the comma.
struct LinkedSequent {
  std::vector<Formula> context;
  LinkedPair pair;

  friend bool operator==(const LinkedSequent&, const LinkedSequent&) = default;
};

/// Anything that can stand as the conclusion of a derivation step.
using Statement = std::variant<Sequent, LinkedSequent>;

/// Builds the statement for a linked pair; a Comma link yields the ordinary
/// two-formula sequent.
Statement make_linked(std::vector<Formula> context, LinkedPair pair);

Formula parse_formula(std::string_view text);
Sequent parse_sequent(std::string_view text);
Statement parse_statement(std::string_view text);

/// Compound operands are parenthesised; the outermost formula is not.
std::string print(const Atom& a);
std::string print(const Formula& f);
std::string print(const Sequent& s);
std::string print(const LinkedSequent& s);
std::string print(const Statement& s);

}  // namespace blackbox::logic
