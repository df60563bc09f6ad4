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

#include "blackbox/formulas.hpp"

#include <stdexcept>

#include "blackbox/errors.hpp"
#include "blackbox/syntax.hpp"

namespace blackbox::logic {

Atom dualize(const Atom& a) { return Atom{a.name, !a.dual}; }

bool is_identifier(std::string_view name) {
  if (name.empty() || name[0] < 'A' || name[0] > 'Z') return false;
  for (char c : name) {
    const bool ok = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9');
    if (!ok) return false;
  }
  return true;
}

std::string_view symbol(Connective c) {
  switch (c) {
    case Connective::And: return "&";
    case Connective::Par: return "%";
    case Connective::Par0: return "%0";
    case Connective::Par1: return "%1";
  }
  return "?";
}

std::string_view symbol(MetaLink link) {
  switch (link) {
    case MetaLink::Comma: return ",";
    case MetaLink::NonEnt: return "~0";
    case MetaLink::MaxEnt: return "~1";
  }
  return "?";
}

Formula::Formula(Atom atom) : node_(std::move(atom)) {
  if (!is_identifier(std::get<Atom>(node_).name)) {
    throw std::invalid_argument("invalid atom name '" + std::get<Atom>(node_).name + "'");
  }
}

Formula::Formula(Connective op, Formula lhs, Formula rhs)
    : node_(Binary{op, std::make_shared<const Formula>(std::move(lhs)),
                   std::make_shared<const Formula>(std::move(rhs))}) {}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_.index() != b.node_.index()) return false;
  if (a.is_atom()) return a.atom() == b.atom();
  const auto& x = std::get<Formula::Binary>(a.node_);
  const auto& y = std::get<Formula::Binary>(b.node_);
  if (x.op != y.op) return false;
  return (x.lhs == y.lhs || *x.lhs == *y.lhs) && (x.rhs == y.rhs || *x.rhs == *y.rhs);
}

Formula atom(std::string name, bool dual) { return Formula(Atom{std::move(name), dual}); }
Formula make_and(Formula lhs, Formula rhs) { return {Connective::And, std::move(lhs), std::move(rhs)}; }
Formula make_par(Formula lhs, Formula rhs) { return {Connective::Par, std::move(lhs), std::move(rhs)}; }
Formula make_par0(Formula lhs, Formula rhs) { return {Connective::Par0, std::move(lhs), std::move(rhs)}; }
Formula make_par1(Formula lhs, Formula rhs) { return {Connective::Par1, std::move(lhs), std::move(rhs)}; }

Formula and_chain(const std::vector<Formula>& items) {
  if (items.empty()) throw std::invalid_argument("and_chain of an empty list");
  Formula acc = items.front();
  for (std::size_t i = 1; i < items.size(); ++i) acc = make_and(std::move(acc), items[i]);
  return acc;
}

std::vector<Formula> and_components(const Formula& f) {
  std::vector<const Formula*> rights;
  const Formula* cur = &f;
  while (cur->is(Connective::And)) {
    rights.push_back(&cur->rhs());
    cur = &cur->lhs();
  }
  std::vector<Formula> out{*cur};
  for (auto it = rights.rbegin(); it != rights.rend(); ++it) out.push_back(**it);
  return out;
}

Formula superposition(const Atom& x) { return make_and(Formula(x), Formula(dualize(x))); }

Sequent::Sequent(std::vector<Formula> ctx, std::vector<Formula> succ)
    : context(std::move(ctx)), succedent(std::move(succ)) {
  if (succedent.empty()) throw std::invalid_argument("sequent with an empty succedent");
}

Sequent assert_formula(Formula f) { return Sequent({}, {std::move(f)}); }

Statement make_linked(std::vector<Formula> context, LinkedPair pair) {
  if (pair.link == MetaLink::Comma) {
    return Sequent(std::move(context), {std::move(pair.left), std::move(pair.right)});
  }
  return LinkedSequent{std::move(context), std::move(pair)};
}

Formula parse_formula(std::string_view text) {
  syntax::Parser p(text);
  Formula f = p.formula();
  p.expect_end();
  return f;
}

Statement parse_statement(std::string_view text) {
  syntax::Parser p(text);
  Statement s = p.statement();
  p.expect_end();
  return s;
}

Sequent parse_sequent(std::string_view text) {
  Statement s = parse_statement(text);
  if (auto* seq = std::get_if<Sequent>(&s)) return std::move(*seq);
  throw ParseError("register links ~0/~1 are not allowed in a plain sequent");
}

namespace {

void print_into(std::string& out, const Formula& f, bool nested) {
  if (f.is_atom()) {
    out += print(f.atom());
    return;
  }
  if (nested) out += '(';
  print_into(out, f.lhs(), !f.lhs().is(f.connective()));
  out += ' ';
  out += symbol(f.connective());
  out += ' ';
  print_into(out, f.rhs(), true);
  if (nested) out += ')';
}

std::string print_list(const std::vector<Formula>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i != 0) out += ", ";
    out += print(items[i]);
  }
  return out;
}

std::string turnstile_prefix(const std::vector<Formula>& context) {
  return context.empty() ? "|- " : print_list(context) + " |- ";
}

}  // namespace

std::string print(const Atom& a) { return a.dual ? a.name + "'" : a.name; }

std::string print(const Formula& f) {
  std::string out;
  print_into(out, f, false);
  return out;
}

std::string print(const Sequent& s) { return turnstile_prefix(s.context) + print_list(s.succedent); }

std::string print(const LinkedSequent& s) {
  // Operands are parenthesised like connective operands so the link cannot
  // be mistaken for part of either side.
  std::string out = turnstile_prefix(s.context);
  print_into(out, s.pair.left, true);
  out += ' ';
  out += symbol(s.pair.link);
  out += ' ';
  print_into(out, s.pair.right, true);
  return out;
}

std::string print(const Statement& s) {
  return std::visit([](const auto& x) { return print(x); }, s);
}

}  // namespace blackbox::logic
