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
#include "blackbox/syntax.hpp"

namespace blackbox::logic {

namespace {

using syntax::Parser;
using syntax::Tok;

void expect_keyword(Parser& p, std::string_view word) {
  if (p.peek().kind != Tok::Lower || p.peek().text != word) {
    p.fail("expected '" + std::string(word) + ":'");
  }
  p.next();
  p.expect(Tok::Colon, "':'");
}

Derivation parse_tree(Parser& p) {
  p.expect(Tok::LParen, "'('");
  if (p.peek().kind != Tok::Lower) p.fail("expected a rule name");
  const auto rule = rule_from_token(p.peek().text);
  if (!rule) p.fail("unknown rule '" + p.peek().text + "'");
  p.next();
  expect_keyword(p, "concl");
  Derivation d{p.statement(), *rule, {}};
  while (p.peek().kind == Tok::Lower && p.peek().text == "prem") {
    expect_keyword(p, "prem");
    d.premises.push_back(parse_tree(p));
  }
  p.expect(Tok::RParen, "')' or 'prem:'");
  return d;
}

void print_tree(std::string& out, const Derivation& d, std::size_t indent) {
  out += '(';
  out += rule_token(d.rule);
  out += " concl: ";
  out += print(d.conclusion);
  for (const auto& p : d.premises) {
    out += '\n';
    out.append(indent + 2, ' ');
    out += "prem: ";
    print_tree(out, p, indent + 2);
  }
  out += ')';
}

}  // namespace

Derivation parse_derivation(std::string_view text) {
  Parser p(text);
  Derivation d = parse_tree(p);
  p.expect_end();
  return d;
}

std::string print_derivation(const Derivation& d) {
  std::string out;
  print_tree(out, d, 0);
  return out;
}

}  // namespace blackbox::logic
