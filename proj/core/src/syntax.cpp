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

#include "blackbox/syntax.hpp"

#include <cctype>

#include "blackbox/errors.hpp"

namespace blackbox::logic::syntax {

namespace {

bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }
bool is_lower(char c) { return c >= 'a' && c <= 'z'; }
bool is_alnum(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }

struct Glyph {
  std::string_view utf8;
  Tok kind;
};

// Unicode spellings of the ASCII tokens. ⊘ is handled separately because it
// takes an optional 0/1 suffix.
constexpr Glyph kGlyphs[] = {
    {"⊥", Tok::Prime},
    {"⊢", Tok::Turnstile},
    {"≍", Tok::Link0},
    {"⋈", Tok::Link1},
};

constexpr std::string_view kOslash = "⊘";
constexpr std::string_view kSub0 = "₀";
constexpr std::string_view kSub1 = "₁";

std::string_view describe(Tok kind) {
  switch (kind) {
    case Tok::Ident: return "atom";
    case Tok::Lower: return "keyword";
    case Tok::Prime: return "'";
    case Tok::Amp: return "&";
    case Tok::Par: return "%";
    case Tok::Par0: return "%0";
    case Tok::Par1: return "%1";
    case Tok::Link0: return "~0";
    case Tok::Link1: return "~1";
    case Tok::Turnstile: return "|-";
    case Tok::Comma: return ",";
    case Tok::LParen: return "(";
    case Tok::RParen: return ")";
    case Tok::Colon: return ":";
    case Tok::End: return "end of input";
  }
  return "?";
}

bool is_binop(Tok kind) {
  return kind == Tok::Amp || kind == Tok::Par || kind == Tok::Par0 || kind == Tok::Par1;
}

Connective to_connective(Tok kind) {
  switch (kind) {
    case Tok::Par: return Connective::Par;
    case Tok::Par0: return Connective::Par0;
    case Tok::Par1: return Connective::Par1;
    default: return Connective::And;
  }
}

}  // namespace

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto push = [&](Tok kind, std::size_t start, std::size_t len) {
    out.push_back({kind, std::string(text.substr(start, len)), start});
    i = start + len;
  };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::string_view rest = text.substr(i);
    if (is_upper(c) || is_lower(c)) {
      std::size_t j = i + 1;
      while (j < text.size() && is_alnum(text[j])) ++j;
      push(is_upper(c) ? Tok::Ident : Tok::Lower, i, j - i);
      continue;
    }
    switch (c) {
      case '\'': push(Tok::Prime, i, 1); continue;
      case '&': push(Tok::Amp, i, 1); continue;
      case ',': push(Tok::Comma, i, 1); continue;
      case '(': push(Tok::LParen, i, 1); continue;
      case ')': push(Tok::RParen, i, 1); continue;
      case ':': push(Tok::Colon, i, 1); continue;
      case '%':
        if (rest.starts_with("%0")) push(Tok::Par0, i, 2);
        else if (rest.starts_with("%1")) push(Tok::Par1, i, 2);
        else push(Tok::Par, i, 1);
        continue;
      case '~':
        if (rest.starts_with("~0")) push(Tok::Link0, i, 2);
        else if (rest.starts_with("~1")) push(Tok::Link1, i, 2);
        else throw ParseError("'~' must be followed by 0 or 1", i);
        continue;
      case '|':
        if (rest.starts_with("|-")) push(Tok::Turnstile, i, 2);
        else throw ParseError("'|' must be followed by '-'", i);
        continue;
      default:
        break;
    }
    if (rest.starts_with(kOslash)) {
      const std::string_view after = rest.substr(kOslash.size());
      if (after.starts_with("0")) push(Tok::Par0, i, kOslash.size() + 1);
      else if (after.starts_with("1")) push(Tok::Par1, i, kOslash.size() + 1);
      else if (after.starts_with(kSub0)) push(Tok::Par0, i, kOslash.size() + kSub0.size());
      else if (after.starts_with(kSub1)) push(Tok::Par1, i, kOslash.size() + kSub1.size());
      else push(Tok::Par, i, kOslash.size());
      continue;
    }
    bool matched = false;
    for (const auto& g : kGlyphs) {
      if (rest.starts_with(g.utf8)) {
        push(g.kind, i, g.utf8.size());
        matched = true;
        break;
      }
    }
    if (!matched) throw ParseError(std::string("unexpected character '") + c + "'", i);
  }
  out.push_back({Tok::End, "", text.size()});
  return out;
}

Parser::Parser(std::string_view text) : tokens_(tokenize(text)) {}

const Token& Parser::peek(std::size_t ahead) const {
  const std::size_t k = index_ + ahead;
  return k < tokens_.size() ? tokens_[k] : tokens_.back();
}

Token Parser::next() {
  Token t = peek();
  if (index_ < tokens_.size() - 1) ++index_;
  return t;
}

bool Parser::accept(Tok kind) {
  if (peek().kind != kind) return false;
  next();
  return true;
}

Token Parser::expect(Tok kind, std::string_view what) {
  if (peek().kind != kind) {
    fail("expected " + std::string(what) + ", found " +
         (peek().kind == Tok::End ? std::string("end of input") : "'" + peek().text + "'"));
  }
  return next();
}

void Parser::expect_end() const {
  if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'");
}

void Parser::fail(const std::string& message) const { throw ParseError(message, peek().pos); }

Formula Parser::primary() {
  if (accept(Tok::LParen)) {
    Formula inner = formula();
    expect(Tok::RParen, "')'");
    return inner;
  }
  const Token name = expect(Tok::Ident, "an atom or '('");
  const bool dual = accept(Tok::Prime);
  return Formula(Atom{name.text, dual});
}

Formula Parser::formula() {
  Formula lhs = primary();
  while (is_binop(peek().kind)) {
    const Connective op = to_connective(next().kind);
    lhs = Formula(op, std::move(lhs), primary());
  }
  return lhs;
}

std::vector<Formula> Parser::formula_list() {
  std::vector<Formula> items{formula()};
  while (accept(Tok::Comma)) items.push_back(formula());
  return items;
}

Statement Parser::statement() {
  std::vector<Formula> context;
  if (peek().kind != Tok::Turnstile) context = formula_list();
  expect(Tok::Turnstile, std::string("'") + std::string(describe(Tok::Turnstile)) + "'");
  Formula first = formula();
  if (peek().kind == Tok::Link0 || peek().kind == Tok::Link1) {
    const MetaLink link = next().kind == Tok::Link0 ? MetaLink::NonEnt : MetaLink::MaxEnt;
    Formula second = formula();
    return LinkedSequent{std::move(context), LinkedPair{std::move(first), link, std::move(second)}};
  }
  std::vector<Formula> succedent{std::move(first)};
  while (accept(Tok::Comma)) succedent.push_back(formula());
  return Sequent(std::move(context), std::move(succedent));
}

}  // namespace blackbox::logic::syntax
