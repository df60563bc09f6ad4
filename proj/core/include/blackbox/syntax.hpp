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

// Shared tokenizer and recursive-descent parser for formulas, sequents and
// derivation files.

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "blackbox/formulas.hpp"

namespace blackbox::logic::syntax {

enum class Tok {
  Ident,      // A, B2
  Lower,      // rule names and keywords: andF, concl, prem
  Prime,      // '
  Amp,        // &
  Par,        // %
  Par0,       // %0
  Par1,       // %1
  Link0,      // ~0
  Link1,      // ~1
  Turnstile,  // |-
  Comma,
  LParen,
  RParen,
  Colon,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

/// Throws ParseError on characters outside the surface alphabet.
std::vector<Token> tokenize(std::string_view text);

class Parser {
 public:
  explicit Parser(std::string_view text);

  const Token& peek(std::size_t ahead = 0) const;
  Token next();
  bool accept(Tok kind);
  Token expect(Tok kind, std::string_view what);
  void expect_end() const;
  [[noreturn]] void fail(const std::string& message) const;

  Formula formula();
  std::vector<Formula> formula_list();
  Statement statement();

 private:
  Formula primary();

  std::vector<Token> tokens_;
  std::size_t index_ = 0;
};

}  // namespace blackbox::logic::syntax
