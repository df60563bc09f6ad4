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

#pragma once

#include <cstddef>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace blackbox {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A state vector or phase whose modulus is off by more than the tolerance.
class NormalizationError : public Error {
 public:
  using Error::Error;
};

/// Malformed text in one of the surface syntaxes (literals, formulas,
/// sequents, derivation files). `position` is a byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error("parse error at " + std::to_string(position) + ": " + message),
        position_(position) {}
  explicit ParseError(const std::string& message) : Error("parse error: " + message) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_ = 0;
};

/// The register is neither separable nor maximally entangled; no connective
/// exists for an intermediate degree of correlation.
class IntermediateRegime : public Error {
 public:
  explicit IntermediateRegime(double degree)
      : Error("intermediate correlation regime (degree " + format(degree) + ")"), degree_(degree) {}

  double degree() const noexcept { return degree_; }

 private:
  static std::string format(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
  }

  double degree_;
};

/// The outcome support of a register has no judgement shape (for instance a
/// maximally entangled state that is not a Bell pair in the computational
/// basis).
class UnsupportedSupport : public Error {
 public:
  using Error::Error;
};

}  // namespace blackbox
