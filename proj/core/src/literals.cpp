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

#include <cctype>
#include <charconv>
#include <cstdio>
#include <string>
#include <vector>

#include "blackbox/errors.hpp"
#include "blackbox/quantum.hpp"

namespace blackbox::quantum {

namespace {

// Minimal cursor over a literal; positions in errors are byte offsets into
// the full literal text.
class Cursor {
 public:
  Cursor(std::string_view text, std::size_t pos) : text_(text), pos_(pos) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  bool accept(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view token) {
    if (!accept(token)) throw ParseError("expected '" + std::string(token) + "'", pos_);
  }

  double number() {
    skip_space();
    std::size_t start = pos_;
    if (start < text_.size() && text_[start] == '+') ++start;
    double value = 0.0;
    const char* first = text_.data() + start;
    const char* last = text_.data() + text_.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr == first) throw ParseError("expected a real number", pos_);
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return value;
  }

  void expect_end() {
    if (!at_end()) throw ParseError("unexpected trailing input", pos_);
  }

 private:
  std::string_view text_;
  std::size_t pos_;
};

std::vector<Amplitude> parse_vector(std::string_view text, std::size_t offset) {
  Cursor c(text, offset);
  std::vector<Amplitude> amps;
  do {
    c.expect("(");
    const double re = c.number();
    c.expect(",");
    const double im = c.number();
    c.expect(")");
    amps.emplace_back(re, im);
  } while (c.accept(";"));
  c.expect_end();
  return amps;
}

// Parses "key=value,key=value" in the given key order.
std::vector<double> parse_angles(std::string_view text, std::size_t offset,
                                 std::initializer_list<std::string_view> keys) {
  Cursor c(text, offset);
  std::vector<double> values;
  bool first = true;
  for (auto key : keys) {
    if (!first) c.expect(",");
    first = false;
    c.expect(key);
    c.expect("=");
    values.push_back(c.number());
  }
  c.expect_end();
  return values;
}

std::string format_real(double x) {
  if (x == 0.0) x = 0.0;  // drop the sign of -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

template <std::size_t N>
std::string format_amplitudes(std::string_view prefix, const std::array<Amplitude, N>& amps) {
  std::string out(prefix);
  for (std::size_t i = 0; i < N; ++i) {
    if (i != 0) out += ';';
    out += '(' + format_real(amps[i].real()) + ',' + format_real(amps[i].imag()) + ')';
  }
  return out;
}

}  // namespace

State parse_state(std::string_view text) {
  if (text.starts_with("bell:")) return make_bell(text.substr(5));
  if (text.starts_with("basis:")) {
    const auto bits = text.substr(6);
    if (bits == "0" || bits == "1") return Register1Q::basis(bits[0] - '0');
    if (bits.size() == 2 && (bits[0] == '0' || bits[0] == '1') && (bits[1] == '0' || bits[1] == '1')) {
      return Register2Q::basis(2 * (bits[0] - '0') + (bits[1] - '0'));
    }
    throw ParseError("basis label must be 0, 1, 00, 01, 10 or 11", 6);
  }
  if (text.starts_with("vec2:")) {
    const auto amps = parse_vector(text, 5);
    if (amps.size() != 2) throw ParseError("vec2 literal needs exactly 2 amplitudes", 5);
    return Register1Q(amps[0], amps[1]);
  }
  if (text.starts_with("vec:")) {
    const auto amps = parse_vector(text, 4);
    if (amps.size() != 4) throw ParseError("vec literal needs exactly 4 amplitudes", 4);
    return Register2Q(std::array<Amplitude, 4>{amps[0], amps[1], amps[2], amps[3]});
  }
  throw ParseError("unknown state literal '" + std::string(text) + "'", 0);
}

Mirror parse_mirror(std::string_view text) {
  if (text.starts_with("mirror1:")) {
    const auto v = parse_angles(text, 8, {"phi", "alpha"});
    return Mirror1Q::from_angles(v[0], v[1]);
  }
  if (text.starts_with("mirror2:")) {
    const auto v = parse_angles(text, 8, {"phi", "gamma", "delta"});
    return Mirror2Q::from_angles(v[0], v[1], v[2]);
  }
  throw ParseError("unknown mirror literal '" + std::string(text) + "'", 0);
}

std::string format_state(const Register1Q& q) { return format_amplitudes("vec2:", q.amplitudes()); }

std::string format_state(const Register2Q& s) { return format_amplitudes("vec:", s.amplitudes()); }

}  // namespace blackbox::quantum
