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

// Fixed-dimension complex arithmetic for one- and two-qubit registers:
// mirror (reversible, diagonal unitary) measurements, computational-basis
// projectors, and the separable / maximally entangled split.

#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <string>
#include <string_view>
#include <variant>

namespace blackbox::quantum {

using Amplitude = std::complex<double>;

template <std::size_t N>
using Matrix = std::array<std::array<Amplitude, N>, N>;
using Matrix2 = Matrix<2>;
using Matrix4 = Matrix<4>;

inline constexpr double kUnitTolerance = 1e-9;
inline constexpr double kNormTolerance = 1e-9;
inline constexpr double kSeparableThreshold = 1e-6;
inline constexpr double kMaximalThreshold = 1e-6;

/// A complex number of modulus one. Construction validates, never rescales.
class UnitPhase {
 public:
  UnitPhase() = default;
  explicit UnitPhase(Amplitude value);

  static UnitPhase from_angle(double radians);

  Amplitude value() const noexcept { return value_; }
  UnitPhase conj() const noexcept { return UnitPhase(std::conj(value_), Trusted{}); }

  friend UnitPhase operator*(UnitPhase a, UnitPhase b);

 private:
  struct Trusted {};
  UnitPhase(Amplitude value, Trusted) noexcept : value_(value) {}

  Amplitude value_{1.0, 0.0};
};

/// e^{iφ} · diag(α, α*)
struct Mirror1Q {
  UnitPhase phase;
  UnitPhase alpha;

  static Mirror1Q from_angles(double phi, double alpha);

  std::array<Amplitude, 2> diagonal() const;
  Matrix2 matrix() const;
};

/// e^{iφ} · diag(γ, δ, δ*, γ*)
struct Mirror2Q {
  UnitPhase phase;
  UnitPhase gamma;
  UnitPhase delta;

  static Mirror2Q from_angles(double phi, double gamma, double delta);

  std::array<Amplitude, 4> diagonal() const;
  Matrix4 matrix() const;
};

/// Normalized state a|0> + b|1>.
class Register1Q {
 public:
  /// Throws NormalizationError unless |a|^2 + |b|^2 = 1 within kNormTolerance.
  Register1Q(Amplitude amp0, Amplitude amp1);

  static Register1Q basis(int bit);

  const std::array<Amplitude, 2>& amplitudes() const noexcept { return amps_; }
  Amplitude operator[](std::size_t i) const { return amps_.at(i); }
  std::array<double, 2> probabilities() const;

 private:
  std::array<Amplitude, 2> amps_;
};

/// Normalized state a|00> + b|01> + c|10> + d|11>; index = 2*q1 + q2.
class Register2Q {
 public:
  /// Throws NormalizationError unless the squared moduli sum to 1 within
  /// kNormTolerance.
  explicit Register2Q(const std::array<Amplitude, 4>& amps);
  Register2Q(Amplitude amp00, Amplitude amp01, Amplitude amp10, Amplitude amp11)
      : Register2Q(std::array<Amplitude, 4>{amp00, amp01, amp10, amp11}) {}

  static Register2Q basis(int index);

  const std::array<Amplitude, 4>& amplitudes() const noexcept { return amps_; }
  Amplitude operator[](std::size_t i) const { return amps_.at(i); }
  std::array<double, 4> probabilities() const;

  /// Multiplies every amplitude by e^{iθ}.
  Register2Q with_global_phase(double theta) const;

 private:
  std::array<Amplitude, 4> amps_;
};

/// Explicit rescaling for input preparation. Throws NormalizationError on a
/// zero vector.
Register1Q normalize(Amplitude amp0, Amplitude amp1);
Register2Q normalize(const std::array<Amplitude, 4>& amps);

/// |q1> ⊗ |q2>
Register2Q product(const Register1Q& q1, const Register1Q& q2);

bool equal_up_to_global_phase(const Register2Q& a, const Register2Q& b, double tol = 1e-9);
bool equal_up_to_global_phase(const Register1Q& a, const Register1Q& b, double tol = 1e-9);

Register1Q apply_mirror(const Mirror1Q& m, const Register1Q& q);
Register2Q apply_mirror(const Mirror2Q& m, const Register2Q& s);

/// M1 ⊗ M2 in the γ = αβ, δ = αβ* parametrisation.
Mirror2Q tensor_mirrors(const Mirror1Q& m1, const Mirror1Q& m2);

Matrix2 projector_1q(int outcome);
/// `outcome` is the basis index 0..3 (00, 01, 10, 11).
Matrix4 projector_2q(int outcome);

template <std::size_t N>
struct ProjectorTerm {
  Amplitude coefficient;
  Matrix<N> projector;
};

/// M = e^{iφ}α P0 + e^{iφ}α* P1
std::array<ProjectorTerm<2>, 2> decompose_mirror(const Mirror1Q& m);
/// M = e^{iφ}(γ P00 + δ P01 + δ* P10 + γ* P11)
std::array<ProjectorTerm<4>, 4> decompose_mirror(const Mirror2Q& m);

/// 2|ad - bc|, clamped to [0, 1].
double concurrence(const Register2Q& s);

enum class Regime { Separable, MaximallyEntangled, Intermediate };

struct CorrelationClass {
  Regime tag;
  double degree;  // 0 for Separable, 1 for MaximallyEntangled

  friend bool operator==(const CorrelationClass&, const CorrelationClass&) = default;
};

CorrelationClass classify(const Register2Q& s);

std::string to_string(Regime r);

enum class Bell { PsiPlus, PsiMinus, PhiPlus, PhiMinus };

Register2Q make_bell(Bell which);
/// Accepts "psi+", "psi-", "phi+", "phi-" (a U+2212 minus is also accepted).
/// Throws ParseError on anything else.
Register2Q make_bell(std::string_view name);

// Literal syntax shared with the command line:
//   bell:psi+   basis:01   vec:(re,im);(re,im);(re,im);(re,im)   vec2:(re,im);(re,im)
//   mirror1:phi=<rad>,alpha=<rad>   mirror2:phi=<rad>,gamma=<rad>,delta=<rad>
using State = std::variant<Register1Q, Register2Q>;
using Mirror = std::variant<Mirror1Q, Mirror2Q>;

State parse_state(std::string_view text);
Mirror parse_mirror(std::string_view text);

/// Renders `vec:`/`vec2:` literals with 12 significant digits.
std::string format_state(const Register1Q& q);
std::string format_state(const Register2Q& s);

}  // namespace blackbox::quantum
