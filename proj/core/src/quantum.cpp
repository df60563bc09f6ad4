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

#include "blackbox/quantum.hpp"

#include <algorithm>
#include <cmath>

#include "blackbox/errors.hpp"

namespace blackbox::quantum {

namespace {

template <std::size_t N>
double norm_squared(const std::array<Amplitude, N>& amps) {
  double total = 0.0;
  for (const auto& a : amps) total += std::norm(a);
  return total;
}

template <std::size_t N>
void require_normalized(const std::array<Amplitude, N>& amps) {
  const double n = norm_squared(amps);
  if (!std::isfinite(n) || std::abs(n - 1.0) > kNormTolerance) {
    throw NormalizationError("state is not normalized: sum of |amp|^2 = " + std::to_string(n));
  }
}

template <std::size_t N>
Matrix<N> diagonal_matrix(const std::array<Amplitude, N>& diag) {
  Matrix<N> m{};
  for (std::size_t i = 0; i < N; ++i) m[i][i] = diag[i];
  return m;
}

template <std::size_t N>
std::array<double, N> moduli_squared(const std::array<Amplitude, N>& amps) {
  std::array<double, N> p{};
  for (std::size_t i = 0; i < N; ++i) p[i] = std::norm(amps[i]);
  return p;
}

// Phase-insensitive comparison: align b to a on the largest component of a.
template <std::size_t N>
bool phase_aligned_equal(const std::array<Amplitude, N>& a, const std::array<Amplitude, N>& b,
                         double tol) {
  std::size_t pivot = 0;
  for (std::size_t i = 1; i < N; ++i) {
    if (std::abs(a[i]) > std::abs(a[pivot])) pivot = i;
  }
  if (std::abs(b[pivot]) <= tol) return false;
  const Amplitude rotation = (a[pivot] / std::abs(a[pivot])) / (b[pivot] / std::abs(b[pivot]));
  for (std::size_t i = 0; i < N; ++i) {
    if (std::abs(a[i] - rotation * b[i]) > tol) return false;
  }
  return true;
}

}  // namespace

UnitPhase::UnitPhase(Amplitude value) : value_(value) {
  const double modulus = std::abs(value);
  if (!std::isfinite(modulus) || std::abs(modulus - 1.0) >= kUnitTolerance) {
    throw NormalizationError("phase factor does not have unit modulus: |z| = " +
                             std::to_string(modulus));
  }
}

UnitPhase UnitPhase::from_angle(double radians) {
  return UnitPhase(std::polar(1.0, radians));
}

UnitPhase operator*(UnitPhase a, UnitPhase b) {
  return UnitPhase(a.value_ * b.value_, UnitPhase::Trusted{});
}

Mirror1Q Mirror1Q::from_angles(double phi, double alpha) {
  return {UnitPhase::from_angle(phi), UnitPhase::from_angle(alpha)};
}

std::array<Amplitude, 2> Mirror1Q::diagonal() const {
  const Amplitude p = phase.value();
  return {p * alpha.value(), p * alpha.conj().value()};
}

Matrix2 Mirror1Q::matrix() const { return diagonal_matrix(diagonal()); }

Mirror2Q Mirror2Q::from_angles(double phi, double gamma, double delta) {
  return {UnitPhase::from_angle(phi), UnitPhase::from_angle(gamma), UnitPhase::from_angle(delta)};
}

std::array<Amplitude, 4> Mirror2Q::diagonal() const {
  const Amplitude p = phase.value();
  return {p * gamma.value(), p * delta.value(), p * delta.conj().value(),
          p * gamma.conj().value()};
}

Matrix4 Mirror2Q::matrix() const { return diagonal_matrix(diagonal()); }

Register1Q::Register1Q(Amplitude amp0, Amplitude amp1) : amps_{amp0, amp1} {
  require_normalized(amps_);
}

Register1Q Register1Q::basis(int bit) {
  if (bit != 0 && bit != 1) throw std::out_of_range("one-qubit basis index must be 0 or 1");
  return bit == 0 ? Register1Q(1.0, 0.0) : Register1Q(0.0, 1.0);
}

std::array<double, 2> Register1Q::probabilities() const { return moduli_squared(amps_); }

Register2Q::Register2Q(const std::array<Amplitude, 4>& amps) : amps_(amps) {
  require_normalized(amps_);
}

Register2Q Register2Q::basis(int index) {
  if (index < 0 || index > 3) throw std::out_of_range("two-qubit basis index must be in 0..3");
  std::array<Amplitude, 4> amps{};
  amps[static_cast<std::size_t>(index)] = 1.0;
  return Register2Q(amps);
}

std::array<double, 4> Register2Q::probabilities() const { return moduli_squared(amps_); }

Register2Q Register2Q::with_global_phase(double theta) const {
  const Amplitude z = std::polar(1.0, theta);
  std::array<Amplitude, 4> out = amps_;
  for (auto& a : out) a *= z;
  return Register2Q(out);
}

Register1Q normalize(Amplitude amp0, Amplitude amp1) {
  const double n = std::sqrt(std::norm(amp0) + std::norm(amp1));
  if (!(n > 0.0) || !std::isfinite(n)) throw NormalizationError("cannot normalize a zero vector");
  return Register1Q(amp0 / n, amp1 / n);
}

Register2Q normalize(const std::array<Amplitude, 4>& amps) {
  const double n = std::sqrt(norm_squared(amps));
  if (!(n > 0.0) || !std::isfinite(n)) throw NormalizationError("cannot normalize a zero vector");
  std::array<Amplitude, 4> out = amps;
  for (auto& a : out) a /= n;
  return Register2Q(out);
}

Register2Q product(const Register1Q& q1, const Register1Q& q2) {
  return Register2Q(q1[0] * q2[0], q1[0] * q2[1], q1[1] * q2[0], q1[1] * q2[1]);
}

bool equal_up_to_global_phase(const Register2Q& a, const Register2Q& b, double tol) {
  return phase_aligned_equal(a.amplitudes(), b.amplitudes(), tol);
}

bool equal_up_to_global_phase(const Register1Q& a, const Register1Q& b, double tol) {
  return phase_aligned_equal(a.amplitudes(), b.amplitudes(), tol);
}

Register1Q apply_mirror(const Mirror1Q& m, const Register1Q& q) {
  const auto d = m.diagonal();
  return Register1Q(d[0] * q[0], d[1] * q[1]);
}

Register2Q apply_mirror(const Mirror2Q& m, const Register2Q& s) {
  const auto d = m.diagonal();
  std::array<Amplitude, 4> out{};
  for (std::size_t i = 0; i < 4; ++i) out[i] = d[i] * s[i];
  return Register2Q(out);
}

Mirror2Q tensor_mirrors(const Mirror1Q& m1, const Mirror1Q& m2) {
  return {m1.phase * m2.phase, m1.alpha * m2.alpha, m1.alpha * m2.alpha.conj()};
}

Matrix2 projector_1q(int outcome) {
  if (outcome != 0 && outcome != 1) throw std::out_of_range("one-qubit outcome must be 0 or 1");
  Matrix2 p{};
  p[outcome][outcome] = 1.0;
  return p;
}

Matrix4 projector_2q(int outcome) {
  if (outcome < 0 || outcome > 3) throw std::out_of_range("two-qubit outcome must be in 0..3");
  Matrix4 p{};
  p[outcome][outcome] = 1.0;
  return p;
}

std::array<ProjectorTerm<2>, 2> decompose_mirror(const Mirror1Q& m) {
  const auto d = m.diagonal();
  return {{{d[0], projector_1q(0)}, {d[1], projector_1q(1)}}};
}

std::array<ProjectorTerm<4>, 4> decompose_mirror(const Mirror2Q& m) {
  const auto d = m.diagonal();
  return {{{d[0], projector_2q(0)},
           {d[1], projector_2q(1)},
           {d[2], projector_2q(2)},
           {d[3], projector_2q(3)}}};
}

double concurrence(const Register2Q& s) {
  const double c = 2.0 * std::abs(s[0] * s[3] - s[1] * s[2]);
  return std::clamp(c, 0.0, 1.0);
}

CorrelationClass classify(const Register2Q& s) {
  const double c = concurrence(s);
  if (c < kSeparableThreshold) return {Regime::Separable, 0.0};
  if (c > 1.0 - kMaximalThreshold) return {Regime::MaximallyEntangled, 1.0};
  return {Regime::Intermediate, c};
}

std::string to_string(Regime r) {
  switch (r) {
    case Regime::Separable:
      return "separable";
    case Regime::MaximallyEntangled:
      return "bell";
    case Regime::Intermediate:
      return "intermediate";
  }
  return "unknown";
}

Register2Q make_bell(Bell which) {
  const double h = 1.0 / std::sqrt(2.0);
  switch (which) {
    case Bell::PsiPlus:
      return Register2Q(h, 0.0, 0.0, h);
    case Bell::PsiMinus:
      return Register2Q(h, 0.0, 0.0, -h);
    case Bell::PhiPlus:
      return Register2Q(0.0, h, h, 0.0);
    case Bell::PhiMinus:
      return Register2Q(0.0, h, -h, 0.0);
  }
  throw std::invalid_argument("unknown Bell state");
}

Register2Q make_bell(std::string_view name) {
  if (name == "psi+") return make_bell(Bell::PsiPlus);
  if (name == "psi-" || name == "psi−") return make_bell(Bell::PsiMinus);
  if (name == "phi+") return make_bell(Bell::PhiPlus);
  if (name == "phi-" || name == "phi−") return make_bell(Bell::PhiMinus);
  throw ParseError("unknown Bell state '" + std::string(name) + "'");
}

}  // namespace blackbox::quantum
