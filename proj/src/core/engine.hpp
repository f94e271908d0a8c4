// Copyright 2026 The QLAN Simulator Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Dense pure-state simulation of the shared register.
//
// Bit order: amplitude index bit i is the computational value of labels()[i],
// so labels()[0] is the least significant bit.

#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "core/graph.hpp"

namespace qlan {

using QubitLabel = VertexId;
using Amplitude = std::complex<double>;

inline constexpr std::size_t kMaxQubits = 20;
inline constexpr double kNormTolerance = 1e-12;
inline constexpr double kImpossibleProbability = 1e-12;

enum class PauliAxis : std::uint8_t { X, Y, Z };

enum class Outcome : std::int8_t { Plus = +1, Minus = -1 };

char axis_letter(PauliAxis axis);  // 'x', 'y' or 'z'
char outcome_sign(Outcome m);      // '+' or '-'

enum class GateKind : std::uint8_t {
  I,
  X,
  Z,
  H,
  SqrtPlusIZ,   // sqrt(+i sigma_z)
  SqrtMinusIZ,  // sqrt(-i sigma_z)
  SqrtPlusIY,   // sqrt(+i sigma_y)
  SqrtMinusIY,  // sqrt(-i sigma_y)
  Custom,
};

/// 2x2 unitary, row-major: {m00, m01, m10, m11}.
class SingleQubitGate {
 public:
  using Matrix = std::array<Amplitude, 4>;

  static SingleQubitGate identity();
  static SingleQubitGate pauli_x();
  static SingleQubitGate pauli_z();
  static SingleQubitGate hadamard();
  /// Principal square roots; see engine.cpp for the matrices.
  static SingleQubitGate sqrt_plus_i_z();
  static SingleQubitGate sqrt_minus_i_z();
  static SingleQubitGate sqrt_plus_i_y();
  static SingleQubitGate sqrt_minus_i_y();

  /// Throws DomainError unless `m` is unitary within kNormTolerance.
  static SingleQubitGate custom(const Matrix& m, std::string name = "U");

  SingleQubitGate adjoint() const;

  const Matrix& matrix() const noexcept { return m_; }
  GateKind kind() const noexcept { return kind_; }
  bool is_adjoint() const noexcept { return adjoint_; }
  /// e.g. "Z", "sqrt(-iZ)^dag".
  std::string name() const;

  /// Max-entry distance to `other`, without phase alignment.
  double distance(const SingleQubitGate& other) const;

 private:
  SingleQubitGate(GateKind kind, const Matrix& m, bool adjoint = false, std::string custom_name = {})
      : kind_(kind), m_(m), adjoint_(adjoint), custom_name_(std::move(custom_name)) {}

  GateKind kind_;
  Matrix m_;
  bool adjoint_;
  std::string custom_name_;
};

class PureState {
 public:
  /// |+>^n over the given labels.
  static PureState plus(std::span<const QubitLabel> labels);
  /// Throws DomainError on length mismatch or norm off by more than kNormTolerance.
  static PureState from_amplitudes(std::vector<QubitLabel> labels, std::vector<Amplitude> amps);

  const std::vector<QubitLabel>& labels() const noexcept { return labels_; }
  const std::vector<Amplitude>& amplitudes() const noexcept { return amps_; }
  std::size_t qubit_count() const noexcept { return labels_.size(); }
  bool contains(QubitLabel q) const noexcept;
  std::size_t slot_of(QubitLabel q) const;
  double norm_squared() const;

  void apply_cz(QubitLabel a, QubitLabel b);
  void apply_gate(QubitLabel q, const SingleQubitGate& u);

  /// Same state with slots permuted into `order` (must be a permutation of labels()).
  PureState reordered(std::span<const QubitLabel> order) const;

 private:
  PureState(std::vector<QubitLabel> labels, std::vector<Amplitude> amps)
      : labels_(std::move(labels)), amps_(std::move(amps)) {}

  std::vector<QubitLabel> labels_;
  std::vector<Amplitude> amps_;
};

PureState plus_state(std::span<const QubitLabel> labels);
PureState apply_cz(PureState s, QubitLabel a, QubitLabel b);
PureState apply_gate(PureState s, QubitLabel q, const SingleQubitGate& u);

/// Seedable generator used for Born-rule sampling. Each measurement index
/// draws from its own stream derived from the scenario's root seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  static Rng for_stream(std::uint64_t root_seed, std::uint64_t stream);

  /// Uniform in [0, 1) with 53 random bits.
  double uniform();

 private:
  std::mt19937_64 engine_;
};

/// Either a forced outcome or a generator to sample from.
using OutcomeSource = std::variant<Outcome, Rng*>;

struct MeasureResult {
  Outcome outcome;
  double probability;  // Born probability of `outcome`
  PureState post;      // renormalised, measured slot removed
};

/// Born probability of sign `m` when measuring `q` along `axis`.
double outcome_probability(const PureState& s, QubitLabel q, PauliAxis axis, Outcome m);

/// Projective Pauli measurement. The measured qubit collapses onto |axis,m>
/// and is contracted out of the register. Throws ImpossibleOutcomeError (with
/// index 0; callers re-tag it) for a forced outcome of probability below
/// kImpossibleProbability.
MeasureResult pauli_measure(const PureState& s, QubitLabel q, PauliAxis axis, OutcomeSource source);

/// |<s1|s2>|^2 after aligning slots by label.
double fidelity(const PureState& s1, const PureState& s2);
bool equal_up_to_global_phase(const PureState& s1, const PureState& s2, double tol);

}  // namespace qlan
