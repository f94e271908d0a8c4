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

#include "core/engine.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

#include "core/errors.hpp"

namespace qlan {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

const Amplitude kEighthTurn = std::polar(1.0, std::numbers::pi / 4);

std::string describe(QubitLabel q) { return "qubit #" + std::to_string(q.index); }

/// Spreads `low` around a zero at bit position `k`.
inline std::size_t insert_zero_bit(std::size_t low, std::size_t k) {
  const std::size_t mask = (std::size_t{1} << k) - 1;
  return ((low & ~mask) << 1) | (low & mask);
}

/// Eigenvector of sigma_axis with eigenvalue m, in the computational basis.
std::array<Amplitude, 2> eigenvector(PauliAxis axis, Outcome m) {
  const double sign = m == Outcome::Plus ? 1.0 : -1.0;
  switch (axis) {
    case PauliAxis::Z:
      return m == Outcome::Plus ? std::array<Amplitude, 2>{1.0, 0.0}
                                : std::array<Amplitude, 2>{0.0, 1.0};
    case PauliAxis::X:
      return {kInvSqrt2, sign * kInvSqrt2};
    case PauliAxis::Y:
      return {kInvSqrt2, Amplitude(0.0, sign * kInvSqrt2)};
  }
  return {};
}

/// <e|_q s, left unnormalised.
std::vector<Amplitude> contract(const PureState& s, std::size_t k, const std::array<Amplitude, 2>& e) {
  const auto& amps = s.amplitudes();
  const std::size_t half = amps.size() / 2;
  const std::size_t bit = std::size_t{1} << k;
  const Amplitude c0 = std::conj(e[0]);
  const Amplitude c1 = std::conj(e[1]);
  std::vector<Amplitude> out(half);
  for (std::size_t y = 0; y < half; ++y) {
    const std::size_t i0 = insert_zero_bit(y, k);
    out[y] = c0 * amps[i0] + c1 * amps[i0 | bit];
  }
  return out;
}

double squared_norm(const std::vector<Amplitude>& v) {
  double acc = 0.0;
  for (const Amplitude& a : v) {
    acc += std::norm(a);
  }
  return acc;
}

}  // namespace

char axis_letter(PauliAxis axis) {
  switch (axis) {
    case PauliAxis::X:
      return 'x';
    case PauliAxis::Y:
      return 'y';
    case PauliAxis::Z:
      return 'z';
  }
  return '?';
}

char outcome_sign(Outcome m) { return m == Outcome::Plus ? '+' : '-'; }

// ---------------------------------------------------------------------------
// Gates

SingleQubitGate SingleQubitGate::identity() { return {GateKind::I, {1.0, 0.0, 0.0, 1.0}}; }

SingleQubitGate SingleQubitGate::pauli_x() { return {GateKind::X, {0.0, 1.0, 1.0, 0.0}}; }

SingleQubitGate SingleQubitGate::pauli_z() { return {GateKind::Z, {1.0, 0.0, 0.0, -1.0}}; }

SingleQubitGate SingleQubitGate::hadamard() {
  return {GateKind::H, {kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2}};
}

// (1 + i Z) / sqrt(2) = diag(e^{i pi/4}, e^{-i pi/4})
SingleQubitGate SingleQubitGate::sqrt_plus_i_z() {
  return {GateKind::SqrtPlusIZ, {kEighthTurn, 0.0, 0.0, std::conj(kEighthTurn)}};
}

// (1 - i Z) / sqrt(2) = diag(e^{-i pi/4}, e^{i pi/4})
SingleQubitGate SingleQubitGate::sqrt_minus_i_z() {
  return {GateKind::SqrtMinusIZ, {std::conj(kEighthTurn), 0.0, 0.0, kEighthTurn}};
}

// (1 + i Y) / sqrt(2) = [[1, 1], [-1, 1]] / sqrt(2)
SingleQubitGate SingleQubitGate::sqrt_plus_i_y() {
  return {GateKind::SqrtPlusIY, {kInvSqrt2, kInvSqrt2, -kInvSqrt2, kInvSqrt2}};
}

// (1 - i Y) / sqrt(2) = [[1, -1], [1, 1]] / sqrt(2)
SingleQubitGate SingleQubitGate::sqrt_minus_i_y() {
  return {GateKind::SqrtMinusIY, {kInvSqrt2, -kInvSqrt2, kInvSqrt2, kInvSqrt2}};
}

SingleQubitGate SingleQubitGate::custom(const Matrix& m, std::string name) {
  // U U^dag == I
  const Amplitude d00 = m[0] * std::conj(m[0]) + m[1] * std::conj(m[1]);
  const Amplitude d01 = m[0] * std::conj(m[2]) + m[1] * std::conj(m[3]);
  const Amplitude d11 = m[2] * std::conj(m[2]) + m[3] * std::conj(m[3]);
  const double err = std::max({std::abs(d00 - 1.0), std::abs(d01), std::abs(d11 - 1.0)});
  if (!(err <= kNormTolerance)) {
    throw DomainError("gate '" + name + "' is not unitary (deviation " + std::to_string(err) + ")");
  }
  return {GateKind::Custom, m, false, std::move(name)};
}

SingleQubitGate SingleQubitGate::adjoint() const {
  Matrix d{std::conj(m_[0]), std::conj(m_[2]), std::conj(m_[1]), std::conj(m_[3])};
  return {kind_, d, !adjoint_, custom_name_};
}

std::string SingleQubitGate::name() const {
  std::string base;
  switch (kind_) {
    case GateKind::I:
      base = "I";
      break;
    case GateKind::X:
      base = "X";
      break;
    case GateKind::Z:
      base = "Z";
      break;
    case GateKind::H:
      base = "H";
      break;
    case GateKind::SqrtPlusIZ:
      base = "sqrt(+iZ)";
      break;
    case GateKind::SqrtMinusIZ:
      base = "sqrt(-iZ)";
      break;
    case GateKind::SqrtPlusIY:
      base = "sqrt(+iY)";
      break;
    case GateKind::SqrtMinusIY:
      base = "sqrt(-iY)";
      break;
    case GateKind::Custom:
      base = custom_name_;
      break;
  }
  // Paulis, H and I are self-adjoint.
  const bool hermitian = kind_ == GateKind::I || kind_ == GateKind::X || kind_ == GateKind::Z ||
                         kind_ == GateKind::H;
  return adjoint_ && !hermitian ? base + "^dag" : base;
}

double SingleQubitGate::distance(const SingleQubitGate& other) const {
  double d = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    d = std::max(d, std::abs(m_[i] - other.m_[i]));
  }
  return d;
}

// ---------------------------------------------------------------------------
// States

PureState PureState::plus(std::span<const QubitLabel> labels) {
  if (labels.empty()) {
    throw DomainError("plus state needs at least one qubit");
  }
  if (labels.size() > kMaxQubits) {
    throw DomainError("register of " + std::to_string(labels.size()) + " qubits exceeds limit of " +
                      std::to_string(kMaxQubits));
  }
  std::set<QubitLabel> seen(labels.begin(), labels.end());
  if (seen.size() != labels.size()) {
    throw DomainError("duplicate qubit labels");
  }
  const std::size_t dim = std::size_t{1} << labels.size();
  const double amp = std::pow(2.0, -0.5 * static_cast<double>(labels.size()));
  return PureState({labels.begin(), labels.end()}, std::vector<Amplitude>(dim, amp));
}

PureState PureState::from_amplitudes(std::vector<QubitLabel> labels, std::vector<Amplitude> amps) {
  if (labels.size() > kMaxQubits) {
    throw DomainError("register exceeds qubit limit");
  }
  if (amps.size() != (std::size_t{1} << labels.size())) {
    throw DomainError("amplitude vector length does not match 2^labels");
  }
  std::set<QubitLabel> seen(labels.begin(), labels.end());
  if (seen.size() != labels.size()) {
    throw DomainError("duplicate qubit labels");
  }
  const double n2 = squared_norm(amps);
  if (!(std::abs(n2 - 1.0) <= kNormTolerance)) {
    throw DomainError("state is not normalised (|psi|^2 = " + std::to_string(n2) + ")");
  }
  return PureState(std::move(labels), std::move(amps));
}

bool PureState::contains(QubitLabel q) const noexcept {
  return std::find(labels_.begin(), labels_.end(), q) != labels_.end();
}

std::size_t PureState::slot_of(QubitLabel q) const {
  const auto it = std::find(labels_.begin(), labels_.end(), q);
  if (it == labels_.end()) {
    throw DomainError(describe(q) + " is not in the register");
  }
  return static_cast<std::size_t>(it - labels_.begin());
}

double PureState::norm_squared() const { return squared_norm(amps_); }

void PureState::apply_cz(QubitLabel a, QubitLabel b) {
  if (a == b) {
    throw DomainError("CZ needs two distinct qubits");
  }
  const std::size_t mask = (std::size_t{1} << slot_of(a)) | (std::size_t{1} << slot_of(b));
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if ((i & mask) == mask) {
      amps_[i] = -amps_[i];
    }
  }
}

void PureState::apply_gate(QubitLabel q, const SingleQubitGate& u) {
  const std::size_t k = slot_of(q);
  const auto& m = u.matrix();
  const std::size_t bit = std::size_t{1} << k;
  const std::size_t half = amps_.size() / 2;
  for (std::size_t y = 0; y < half; ++y) {
    const std::size_t i0 = insert_zero_bit(y, k);
    const std::size_t i1 = i0 | bit;
    const Amplitude a0 = amps_[i0];
    const Amplitude a1 = amps_[i1];
    amps_[i0] = m[0] * a0 + m[1] * a1;
    amps_[i1] = m[2] * a0 + m[3] * a1;
  }
}

PureState PureState::reordered(std::span<const QubitLabel> order) const {
  if (order.size() != labels_.size()) {
    throw DomainError("label sets differ in size");
  }
  // source slot for each target slot
  std::vector<std::size_t> source(order.size());
  std::set<QubitLabel> seen;
  for (std::size_t t = 0; t < order.size(); ++t) {
    if (!seen.insert(order[t]).second) {
      throw DomainError("duplicate qubit labels");
    }
    source[t] = slot_of(order[t]);
  }
  std::vector<Amplitude> out(amps_.size());
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    std::size_t src = 0;
    for (std::size_t t = 0; t < source.size(); ++t) {
      src |= ((i >> t) & 1U) << source[t];
    }
    out[i] = amps_[src];
  }
  return PureState({order.begin(), order.end()}, std::move(out));
}

PureState plus_state(std::span<const QubitLabel> labels) { return PureState::plus(labels); }

PureState apply_cz(PureState s, QubitLabel a, QubitLabel b) {
  s.apply_cz(a, b);
  return s;
}

PureState apply_gate(PureState s, QubitLabel q, const SingleQubitGate& u) {
  s.apply_gate(q, u);
  return s;
}

// ---------------------------------------------------------------------------
// Sampling and measurement

Rng Rng::for_stream(std::uint64_t root_seed, std::uint64_t stream) {
  // splitmix64 finaliser over (root, stream)
  std::uint64_t z = root_seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return Rng(z);
}

double Rng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double outcome_probability(const PureState& s, QubitLabel q, PauliAxis axis, Outcome m) {
  return squared_norm(contract(s, s.slot_of(q), eigenvector(axis, m)));
}

MeasureResult pauli_measure(const PureState& s, QubitLabel q, PauliAxis axis, OutcomeSource source) {
  const std::size_t k = s.slot_of(q);

  Outcome outcome = Outcome::Plus;
  std::vector<Amplitude> projected;
  if (const Outcome* forced = std::get_if<Outcome>(&source)) {
    outcome = *forced;
    projected = contract(s, k, eigenvector(axis, outcome));
  } else {
    Rng* rng = std::get<Rng*>(source);
    if (rng == nullptr) {
      throw DomainError("null outcome sampler");
    }
    projected = contract(s, k, eigenvector(axis, Outcome::Plus));
    const double p_plus = squared_norm(projected);
    if (!(rng->uniform() < p_plus)) {
      outcome = Outcome::Minus;
      projected = contract(s, k, eigenvector(axis, outcome));
    }
  }

  const double p = squared_norm(projected);
  if (p < kImpossibleProbability) {
    std::ostringstream msg;
    msg << "outcome " << outcome_sign(outcome) << " of " << axis_letter(axis) << "-measurement on "
        << describe(q) << " has probability " << p;
    throw ImpossibleOutcomeError(0, msg.str());
  }
  const double scale = 1.0 / std::sqrt(p);
  for (Amplitude& a : projected) {
    a *= scale;
  }
  std::vector<QubitLabel> labels = s.labels();
  labels.erase(labels.begin() + static_cast<std::ptrdiff_t>(k));
  return {outcome, p, PureState::from_amplitudes(std::move(labels), std::move(projected))};
}

double fidelity(const PureState& s1, const PureState& s2) {
  const std::set<QubitLabel> l1(s1.labels().begin(), s1.labels().end());
  const std::set<QubitLabel> l2(s2.labels().begin(), s2.labels().end());
  if (l1 != l2) {
    throw DomainError("fidelity between registers with different label sets");
  }
  const PureState aligned = s2.reordered(s1.labels());
  Amplitude overlap = 0.0;
  const auto& a = s1.amplitudes();
  const auto& b = aligned.amplitudes();
  for (std::size_t i = 0; i < a.size(); ++i) {
    overlap += std::conj(a[i]) * b[i];
  }
  return std::clamp(std::norm(overlap), 0.0, 1.0);
}

bool equal_up_to_global_phase(const PureState& s1, const PureState& s2, double tol) {
  return 1.0 - fidelity(s1, s2) <= tol;
}

}  // namespace qlan
