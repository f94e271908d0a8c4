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

// Discrete-event simulation of a QLAN: one orchestrator running the
// measurement protocol, one client per client vertex running the correction
// protocol, and a star of classical links between them.
//
// The shared register is a single PureState owned by the run; a node
// "applying a gate" means the kernel applies it on that node's qubit slot.

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <queue>
#include <string>
#include <variant>
#include <vector>

#include "core/engine.hpp"
#include "core/graph.hpp"
#include "core/resources.hpp"

namespace qlan {

using NodeId = std::uint32_t;
using SimTime = std::int64_t;  // nanoseconds

inline constexpr NodeId kOrchestratorNode = 0;
inline constexpr SimTime kDefaultChannelDelayNs = 1000;
inline constexpr double kDefaultTolerance = 1e-9;

/// Maps a message type and the receiver's b0 flag to the gate it applies.
using CorrectionTable = std::function<SingleQubitGate(MsgType, bool)>;

/// The table clients use in a normal run (correction_gate).
CorrectionTable standard_corrections();
/// Deliberately wrong table (Y signs swapped, Z_MINUS dropped); a negative
/// control for the verification step.
CorrectionTable tampered_corrections();

struct Scenario {
  Graph topology;
  BasesArray bases;
  std::optional<std::vector<Outcome>> forced_outcomes;
  std::uint64_t seed = 0;
  SimTime channel_delay_ns = kDefaultChannelDelayNs;
  std::map<VertexId, SimTime> link_delay_ns;  // per-client overrides
  double tolerance = kDefaultTolerance;
  bool tamper_corrections = false;
};

/// Throws DomainError on a malformed scenario (partition, lengths, delays).
void validate(const Scenario& sc);

struct ClassicalMessage {
  NodeId src = 0;
  NodeId dst = 0;
  MsgType msg_type = MsgType::Ack;
  std::size_t measurement_index = 0;
  SimTime send_time = 0;
  SimTime deliver_time = 0;

  bool operator==(const ClassicalMessage&) const = default;
};

/// Star of constant-delay classical links between the orchestrator and the
/// client nodes. Client node i (1-based) holds the i-th client vertex.
class Network {
 public:
  explicit Network(const Scenario& sc);

  std::size_t client_count() const noexcept { return client_qubits_.size(); }
  std::optional<NodeId> node_of(VertexId v) const;
  VertexId qubit_of(NodeId client) const;
  SimTime delay(NodeId a, NodeId b) const;
  std::string node_name(NodeId n) const;

  ClassicalMessage make_message(NodeId src, NodeId dst, MsgType type, std::size_t index,
                                SimTime now) const;

 private:
  std::vector<VertexId> client_qubits_;
  std::vector<std::string> client_names_;
  std::map<VertexId, NodeId> node_by_vertex_;
  std::vector<SimTime> delay_by_client_;
};

struct StepEvent {
  std::size_t measurement_index;
};

struct DeliveryEvent {
  ClassicalMessage message;
};

struct Event {
  SimTime time = 0;
  std::uint64_t seq = 0;
  std::variant<StepEvent, DeliveryEvent> payload;
};

/// Time-ordered queue, ties broken by insertion order.
class EventQueue {
 public:
  void push(SimTime time, std::variant<StepEvent, DeliveryEvent> payload);
  Event pop();
  bool empty() const noexcept { return heap_.empty(); }
  std::size_t size() const noexcept { return heap_.size(); }

 private:
  struct Later {
    bool operator()(const Event& a, const Event& b) const {
      return a.time != b.time ? a.time > b.time : a.seq > b.seq;
    }
  };
  std::priority_queue<Event, std::vector<Event>, Later> heap_;
  std::uint64_t next_seq_ = 0;
};

struct LocalCorrection {
  VertexId qubit;
  std::string gate;
};

struct MeasurementRecord {
  std::size_t index = 0;
  VertexId vertex;
  PauliAxis axis = PauliAxis::Z;
  Outcome outcome = Outcome::Plus;
  double probability = 0.0;
  std::optional<VertexId> b0;
  VertexSet dest_sample;
  std::vector<LocalCorrection> local_corrections;  // orchestrator-held destinations
  SimTime time = 0;
  Graph mirror_after;
  std::vector<SimTime> ack_round_trip_ns;
};

struct OrchestratorNode {
  NodeId id = kOrchestratorNode;
  std::vector<VertexId> qubits;  // measurement order
  Graph mirror;
  BasesArray bases;
  std::optional<std::vector<Outcome>> forced_outcomes;
  std::uint64_t seed = 0;
  B0Policy b0_policy = lowest_index_neighbor;
  CorrectionTable corrections = standard_corrections();
  std::vector<Outcome> outcomes;
  std::size_t cursor = 0;  // next measurement index
};

struct AppliedCorrection {
  std::size_t measurement_index;
  MsgType msg_type;
  std::string gate;
  SimTime time;
};

struct ClientNode {
  NodeId id = 0;
  VertexId qubit;
  bool b0_flag = false;
  std::vector<AppliedCorrection> log;
};

struct StepOutput {
  MeasurementRecord record;
  std::vector<ClassicalMessage> outgoing;  // in send order
};

/// Performs measurement j: measures, picks b0, sends B0_DESIGNATION and the
/// outcome messages, applies orchestrator-held corrections and updates the
/// mirror. Throws ProtocolError / ImpossibleOutcomeError.
StepOutput orchestrator_step(OrchestratorNode& node, PureState& reg, std::size_t j,
                             const Network& net, SimTime now);

/// Handles one delivered message at a client. Returns the ACK to send, if any.
/// `designated_b0` is true when the orchestrator designated this client as b0
/// for msg.measurement_index; an X message then requires the flag to be set.
std::optional<ClassicalMessage> client_handle(ClientNode& node, PureState& reg,
                                              const ClassicalMessage& msg, bool designated_b0,
                                              const CorrectionTable& corrections,
                                              const Network& net, SimTime now);

enum class Verdict : std::uint8_t { Pass, Fail };

struct SimReport {
  std::uint64_t seed = 0;
  Graph initial_graph;
  Graph predicted_graph;
  Graph final_mirror;
  std::vector<MeasurementRecord> measurements;
  std::vector<ClassicalMessage> messages;  // send order, ACKs included
  std::vector<ClientNode> clients;
  double fidelity = 0.0;
  bool mirror_consistent = false;
  Verdict verdict = Verdict::Fail;
  std::int64_t duration_ns = 0;  // wall clock
};

SimReport run_scenario(const Scenario& sc);

struct SweepOptions {
  bool all_outcomes = false;
  bool all_bases = false;
  std::uint64_t budget = 100000;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct SweepRun {
  BasesArray bases;
  std::optional<std::vector<Outcome>> forced_outcomes;
  std::optional<SimReport> report;
  std::string error;  // set when the run aborted
  bool passed() const { return report && report->verdict == Verdict::Pass; }
};

struct SweepResult {
  std::vector<SweepRun> runs;
  std::size_t passed = 0;
  std::size_t total() const noexcept { return runs.size(); }
};

std::uint64_t sweep_run_count(const Scenario& sc, bool all_outcomes, bool all_bases);

/// Runs the Cartesian product of requested bases arrays and forced-outcome
/// vectors. Throws BudgetError before running anything if it would not fit.
SweepResult sweep(const Scenario& sc, const SweepOptions& options);

}  // namespace qlan
