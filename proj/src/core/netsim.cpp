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

#include "core/netsim.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <set>
#include <thread>

#include "core/errors.hpp"

namespace qlan {

namespace {

std::string step_prefix(std::size_t j) { return "measurement " + std::to_string(j) + ": "; }

}  // namespace

CorrectionTable standard_corrections() { return correction_gate; }

CorrectionTable tampered_corrections() {
  return [](MsgType m, bool is_b0) {
    switch (m) {
      case MsgType::YPlus:
        return correction_gate(MsgType::YMinus, is_b0);
      case MsgType::YMinus:
        return correction_gate(MsgType::YPlus, is_b0);
      case MsgType::ZMinus:
        return SingleQubitGate::identity();
      default:
        return correction_gate(m, is_b0);
    }
  };
}

void validate(const Scenario& sc) {
  const Graph& g = sc.topology;
  if (g.empty()) {
    throw DomainError("scenario topology is empty");
  }
  if (g.client_vertices().empty()) {
    throw DomainError("scenario needs at least one client vertex");
  }
  if (g.vertex_count() > kMaxQubits) {
    throw DomainError("topology has " + std::to_string(g.vertex_count()) +
                      " vertices; the dense engine supports at most " + std::to_string(kMaxQubits));
  }
  const std::size_t n_o = g.orchestrator_vertices().size();
  if (sc.bases.size() != n_o) {
    throw DomainError("bases length must equal n_o=" + std::to_string(n_o));
  }
  if (sc.forced_outcomes && sc.forced_outcomes->size() != n_o) {
    throw DomainError("forced_outcomes length must equal n_o=" + std::to_string(n_o));
  }
  if (sc.channel_delay_ns < 0) {
    throw DomainError("channel delay must be non-negative");
  }
  for (const auto& [v, d] : sc.link_delay_ns) {
    if (!g.contains(v) || g.role(v) != Role::Client) {
      throw DomainError("link delay override for non-client vertex #" + std::to_string(v.index));
    }
    if (d < 0) {
      throw DomainError("link delay must be non-negative");
    }
  }
  if (!(sc.tolerance > 0.0) || !std::isfinite(sc.tolerance)) {
    throw DomainError("tolerance must be a positive finite number");
  }
}

// ---------------------------------------------------------------------------
// Network and event queue

Network::Network(const Scenario& sc) {
  for (VertexId v : sc.topology.client_vertices()) {
    const NodeId node = static_cast<NodeId>(client_qubits_.size() + 1);
    client_qubits_.push_back(v);
    client_names_.push_back(sc.topology.name(v));
    node_by_vertex_.emplace(v, node);
    const auto it = sc.link_delay_ns.find(v);
    delay_by_client_.push_back(it != sc.link_delay_ns.end() ? it->second : sc.channel_delay_ns);
  }
}

std::optional<NodeId> Network::node_of(VertexId v) const {
  const auto it = node_by_vertex_.find(v);
  if (it == node_by_vertex_.end()) {
    return std::nullopt;
  }
  return it->second;
}

VertexId Network::qubit_of(NodeId client) const {
  if (client == kOrchestratorNode || client > client_qubits_.size()) {
    throw DomainError("node " + std::to_string(client) + " is not a client");
  }
  return client_qubits_[client - 1];
}

SimTime Network::delay(NodeId a, NodeId b) const {
  if ((a == kOrchestratorNode) == (b == kOrchestratorNode)) {
    throw DomainError("no classical link between nodes " + std::to_string(a) + " and " +
                      std::to_string(b));
  }
  const NodeId client = a == kOrchestratorNode ? b : a;
  if (client > client_qubits_.size()) {
    throw DomainError("unknown node " + std::to_string(client));
  }
  return delay_by_client_[client - 1];
}

std::string Network::node_name(NodeId n) const {
  if (n == kOrchestratorNode) {
    return "orchestrator";
  }
  if (n > client_names_.size()) {
    return "node" + std::to_string(n);
  }
  return client_names_[n - 1];
}

ClassicalMessage Network::make_message(NodeId src, NodeId dst, MsgType type, std::size_t index,
                                       SimTime now) const {
  return ClassicalMessage{src, dst, type, index, now, now + delay(src, dst)};
}

void EventQueue::push(SimTime time, std::variant<StepEvent, DeliveryEvent> payload) {
  heap_.push(Event{time, next_seq_++, std::move(payload)});
}

Event EventQueue::pop() {
  Event e = heap_.top();
  heap_.pop();
  return e;
}

// ---------------------------------------------------------------------------
// Protocol handlers

StepOutput orchestrator_step(OrchestratorNode& node, PureState& reg, std::size_t j,
                             const Network& net, SimTime now) {
  if (j != node.cursor || j >= node.qubits.size() || j >= node.bases.size()) {
    throw ProtocolError(step_prefix(j) + "out of order (next is " + std::to_string(node.cursor) + ")");
  }
  const VertexId a = node.qubits[j];
  const BasisEntry& entry = node.bases[j];
  const PauliAxis axis = entry.axis;

  std::optional<VertexId> b0;
  if (axis == PauliAxis::X) {
    if (node.mirror.neighbors(a).empty()) {
      throw ProtocolError(step_prefix(j) + "x-measurement of " + node.mirror.name(a) +
                          " with empty neighbourhood");
    }
    try {
      b0 = choose_b0(node.mirror, a, entry, node.b0_policy);
    } catch (const DomainError& e) {
      throw ProtocolError(step_prefix(j) + e.what());
    }
  }

  Rng rng = Rng::for_stream(node.seed, j);
  OutcomeSource source = &rng;
  if (node.forced_outcomes) {
    source = (*node.forced_outcomes)[j];
  }
  MeasureResult measured = [&] {
    try {
      return pauli_measure(reg, a, axis, source);
    } catch (const ImpossibleOutcomeError& e) {
      throw ImpossibleOutcomeError(j, step_prefix(j) + e.what());
    }
  }();
  reg = std::move(measured.post);

  StepOutput out;
  MeasurementRecord& rec = out.record;
  rec.index = j;
  rec.vertex = a;
  rec.axis = axis;
  rec.outcome = measured.outcome;
  rec.probability = measured.probability;
  rec.b0 = b0;
  rec.time = now;

  const CorrectionTargets targets = correction_targets(node.mirror, a, axis, measured.outcome, b0);
  rec.dest_sample = targets.dest_sample;
  const MsgType type = outcome_message(axis, measured.outcome);

  if (targets.b0_designee) {
    if (auto dst = net.node_of(*targets.b0_designee)) {
      out.outgoing.push_back(net.make_message(node.id, *dst, MsgType::B0Designation, j, now));
    }
  }
  for (VertexId v : targets.dest_sample) {
    if (auto dst = net.node_of(v)) {
      out.outgoing.push_back(net.make_message(node.id, *dst, type, j, now));
    } else {
      const SingleQubitGate gate = node.corrections(type, targets.b0_designee == v);
      reg.apply_gate(v, gate);
      rec.local_corrections.push_back({v, gate.name()});
    }
  }

  node.mirror = apply_transform(node.mirror, a, axis, b0);
  rec.mirror_after = node.mirror;
  node.outcomes.push_back(measured.outcome);
  ++node.cursor;
  return out;
}

std::optional<ClassicalMessage> client_handle(ClientNode& node, PureState& reg,
                                              const ClassicalMessage& msg, bool designated_b0,
                                              const CorrectionTable& corrections,
                                              const Network& net, SimTime now) {
  if (msg.dst != node.id) {
    throw ProtocolError("message for node " + std::to_string(msg.dst) + " delivered to node " +
                        std::to_string(node.id));
  }
  bool is_b0 = false;
  switch (msg.msg_type) {
    case MsgType::Ack:
      throw ProtocolError("client " + net.node_name(node.id) + " received an ACK");
    case MsgType::B0Designation:
      node.b0_flag = true;
      return std::nullopt;
    case MsgType::XPlus:
    case MsgType::XMinus:
      if (designated_b0 && !node.b0_flag) {
        throw ProtocolError(step_prefix(msg.measurement_index) + "client " + net.node_name(node.id) +
                            " got " + std::string(msg_type_name(msg.msg_type)) +
                            " before its B0_DESIGNATION");
      }
      is_b0 = node.b0_flag;
      node.b0_flag = false;
      break;
    default:
      break;
  }
  const SingleQubitGate gate = corrections(msg.msg_type, is_b0);
  reg.apply_gate(node.qubit, gate);
  node.log.push_back({msg.measurement_index, msg.msg_type, gate.name(), now});
  return net.make_message(node.id, kOrchestratorNode, MsgType::Ack, msg.measurement_index, now);
}

// ---------------------------------------------------------------------------
// Runs

SimReport run_scenario(const Scenario& sc) {
  validate(sc);
  const auto started = std::chrono::steady_clock::now();

  const Network net(sc);
  PureState reg = build_graph_state(sc.topology);

  OrchestratorNode orch;
  orch.qubits = sc.topology.orchestrator_vertices();
  orch.mirror = sc.topology;
  orch.bases = sc.bases;
  orch.forced_outcomes = sc.forced_outcomes;
  orch.seed = sc.seed;
  orch.corrections = sc.tamper_corrections ? tampered_corrections() : standard_corrections();

  std::vector<ClientNode> clients;
  for (NodeId id = 1; id <= net.client_count(); ++id) {
    clients.push_back(ClientNode{id, net.qubit_of(id), false, {}});
  }

  SimReport report;
  report.seed = sc.seed;
  report.initial_graph = sc.topology;

  // (measurement index, client node) pairs designated as b0
  std::set<std::pair<std::size_t, NodeId>> designated;
  std::size_t corrections_sent = 0;
  std::size_t acks_received = 0;

  EventQueue queue;
  if (!orch.bases.empty()) {
    queue.push(0, StepEvent{0});
  }
  auto send = [&](const ClassicalMessage& m) {
    report.messages.push_back(m);
    queue.push(m.deliver_time, DeliveryEvent{m});
  };

  while (!queue.empty()) {
    const Event ev = queue.pop();
    const SimTime now = ev.time;
    if (const auto* step = std::get_if<StepEvent>(&ev.payload)) {
      StepOutput out = orchestrator_step(orch, reg, step->measurement_index, net, now);
      for (const ClassicalMessage& m : out.outgoing) {
        if (m.msg_type == MsgType::B0Designation) {
          designated.emplace(m.measurement_index, m.dst);
        } else {
          ++corrections_sent;
        }
        send(m);
      }
      report.measurements.push_back(std::move(out.record));
      if (orch.cursor < orch.qubits.size()) {
        queue.push(now, StepEvent{orch.cursor});
      }
      continue;
    }
    const ClassicalMessage& msg = std::get<DeliveryEvent>(ev.payload).message;
    if (msg.dst == kOrchestratorNode) {
      if (msg.msg_type != MsgType::Ack) {
        throw ProtocolError("orchestrator received " + std::string(msg_type_name(msg.msg_type)));
      }
      ++acks_received;
      MeasurementRecord& rec = report.measurements.at(msg.measurement_index);
      const SimTime sent_at = rec.time;
      rec.ack_round_trip_ns.push_back(now - sent_at);
      continue;
    }
    ClientNode& client = clients.at(msg.dst - 1);
    const bool is_designee = designated.contains({msg.measurement_index, msg.dst});
    if (auto ack = client_handle(client, reg, msg, is_designee, orch.corrections, net, now)) {
      send(*ack);
    }
  }

  if (acks_received != corrections_sent) {
    throw ProtocolError("received " + std::to_string(acks_received) + " ACKs for " +
                        std::to_string(corrections_sent) + " corrections");
  }

  report.predicted_graph = predicted_graph(sc.topology, sc.bases, orch.outcomes);
  report.final_mirror = orch.mirror;
  report.mirror_consistent = orch.mirror == report.predicted_graph;
  report.fidelity = fidelity(reg, build_graph_state(report.predicted_graph));
  report.verdict = report.mirror_consistent && 1.0 - report.fidelity <= sc.tolerance ? Verdict::Pass
                                                                                     : Verdict::Fail;
  report.clients = std::move(clients);
  report.duration_ns = std::chrono::duration_cast<std::chrono::nanoseconds>(
                           std::chrono::steady_clock::now() - started)
                           .count();
  return report;
}

std::uint64_t sweep_run_count(const Scenario& sc, bool all_outcomes, bool all_bases) {
  const std::size_t n_o = sc.topology.orchestrator_vertices().size();
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < n_o; ++i) {
    if (all_bases) {
      count *= 3;
    }
    if (all_outcomes) {
      count *= 2;
    }
    if (count > (std::uint64_t{1} << 40)) {
      break;
    }
  }
  return count;
}

SweepResult sweep(const Scenario& sc, const SweepOptions& options) {
  validate(sc);
  const std::uint64_t required = sweep_run_count(sc, options.all_outcomes, options.all_bases);
  if (required > options.budget) {
    throw BudgetError(required, options.budget);
  }
  const std::size_t n_o = sc.bases.size();

  std::vector<BasesArray> bases_list;
  if (options.all_bases) {
    constexpr PauliAxis kAxes[] = {PauliAxis::X, PauliAxis::Y, PauliAxis::Z};
    std::size_t combos = 1;
    for (std::size_t i = 0; i < n_o; ++i) {
      combos *= 3;
    }
    for (std::size_t c = 0; c < combos; ++c) {
      BasesArray b = sc.bases;
      std::size_t digits = c;
      for (std::size_t i = n_o; i-- > 0;) {
        b[i].axis = kAxes[digits % 3];
        digits /= 3;
      }
      bases_list.push_back(std::move(b));
    }
  } else {
    bases_list.push_back(sc.bases);
  }

  std::vector<std::optional<std::vector<Outcome>>> outcome_list;
  if (options.all_outcomes) {
    for (std::size_t c = 0; c < (std::size_t{1} << n_o); ++c) {
      std::vector<Outcome> v(n_o);
      for (std::size_t i = 0; i < n_o; ++i) {
        v[i] = ((c >> (n_o - 1 - i)) & 1U) != 0 ? Outcome::Minus : Outcome::Plus;
      }
      outcome_list.emplace_back(std::move(v));
    }
  } else {
    outcome_list.push_back(sc.forced_outcomes);
  }

  SweepResult result;
  for (const BasesArray& b : bases_list) {
    for (const auto& o : outcome_list) {
      result.runs.push_back(SweepRun{b, o, std::nullopt, {}});
    }
  }

  auto execute = [&sc](SweepRun& run) {
    Scenario variant = sc;
    variant.bases = run.bases;
    variant.forced_outcomes = run.forced_outcomes;
    try {
      run.report = run_scenario(variant);
    } catch (const std::exception& e) {
      run.error = e.what();
    }
  };

  unsigned threads = options.threads != 0 ? options.threads : std::thread::hardware_concurrency();
  threads = std::clamp<unsigned>(threads, 1U, static_cast<unsigned>(result.runs.size()));
  if (threads <= 1) {
    for (SweepRun& run : result.runs) {
      execute(run);
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < threads; ++t) {
      workers.emplace_back([&] {
        for (std::size_t i = next++; i < result.runs.size(); i = next++) {
          execute(result.runs[i]);
        }
      });
    }
  }

  result.passed = static_cast<std::size_t>(
      std::count_if(result.runs.begin(), result.runs.end(), [](const SweepRun& r) { return r.passed(); }));
  return result;
}

}  // namespace qlan
