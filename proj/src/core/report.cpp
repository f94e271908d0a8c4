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

#include "core/report.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "core/scenario.hpp"

namespace qlan {

namespace {

using nlohmann::json;

std::string format_fidelity(double f) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12f", f);
  return buf;
}

json graph_json(const Graph& g) {
  json verts = json::array();
  for (VertexId v : g.vertices()) {
    verts.push_back({{"id", v.index},
                     {"name", g.name(v)},
                     {"role", g.role(v) == Role::Orchestrator ? "orchestrator" : "client"}});
  }
  json edges = json::array();
  for (const auto& [a, b] : g.edges()) {
    edges.push_back({g.name(a), g.name(b)});
  }
  return {{"vertices", verts}, {"edges", edges}};
}

json names(const Graph& g, const VertexSet& set) {
  json out = json::array();
  for (VertexId v : set) {
    out.push_back(g.name(v));
  }
  return out;
}

std::string bases_text(const BasesArray& bases) {
  std::string s;
  for (const BasisEntry& e : bases) {
    s += axis_letter(e.axis);
  }
  return s;
}

}  // namespace

std::string_view verdict_name(Verdict v) { return v == Verdict::Pass ? "PASS" : "FAIL"; }

std::string report_to_json(const SimReport& report, const Scenario& sc) {
  const Graph& g0 = report.initial_graph;
  const Network net(sc);

  json measurements = json::array();
  for (const MeasurementRecord& m : report.measurements) {
    json local = json::array();
    for (const LocalCorrection& c : m.local_corrections) {
      local.push_back({{"qubit", g0.name(c.qubit)}, {"gate", c.gate}});
    }
    measurements.push_back({
        {"index", m.index},
        {"vertex", g0.name(m.vertex)},
        {"axis", std::string(1, axis_letter(m.axis))},
        {"outcome", std::string(1, outcome_sign(m.outcome))},
        {"probability", m.probability},
        {"b0", m.b0 ? json(g0.name(*m.b0)) : json(nullptr)},
        {"dest_sample", names(g0, m.dest_sample)},
        {"local_corrections", local},
        {"time_ns", m.time},
        {"ack_round_trip_ns", m.ack_round_trip_ns},
    });
  }

  json messages = json::array();
  for (const ClassicalMessage& msg : report.messages) {
    messages.push_back({
        {"src", net.node_name(msg.src)},
        {"dst", net.node_name(msg.dst)},
        {"type", std::string(msg_type_name(msg.msg_type))},
        {"measurement_index", msg.measurement_index},
        {"send_time_ns", msg.send_time},
        {"deliver_time_ns", msg.deliver_time},
    });
  }

  json corrections = json::object();
  for (const ClientNode& c : report.clients) {
    json log = json::array();
    for (const AppliedCorrection& a : c.log) {
      log.push_back({{"measurement_index", a.measurement_index},
                     {"type", std::string(msg_type_name(a.msg_type))},
                     {"gate", a.gate},
                     {"time_ns", a.time}});
    }
    corrections[net.node_name(c.id)] = log;
  }

  json doc{
      {"scenario_hash", scenario_hash(sc)},
      {"seed", report.seed},
      {"tolerance", sc.tolerance},
      {"measurements", measurements},
      {"messages", messages},
      {"corrections", corrections},
      {"initial_graph", graph_json(report.initial_graph)},
      {"predicted_graph", graph_json(report.predicted_graph)},
      {"mirror_consistent", report.mirror_consistent},
      {"fidelity", report.fidelity},
      {"fidelity_text", format_fidelity(report.fidelity)},
      {"verdict", std::string(verdict_name(report.verdict))},
      {"duration_ns", report.duration_ns},
  };
  return doc.dump(2) + "\n";
}

std::string sweep_to_json(const SweepResult& result, const Scenario& sc) {
  json runs = json::array();
  for (const SweepRun& run : result.runs) {
    json entry{{"bases", bases_text(run.bases)}};
    if (run.forced_outcomes) {
      std::string signs;
      for (Outcome m : *run.forced_outcomes) {
        signs += outcome_sign(m);
      }
      entry["forced_outcomes"] = signs;
    } else {
      entry["forced_outcomes"] = nullptr;
    }
    if (run.report) {
      entry["verdict"] = std::string(verdict_name(run.report->verdict));
      entry["fidelity"] = run.report->fidelity;
      entry["predicted_graph"] = graph_json(run.report->predicted_graph);
      std::string outcomes;
      for (const MeasurementRecord& m : run.report->measurements) {
        outcomes += outcome_sign(m.outcome);
      }
      entry["outcomes"] = outcomes;
    } else {
      entry["verdict"] = "ERROR";
      entry["error"] = run.error;
    }
    runs.push_back(std::move(entry));
  }
  json doc{
      {"scenario_hash", scenario_hash(sc)},
      {"summary", {{"passed", result.passed}, {"total", result.total()}}},
      {"runs", runs},
  };
  return doc.dump(2) + "\n";
}

std::string report_summary(const SimReport& report) {
  return std::string(verdict_name(report.verdict)) + " fidelity=" + format_fidelity(report.fidelity) +
         " measurements=" + std::to_string(report.measurements.size()) +
         " messages=" + std::to_string(report.messages.size()) +
         " final_edges=" + std::to_string(report.predicted_graph.edge_count());
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    }
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) {
      throw std::runtime_error("write to " + tmp.string() + " failed");
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw std::runtime_error("cannot rename " + tmp.string() + " to " + path.string() + ": " +
                             ec.message());
  }
}

}  // namespace qlan
