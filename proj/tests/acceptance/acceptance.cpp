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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "core/netsim.hpp"
#include "core/report.hpp"
#include "core/resources.hpp"
#include "core/scenario.hpp"
#include "support/oracle.hpp"
#include "support/test_util.hpp"

using namespace qlan;
using qlan::testing::fidelity_to;
using qlan::testing::from_adj;
using qlan::testing::to_adj;

namespace {

constexpr double kTolerance = 1e-9;
constexpr PauliAxis kAxes[] = {PauliAxis::X, PauliAxis::Y, PauliAxis::Z};
constexpr Outcome kOutcomes[] = {Outcome::Plus, Outcome::Minus};

using NamedEdges = std::set<std::pair<std::string, std::string>>;

struct CheckResult {
  bool ok = true;
  std::string detail;
};

Scenario chain_scenario(int clients, PauliAxis axis) {
  Scenario sc;
  sc.topology = linear_chain(clients);
  sc.bases.assign(sc.topology.orchestrator_vertices().size(), {axis, {}});
  sc.tolerance = kTolerance;
  return sc;
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

/// The oracle's graph after the same sequence of measurements, with b0
/// chosen as the lowest-index neighbour unless overridden.
oracle::AdjGraph oracle_prediction(const Graph& g0, const BasesArray& bases) {
  oracle::AdjGraph g = to_adj(g0);
  const auto order = g0.orchestrator_vertices();
  for (std::size_t j = 0; j < bases.size(); ++j) {
    const std::uint32_t a = order[j].index;
    switch (bases[j].axis) {
      case PauliAxis::Z:
        g = oracle::measure_z(g, a);
        break;
      case PauliAxis::Y:
        g = oracle::measure_y(g, a);
        break;
      case PauliAxis::X: {
        const auto hood = g.hood(a);
        const std::uint32_t b0 = bases[j].b0 ? bases[j].b0->index : *hood.begin();
        g = oracle::measure_x(g, a, b0);
        break;
      }
    }
  }
  return g;
}

std::string accounting_violation(const SimReport& r) {
  std::map<std::size_t, std::size_t> outcome_msgs, b0_msgs;
  std::size_t acks = 0, corrections = 0;
  for (const auto& m : r.messages) {
    if (m.msg_type == MsgType::Ack) {
      ++acks;
    } else if (m.msg_type == MsgType::B0Designation) {
      ++b0_msgs[m.measurement_index];
    } else {
      ++outcome_msgs[m.measurement_index];
      ++corrections;
    }
  }
  if (acks != corrections) return "ACKs " + std::to_string(acks) + " != corrections " + std::to_string(corrections);
  for (const auto& rec : r.measurements) {
    std::size_t client_dest = 0;
    for (VertexId v : rec.dest_sample) client_dest += r.initial_graph.role(v) == Role::Client;
    const bool want_b0 = rec.axis == PauliAxis::X && r.initial_graph.role(*rec.b0) == Role::Client;
    if (outcome_msgs[rec.index] != client_dest || b0_msgs[rec.index] != (want_b0 ? 1u : 0u)) {
      return "measurement " + std::to_string(rec.index) + " message count mismatch";
    }
  }
  return {};
}

SweepResult criterion1_runs() {
  static const SweepResult runs = sweep(chain_scenario(4, PauliAxis::Z), {true, true, 100000, 0});
  return runs;
}

CheckResult criterion1() {
  const SweepResult res = criterion1_runs();
  double worst = 0.0;
  std::size_t good = 0;
  for (const auto& run : res.runs) {
    if (!run.report) continue;
    worst = std::max(worst, 1.0 - run.report->fidelity);
    const bool graph_ok = qlan::testing::edge_ids(run.report->predicted_graph) ==
                          oracle_prediction(run.report->initial_graph, run.bases).edge_set();
    good += run.passed() && 1.0 - run.report->fidelity <= kTolerance && graph_ok;
  }
  return {res.total() == 216 && good == 216,
          std::to_string(good) + "/" + std::to_string(res.total()) + " runs, max 1-F " + fmt("%.3e", worst)};
}

CheckResult criterion2() {
  std::size_t cases = 0, failures = 0, graphs = 0;
  for (std::size_t n = 1; n <= 5; ++n) {
    const std::uint64_t pairs = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
      const auto adj = oracle::graph_from_mask(n, mask);
      if (!oracle::connected(adj)) continue;
      ++graphs;
      const Graph g = from_adj(adj);
      for (VertexId a : g.vertices()) {
        for (PauliAxis axis : kAxes) {
          std::vector<std::optional<VertexId>> supports;
          if (axis == PauliAxis::X) {
            for (VertexId b : g.neighbors(a)) supports.emplace_back(b);
          } else {
            supports.emplace_back(std::nullopt);
          }
          for (const auto& b0 : supports) {
            oracle::AdjGraph expected_graph = axis == PauliAxis::Z   ? oracle::measure_z(adj, a.index)
                                              : axis == PauliAxis::Y ? oracle::measure_y(adj, a.index)
                                                                     : oracle::measure_x(adj, a.index, b0->index);
            if (expected_graph.size() == 0) {
              ++cases;  // single vertex measured away: nothing left to compare
              continue;
            }
            const auto expected = oracle::graph_state(expected_graph);
            for (Outcome m : kOutcomes) {
              ++cases;
              try {
                MeasureResult r = pauli_measure(build_graph_state(g), a, axis, m);
                const CorrectionTargets t = correction_targets(g, a, axis, m, b0);
                const MsgType type = outcome_message(axis, m);
                for (VertexId v : t.dest_sample) r.post.apply_gate(v, correction_gate(type, t.b0_designee == v));
                const bool graph_ok =
                    qlan::testing::edge_ids(apply_transform(g, a, axis, b0)) == expected_graph.edge_set();
                if (!graph_ok || 1.0 - fidelity_to(r.post, expected) > kTolerance) ++failures;
              } catch (const std::exception&) {
                ++failures;
              }
            }
          }
        }
      }
    }
  }
  return {failures == 0, std::to_string(graphs) + " connected graphs, " + std::to_string(cases) + " cases, " +
                             std::to_string(failures) + " failures"};
}

CheckResult criterion3() {
  const NamedEdges path{{"c1", "c2"}, {"c2", "c3"}, {"c3", "c4"}};
  bool ok = true;
  std::string detail;
  for (PauliAxis axis : {PauliAxis::Y, PauliAxis::Z}) {
    const SimReport r = run_scenario(chain_scenario(4, axis));
    const auto dot = qlan::testing::read_dot(to_dot(r.predicted_graph));
    const NamedEdges expected = axis == PauliAxis::Y ? path : NamedEdges{};
    const bool this_ok = r.verdict == qlan::Verdict::Pass && dot.edges == expected &&
                         dot.edges == qlan::testing::named_edges(r.predicted_graph) &&
                         dot.shape_by_node.size() == 4;
    ok = ok && this_ok;
    detail += std::string(detail.empty() ? "" : ", ") + (axis == PauliAxis::Y ? "[Y,Y,Y] " : "[Z,Z,Z] ") +
              std::to_string(dot.edges.size()) + " edges " + (this_ok ? "ok" : "MISMATCH");
  }
  return {ok, detail};
}

CheckResult criterion4() {
  // b0 for o_j is c_{j+1}, which o_{j+1} also touches on the chain.
  Scenario sc = chain_scenario(4, PauliAxis::X);
  sc.bases[0].b0 = VertexId{2};
  sc.bases[1].b0 = VertexId{4};
  const SweepResult res = sweep(sc, {true, false, 100000, 1});
  std::size_t checked = 0;
  bool ok = res.passed == res.total();
  for (const auto& run : res.runs) {
    if (!run.report) continue;
    const auto& ms = run.report->measurements;
    Graph before = run.report->initial_graph;
    for (std::size_t j = 0; j + 1 < ms.size(); ++j) {
      const VertexId oj = ms[j].vertex, next = ms[j + 1].vertex;
      const VertexSet& n_j = before.neighbors(oj);
      const VertexSet& n_next = before.neighbors(next);
      if (ms[j].b0 && n_next.contains(*ms[j].b0)) {
        VertexSet sym;
        std::set_symmetric_difference(n_j.begin(), n_j.end(), n_next.begin(), n_next.end(),
                                      std::inserter(sym, sym.begin()));
        ok = ok && ms[j].mirror_after.neighbors(next) == sym;
        ++checked;
      }
      before = ms[j].mirror_after;
    }
  }
  ok = ok && checked > 0;
  return {ok, std::to_string(res.passed) + "/" + std::to_string(res.total()) + " branches pass, " +
                  std::to_string(checked) + " rolling updates match"};
}

CheckResult criterion5() {
  bool ok = true;
  std::string detail;
  for (PauliAxis axis : kAxes) {
    Scenario sc = chain_scenario(2, axis);
    int plus = 0;
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
      sc.seed = seed;
      plus += run_scenario(sc).measurements.at(0).outcome == Outcome::Plus;
    }
    const double p = plus / 1000.0;
    ok = ok && p >= 0.45 && p <= 0.55;
    detail += std::string(detail.empty() ? "" : ", ") + axis_letter(axis) + " p(+)=" + fmt("%.3f", p);
  }
  return {ok, detail};
}

CheckResult criterion6() {
  const SweepResult res = criterion1_runs();
  std::size_t good = 0;
  std::string first;
  for (const auto& run : res.runs) {
    if (!run.report) continue;
    const std::string why = accounting_violation(*run.report);
    if (why.empty()) {
      ++good;
    } else if (first.empty()) {
      first = why;
    }
  }
  return {good == 216, std::to_string(good) + "/216 runs" + (first.empty() ? "" : "; " + first)};
}

CheckResult criterion7() {
  using clock = std::chrono::steady_clock;
  Scenario sc = chain_scenario(4, PauliAxis::Y);
  auto t0 = clock::now();
  const SimReport single = run_scenario(sc);
  const double single_s = std::chrono::duration<double>(clock::now() - t0).count();

  t0 = clock::now();
  const SweepResult six = sweep(chain_scenario(6, PauliAxis::Z), {true, true, 100000, 0});
  const double sweep_s = std::chrono::duration<double>(clock::now() - t0).count();
  const bool ok = single.verdict == qlan::Verdict::Pass && single_s < 1.0 && six.total() == 7776 &&
                  six.passed == 7776 && sweep_s < 600.0;
  return {ok, "single run " + fmt("%.4f", single_s) + " s, 6-client sweep " + std::to_string(six.passed) + "/" +
                  std::to_string(six.total()) + " in " + fmt("%.2f", sweep_s) + " s"};
}

std::string strip_duration(std::string text) {
  const auto pos = text.find("\"duration_ns\"");
  if (pos == std::string::npos) return text;
  return text.erase(pos, text.find('\n', pos) - pos);
}

CheckResult criterion8() {
  std::size_t compared = 0, identical = 0;
  for (PauliAxis axis : kAxes) {
    for (std::uint64_t seed : {0ULL, 1ULL, 42ULL, 0xDEADBEEFULL}) {
      Scenario sc = chain_scenario(4, axis);
      sc.seed = seed;
      const std::string a = strip_duration(report_to_json(run_scenario(sc), sc));
      const std::string b = strip_duration(report_to_json(run_scenario(sc), sc));
      ++compared;
      identical += a == b;
    }
  }
  Scenario mixed = parse_scenario(R"({"clients":5,"bases":["x","y","z","x"],"seed":99,
      "link_delays_ns":{"c2":17,"c4":5000}})");
  const std::string a = strip_duration(report_to_json(run_scenario(mixed), mixed));
  const std::string b = strip_duration(report_to_json(run_scenario(mixed), mixed));
  ++compared;
  identical += a == b;
  return {identical == compared, std::to_string(identical) + "/" + std::to_string(compared) + " report pairs identical"};
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<CheckResult()>> criteria[] = {
      {"exhaustive branch verification (4-client chain, 216 runs)", criterion1},
      {"single-measurement oracle equivalence (connected graphs, <= 5 vertices)", criterion2},
      {"4-client chain [Y,Y,Y] path and [Z,Z,Z] isolated clients", criterion3},
      {"rolling update on a chain with shared b0", criterion4},
      {"outcome statistics (1000 seeded runs per axis)", criterion5},
      {"message accounting on every criterion-1 run", criterion6},
      {"timing (single run < 1 s, 6-client sweep < 10 min)", criterion7},
      {"determinism modulo duration", criterion8},
  };
  int failed = 0;
  int index = 1;
  for (const auto& [title, check] : criteria) {
    CheckResult v;
    try {
      v = check();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    failed += !v.ok;
    std::printf("%s criterion %d: %s -- %s\n", v.ok ? "PASS" : "FAIL", index++, title, v.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
