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

#include "core/scenario.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <limits>
#include <map>
#include <set>

#include <json.hpp>

#include "core/errors.hpp"

namespace qlan {

namespace {

using nlohmann::json;

const std::set<std::string> kTopKeys{"clients",    "topology",        "bases",
                                     "forced_outcomes", "b0_overrides", "seed",
                                     "channel_delay_ns", "link_delays_ns", "tolerance"};
const std::set<std::string> kTopologyKeys{"vertices", "edges", "orchestrator_vertices",
                                          "client_vertices"};

void reject_unknown(const json& obj, const std::set<std::string>& known, const std::string& prefix) {
  for (const auto& [key, _] : obj.items()) {
    if (!known.contains(key)) {
      throw ParseError(prefix + key, "unknown field");
    }
  }
}

std::int64_t get_integer(const json& v, const std::string& field, std::int64_t lo, std::int64_t hi) {
  if (!v.is_number_integer()) {
    throw ParseError(field, "expected an integer");
  }
  if (v.is_number_unsigned() && v.get<std::uint64_t>() > static_cast<std::uint64_t>(hi)) {
    throw ParseError(field, "out of range");
  }
  const std::int64_t x = v.get<std::int64_t>();
  if (x < lo || x > hi) {
    throw ParseError(field, "out of range [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  return x;
}

PauliAxis parse_axis(const json& v, const std::string& field) {
  if (!v.is_string()) {
    throw ParseError(field, "expected one of \"x\", \"y\", \"z\"");
  }
  const std::string s = v.get<std::string>();
  if (s.size() == 1) {
    switch (std::tolower(static_cast<unsigned char>(s[0]))) {
      case 'x':
        return PauliAxis::X;
      case 'y':
        return PauliAxis::Y;
      case 'z':
        return PauliAxis::Z;
      default:
        break;
    }
  }
  throw ParseError(field, "expected one of \"x\", \"y\", \"z\", got \"" + s + "\"");
}

std::vector<VertexId> parse_vertex_list(const json& v, const std::string& field, std::size_t n) {
  if (!v.is_array()) {
    throw ParseError(field, "expected an array of vertex ids");
  }
  std::vector<VertexId> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto id = get_integer(v[i], field + "[" + std::to_string(i) + "]", 0,
                                static_cast<std::int64_t>(n) - 1);
    out.push_back(VertexId{static_cast<std::uint32_t>(id)});
  }
  return out;
}

Graph parse_topology(const json& t) {
  if (!t.is_object()) {
    throw ParseError("topology", "expected an object");
  }
  reject_unknown(t, kTopologyKeys, "topology.");
  for (const char* key : {"vertices", "edges", "orchestrator_vertices"}) {
    if (!t.contains(key)) {
      throw ParseError(std::string("topology.") + key, "missing");
    }
  }
  const json& verts = t["vertices"];
  if (!verts.is_array() || verts.empty()) {
    throw ParseError("topology.vertices", "expected a non-empty array");
  }
  const std::size_t n = verts.size();
  if (n > kMaxQubits) {
    throw ParseError("topology.vertices",
                     "at most " + std::to_string(kMaxQubits) + " vertices are supported");
  }
  std::vector<VertexId> ids = parse_vertex_list(verts, "topology.vertices", n);
  std::set<VertexId> unique(ids.begin(), ids.end());
  if (unique.size() != n) {
    throw ParseError("topology.vertices", "must list each id 0..n-1 exactly once");
  }

  const std::vector<VertexId> orch = parse_vertex_list(t["orchestrator_vertices"],
                                                       "topology.orchestrator_vertices", n);
  const std::set<VertexId> orch_set(orch.begin(), orch.end());
  if (orch_set.size() != orch.size()) {
    throw ParseError("topology.orchestrator_vertices", "duplicate vertex");
  }
  if (t.contains("client_vertices")) {
    const std::vector<VertexId> cl = parse_vertex_list(t["client_vertices"],
                                                       "topology.client_vertices", n);
    std::set<VertexId> cl_set(cl.begin(), cl.end());
    for (VertexId v : cl_set) {
      if (orch_set.contains(v)) {
        throw ParseError("topology",
                         "partition violation: V_o and V_c must be disjoint (vertex " +
                             std::to_string(v.index) + " is in both)");
      }
    }
    if (cl_set.size() + orch_set.size() != n || cl_set.size() != cl.size()) {
      throw ParseError("topology", "partition violation: V_o and V_c must cover every vertex once");
    }
  }

  Graph g;
  for (std::uint32_t i = 0; i < n; ++i) {
    g.add_vertex(orch_set.contains(VertexId{i}) ? Role::Orchestrator : Role::Client);
  }
  const json& edges = t["edges"];
  if (!edges.is_array()) {
    throw ParseError("topology.edges", "expected an array of [a, b] pairs");
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string field = "topology.edges[" + std::to_string(i) + "]";
    if (!edges[i].is_array() || edges[i].size() != 2) {
      throw ParseError(field, "expected a pair [a, b]");
    }
    const std::vector<VertexId> ab = parse_vertex_list(edges[i], field, n);
    if (ab[0] == ab[1]) {
      throw ParseError(field, "self-loop");
    }
    if (g.has_edge(ab[0], ab[1])) {
      throw ParseError(field, "duplicate edge");
    }
    g.add_edge(ab[0], ab[1]);
  }
  return g;
}

VertexId resolve_vertex(const Graph& g, const json& v, const std::string& field) {
  if (v.is_string()) {
    const std::string name = v.get<std::string>();
    for (VertexId id : g.vertices()) {
      if (g.name(id) == name) {
        return id;
      }
    }
    throw ParseError(field, "no vertex named \"" + name + "\"");
  }
  const auto id = get_integer(v, field, 0, static_cast<std::int64_t>(g.id_bound()) - 1);
  return VertexId{static_cast<std::uint32_t>(id)};
}

json graph_json(const Graph& g) {
  json verts = json::array();
  for (VertexId v : g.vertices()) {
    verts.push_back(v.index);
  }
  json orch = json::array();
  for (VertexId v : g.orchestrator_vertices()) {
    orch.push_back(v.index);
  }
  json edges = json::array();
  for (const auto& [a, b] : g.edges()) {
    edges.push_back({a.index, b.index});
  }
  return {{"vertices", verts}, {"edges", edges}, {"orchestrator_vertices", orch}};
}

}  // namespace

std::vector<Outcome> parse_outcomes(std::string_view signs, const std::string& field) {
  constexpr std::string_view kUnicodeMinus = "−";
  std::vector<Outcome> out;
  for (std::size_t i = 0; i < signs.size();) {
    if (signs[i] == '+') {
      out.push_back(Outcome::Plus);
      ++i;
    } else if (signs[i] == '-') {
      out.push_back(Outcome::Minus);
      ++i;
    } else if (signs.substr(i, kUnicodeMinus.size()) == kUnicodeMinus) {
      out.push_back(Outcome::Minus);
      i += kUnicodeMinus.size();
    } else {
      throw ParseError(field, "outcomes must be '+' or '-'");
    }
  }
  return out;
}

Scenario parse_scenario(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("", std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) {
    throw ParseError("", "scenario must be a JSON object");
  }
  reject_unknown(doc, kTopKeys, "");

  Scenario sc;
  const bool has_clients = doc.contains("clients");
  const bool has_topology = doc.contains("topology");
  if (has_clients == has_topology) {
    throw ParseError("clients", "give exactly one of \"clients\" or \"topology\"");
  }
  if (has_clients) {
    const auto k = get_integer(doc["clients"], "clients", 2,
                               static_cast<std::int64_t>((kMaxQubits + 1) / 2));
    sc.topology = linear_chain(static_cast<int>(k));
  } else {
    sc.topology = parse_topology(doc["topology"]);
  }
  if (sc.topology.client_vertices().empty()) {
    throw ParseError("topology", "partition violation: at least one client vertex required");
  }
  const std::size_t n_o = sc.topology.orchestrator_vertices().size();

  if (!doc.contains("bases")) {
    throw ParseError("bases", "missing");
  }
  const json& bases = doc["bases"];
  if (!bases.is_array()) {
    throw ParseError("bases", "expected an array");
  }
  if (bases.size() != n_o) {
    throw ParseError("bases", "bases length must equal n_o=" + std::to_string(n_o));
  }
  for (std::size_t i = 0; i < bases.size(); ++i) {
    sc.bases.push_back(BasisEntry{parse_axis(bases[i], "bases[" + std::to_string(i) + "]"), {}});
  }

  if (doc.contains("forced_outcomes") && !doc["forced_outcomes"].is_null()) {
    const json& f = doc["forced_outcomes"];
    std::vector<Outcome> outcomes;
    if (f.is_string()) {
      outcomes = parse_outcomes(f.get<std::string>(), "forced_outcomes");
    } else if (f.is_array()) {
      for (std::size_t i = 0; i < f.size(); ++i) {
        const std::string field = "forced_outcomes[" + std::to_string(i) + "]";
        if (!f[i].is_string()) {
          throw ParseError(field, "expected \"+\" or \"-\"");
        }
        const auto one = parse_outcomes(f[i].get<std::string>(), field);
        if (one.size() != 1) {
          throw ParseError(field, "expected a single sign");
        }
        outcomes.push_back(one.front());
      }
    } else {
      throw ParseError("forced_outcomes", "expected an array or a sign string");
    }
    if (outcomes.size() != n_o) {
      throw ParseError("forced_outcomes",
                       "forced_outcomes length must equal n_o=" + std::to_string(n_o));
    }
    sc.forced_outcomes = std::move(outcomes);
  }

  if (doc.contains("b0_overrides")) {
    const json& o = doc["b0_overrides"];
    if (!o.is_object()) {
      throw ParseError("b0_overrides", "expected an object of index -> vertex");
    }
    for (const auto& [key, value] : o.items()) {
      const std::string field = "b0_overrides." + key;
      std::size_t pos = 0;
      unsigned long index = 0;
      try {
        index = std::stoul(key, &pos);
      } catch (const std::exception&) {
        pos = 0;
      }
      if (pos != key.size() || key.empty()) {
        throw ParseError(field, "key must be a measurement index");
      }
      if (index >= n_o) {
        throw ParseError(field, "measurement index out of range (n_o=" + std::to_string(n_o) + ")");
      }
      sc.bases[index].b0 = resolve_vertex(sc.topology, value, field);
    }
  }

  if (doc.contains("seed")) {
    const json& s = doc["seed"];
    if (!s.is_number_integer() || (s.is_number_integer() && !s.is_number_unsigned() && s.get<std::int64_t>() < 0)) {
      throw ParseError("seed", "expected a non-negative integer");
    }
    sc.seed = s.get<std::uint64_t>();
  }
  if (doc.contains("channel_delay_ns")) {
    sc.channel_delay_ns = get_integer(doc["channel_delay_ns"], "channel_delay_ns", 0,
                                      std::numeric_limits<std::int64_t>::max() / 4);
  }
  if (doc.contains("link_delays_ns")) {
    const json& d = doc["link_delays_ns"];
    if (!d.is_object()) {
      throw ParseError("link_delays_ns", "expected an object of client -> delay");
    }
    for (const auto& [key, value] : d.items()) {
      const std::string field = "link_delays_ns." + key;
      const VertexId v = resolve_vertex(sc.topology, json(key), field);
      if (sc.topology.role(v) != Role::Client) {
        throw ParseError(field, "not a client vertex");
      }
      sc.link_delay_ns[v] = get_integer(value, field, 0, std::numeric_limits<std::int64_t>::max() / 4);
    }
  }
  if (doc.contains("tolerance")) {
    const json& t = doc["tolerance"];
    if (!t.is_number() || !(t.get<double>() > 0.0)) {
      throw ParseError("tolerance", "expected a positive number");
    }
    sc.tolerance = t.get<double>();
  }

  try {
    validate(sc);
  } catch (const DomainError& e) {
    throw ParseError("", e.what());
  }
  return sc;
}

std::string scenario_to_json(const Scenario& sc) {
  json doc;
  doc["topology"] = graph_json(sc.topology);
  json bases = json::array();
  json overrides = json::object();
  for (std::size_t i = 0; i < sc.bases.size(); ++i) {
    bases.push_back(std::string(1, axis_letter(sc.bases[i].axis)));
    if (sc.bases[i].b0) {
      overrides[std::to_string(i)] = sc.bases[i].b0->index;
    }
  }
  doc["bases"] = bases;
  doc["b0_overrides"] = overrides;
  if (sc.forced_outcomes) {
    std::string signs;
    for (Outcome m : *sc.forced_outcomes) {
      signs += outcome_sign(m);
    }
    doc["forced_outcomes"] = signs;
  }
  doc["seed"] = sc.seed;
  doc["channel_delay_ns"] = sc.channel_delay_ns;
  json links = json::object();
  for (const auto& [v, d] : sc.link_delay_ns) {
    links[sc.topology.name(v)] = d;
  }
  doc["link_delays_ns"] = links;
  doc["tolerance"] = sc.tolerance;
  return doc.dump();
}

std::string scenario_hash(const Scenario& sc) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : scenario_to_json(sc)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace qlan
