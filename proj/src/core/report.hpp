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

#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "core/netsim.hpp"

namespace qlan {

std::string_view verdict_name(Verdict v);

/// Run report as pretty-printed JSON with sorted keys. Always carries
/// scenario_hash, seed, measurements, messages, predicted_graph, fidelity,
/// verdict and duration_ns.
std::string report_to_json(const SimReport& report, const Scenario& sc);

/// Sweep summary plus one compact entry per run.
std::string sweep_to_json(const SweepResult& result, const Scenario& sc);

/// "PASS fidelity=0.999999999999 ..." one-liner for the console.
std::string report_summary(const SimReport& report);

/// Writes via a sibling temporary file and rename. Throws std::runtime_error.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace qlan
