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

#include "qlan/qlan.h"

#include <cmath>
#include <fstream>
#include <memory>
#include <new>
#include <optional>
#include <sstream>
#include <string>

#include "core/errors.hpp"
#include "core/netsim.hpp"
#include "core/report.hpp"
#include "core/scenario.hpp"

struct qlan_scenario {
  qlan::Scenario scenario;
  mutable std::string json_cache;
  mutable std::string dot_cache;
};

struct qlan_report {
  qlan::SimReport report;
  std::string json;
  std::string summary;
  std::string initial_dot;
  std::string final_dot;
};

struct qlan_sweep {
  qlan::SweepResult result;
  std::string json;
};

namespace {

thread_local std::string g_last_error;

qlan_status fail(qlan_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Maps the exception in flight to a status code.
qlan_status translate_current_exception() {
  try {
    throw;
  } catch (const qlan::ParseError& e) {
    return fail(QLAN_ERR_PARSE, e.what());
  } catch (const qlan::ImpossibleOutcomeError& e) {
    return fail(QLAN_ERR_IMPOSSIBLE_OUTCOME, e.what());
  } catch (const qlan::ProtocolError& e) {
    return fail(QLAN_ERR_PROTOCOL, e.what());
  } catch (const qlan::BudgetError& e) {
    return fail(QLAN_ERR_BUDGET, e.what());
  } catch (const qlan::DomainError& e) {
    return fail(QLAN_ERR_DOMAIN, e.what());
  } catch (const std::bad_alloc&) {
    return fail(QLAN_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(QLAN_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(QLAN_ERR_INTERNAL, "unknown error");
  }
}

template <typename F>
qlan_status guarded(F&& body) {
  try {
    return body();
  } catch (...) {
    return translate_current_exception();
  }
}

qlan_status null_argument(const char* what) {
  return fail(QLAN_ERR_INVALID_ARGUMENT, std::string("null ") + what);
}

}  // namespace

extern "C" {

const char* qlan_version(void) { return "1.0.0"; }

const char* qlan_status_name(qlan_status status) {
  switch (status) {
    case QLAN_OK:
      return "ok";
    case QLAN_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case QLAN_ERR_PARSE:
      return "parse error";
    case QLAN_ERR_DOMAIN:
      return "domain error";
    case QLAN_ERR_IMPOSSIBLE_OUTCOME:
      return "impossible outcome";
    case QLAN_ERR_PROTOCOL:
      return "protocol error";
    case QLAN_ERR_BUDGET:
      return "budget exceeded";
    case QLAN_ERR_IO:
      return "i/o error";
    case QLAN_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

const char* qlan_last_error(void) { return g_last_error.c_str(); }

qlan_status qlan_scenario_parse(const char* json, size_t length, qlan_scenario** out) {
  if (json == nullptr) return null_argument("json");
  if (out == nullptr) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    auto handle = std::make_unique<qlan_scenario>();
    handle->scenario = qlan::parse_scenario(std::string_view(json, length));
    *out = handle.release();
    return QLAN_OK;
  });
}

qlan_status qlan_scenario_load(const char* path, qlan_scenario** out) {
  if (path == nullptr) return null_argument("path");
  if (out == nullptr) return null_argument("out");
  *out = nullptr;
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    return fail(QLAN_ERR_IO, std::string("cannot read scenario file ") + path);
  }
  std::ostringstream text;
  text << in.rdbuf();
  const std::string doc = text.str();
  return qlan_scenario_parse(doc.data(), doc.size(), out);
}

void qlan_scenario_free(qlan_scenario* scenario) { delete scenario; }

qlan_status qlan_scenario_set_seed(qlan_scenario* scenario, uint64_t seed) {
  if (scenario == nullptr) return null_argument("scenario");
  scenario->scenario.seed = seed;
  return QLAN_OK;
}

qlan_status qlan_scenario_set_forced_outcomes(qlan_scenario* scenario, const char* signs) {
  if (scenario == nullptr) return null_argument("scenario");
  return guarded([&] {
    if (signs == nullptr) {
      scenario->scenario.forced_outcomes.reset();
      return QLAN_OK;
    }
    auto outcomes = qlan::parse_outcomes(signs, "forced_outcomes");
    const std::size_t n_o = scenario->scenario.bases.size();
    if (outcomes.size() != n_o) {
      return fail(QLAN_ERR_INVALID_ARGUMENT,
                  "forced outcomes length must equal n_o=" + std::to_string(n_o));
    }
    scenario->scenario.forced_outcomes = std::move(outcomes);
    return QLAN_OK;
  });
}

qlan_status qlan_scenario_set_tolerance(qlan_scenario* scenario, double tolerance) {
  if (scenario == nullptr) return null_argument("scenario");
  if (!(tolerance > 0.0) || !std::isfinite(tolerance)) {
    return fail(QLAN_ERR_INVALID_ARGUMENT, "tolerance must be a positive finite number");
  }
  scenario->scenario.tolerance = tolerance;
  return QLAN_OK;
}

qlan_status qlan_scenario_set_tamper_corrections(qlan_scenario* scenario, int enabled) {
  if (scenario == nullptr) return null_argument("scenario");
  scenario->scenario.tamper_corrections = enabled != 0;
  return QLAN_OK;
}

qlan_status qlan_scenario_orchestrator_count(const qlan_scenario* scenario, size_t* out) {
  if (scenario == nullptr) return null_argument("scenario");
  if (out == nullptr) return null_argument("out");
  *out = scenario->scenario.topology.orchestrator_vertices().size();
  return QLAN_OK;
}

qlan_status qlan_scenario_client_count(const qlan_scenario* scenario, size_t* out) {
  if (scenario == nullptr) return null_argument("scenario");
  if (out == nullptr) return null_argument("out");
  *out = scenario->scenario.topology.client_vertices().size();
  return QLAN_OK;
}

qlan_status qlan_scenario_json(const qlan_scenario* scenario, const char** out) {
  if (scenario == nullptr) return null_argument("scenario");
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    scenario->json_cache = qlan::scenario_to_json(scenario->scenario);
    *out = scenario->json_cache.c_str();
    return QLAN_OK;
  });
}

qlan_status qlan_scenario_initial_dot(const qlan_scenario* scenario, const char** out) {
  if (scenario == nullptr) return null_argument("scenario");
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    scenario->dot_cache = qlan::to_dot(scenario->scenario.topology);
    *out = scenario->dot_cache.c_str();
    return QLAN_OK;
  });
}

qlan_status qlan_run(const qlan_scenario* scenario, qlan_report** out) {
  if (scenario == nullptr) return null_argument("scenario");
  if (out == nullptr) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    auto handle = std::make_unique<qlan_report>();
    handle->report = qlan::run_scenario(scenario->scenario);
    handle->json = qlan::report_to_json(handle->report, scenario->scenario);
    handle->summary = qlan::report_summary(handle->report);
    handle->initial_dot = qlan::to_dot(handle->report.initial_graph);
    handle->final_dot = qlan::to_dot(handle->report.predicted_graph);
    *out = handle.release();
    return QLAN_OK;
  });
}

void qlan_report_free(qlan_report* report) { delete report; }

qlan_status qlan_report_verdict(const qlan_report* report, qlan_verdict* out) {
  if (report == nullptr) return null_argument("report");
  if (out == nullptr) return null_argument("out");
  *out = report->report.verdict == qlan::Verdict::Pass ? QLAN_VERDICT_PASS : QLAN_VERDICT_FAIL;
  return QLAN_OK;
}

qlan_status qlan_report_fidelity(const qlan_report* report, double* out) {
  if (report == nullptr) return null_argument("report");
  if (out == nullptr) return null_argument("out");
  *out = report->report.fidelity;
  return QLAN_OK;
}

qlan_status qlan_report_measurement_count(const qlan_report* report, size_t* out) {
  if (report == nullptr) return null_argument("report");
  if (out == nullptr) return null_argument("out");
  *out = report->report.measurements.size();
  return QLAN_OK;
}

qlan_status qlan_report_message_count(const qlan_report* report, size_t* out) {
  if (report == nullptr) return null_argument("report");
  if (out == nullptr) return null_argument("out");
  *out = report->report.messages.size();
  return QLAN_OK;
}

qlan_status qlan_report_json(const qlan_report* report, const char** out) {
  if (report == nullptr) return null_argument("report");
  if (out == nullptr) return null_argument("out");
  *out = report->json.c_str();
  return QLAN_OK;
}

qlan_status qlan_report_summary(const qlan_report* report, const char** out) {
  if (report == nullptr) return null_argument("report");
  if (out == nullptr) return null_argument("out");
  *out = report->summary.c_str();
  return QLAN_OK;
}

qlan_status qlan_report_initial_dot(const qlan_report* report, const char** out) {
  if (report == nullptr) return null_argument("report");
  if (out == nullptr) return null_argument("out");
  *out = report->initial_dot.c_str();
  return QLAN_OK;
}

qlan_status qlan_report_final_dot(const qlan_report* report, const char** out) {
  if (report == nullptr) return null_argument("report");
  if (out == nullptr) return null_argument("out");
  *out = report->final_dot.c_str();
  return QLAN_OK;
}

qlan_status qlan_sweep_run_count(const qlan_scenario* scenario, int all_outcomes, int all_bases,
                                 uint64_t* out) {
  if (scenario == nullptr) return null_argument("scenario");
  if (out == nullptr) return null_argument("out");
  *out = qlan::sweep_run_count(scenario->scenario, all_outcomes != 0, all_bases != 0);
  return QLAN_OK;
}

qlan_status qlan_sweep_run(const qlan_scenario* scenario, const qlan_sweep_options* options,
                           qlan_sweep** out) {
  if (scenario == nullptr) return null_argument("scenario");
  if (out == nullptr) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    qlan::SweepOptions opts;
    if (options != nullptr) {
      opts.all_outcomes = options->all_outcomes != 0;
      opts.all_bases = options->all_bases != 0;
      if (options->budget != 0) {
        opts.budget = options->budget;
      }
      opts.threads = options->threads;
    }
    auto handle = std::make_unique<qlan_sweep>();
    handle->result = qlan::sweep(scenario->scenario, opts);
    handle->json = qlan::sweep_to_json(handle->result, scenario->scenario);
    *out = handle.release();
    return QLAN_OK;
  });
}

void qlan_sweep_free(qlan_sweep* sweep) { delete sweep; }

qlan_status qlan_sweep_counts(const qlan_sweep* sweep, size_t* passed, size_t* total) {
  if (sweep == nullptr) return null_argument("sweep");
  if (passed == nullptr || total == nullptr) return null_argument("out");
  *passed = sweep->result.passed;
  *total = sweep->result.total();
  return QLAN_OK;
}

qlan_status qlan_sweep_json(const qlan_sweep* sweep, const char** out) {
  if (sweep == nullptr) return null_argument("sweep");
  if (out == nullptr) return null_argument("out");
  *out = sweep->json.c_str();
  return QLAN_OK;
}

qlan_status qlan_write_file_atomic(const char* path, const char* data, size_t length) {
  if (path == nullptr) return null_argument("path");
  if (data == nullptr && length != 0) return null_argument("data");
  try {
    qlan::write_file_atomic(path, std::string_view(data == nullptr ? "" : data, length));
    return QLAN_OK;
  } catch (const std::exception& e) {
    return fail(QLAN_ERR_IO, e.what());
  }
}

}  // extern "C"
