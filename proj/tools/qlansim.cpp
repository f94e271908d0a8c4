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

// qlansim: run or sweep QLAN scenarios through the C API.
//
// Exit codes: 0 success (all runs PASS), 1 usage / I/O / protocol error,
// 2 verification failure.

#include <cstdint>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "qlan/qlan.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitVerificationFailed = 2;

int report_error(qlan_status status) {
  std::fprintf(stderr, "qlansim: %s: %s\n", qlan_status_name(status), qlan_last_error());
  return kExitError;
}

struct ScenarioHandle {
  qlan_scenario* ptr = nullptr;
  ~ScenarioHandle() { qlan_scenario_free(ptr); }
};

struct ReportHandle {
  qlan_report* ptr = nullptr;
  ~ReportHandle() { qlan_report_free(ptr); }
};

struct SweepHandle {
  qlan_sweep* ptr = nullptr;
  ~SweepHandle() { qlan_sweep_free(ptr); }
};

qlan_status write_text(const std::filesystem::path& path, const char* text) {
  return qlan_write_file_atomic(path.string().c_str(), text, std::strlen(text));
}

struct RunFlags {
  std::string scenario;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> force_outcomes;
  std::optional<std::string> report;
  std::optional<std::string> dot_dir;
  std::optional<double> tolerance;
  bool tamper = false;
};

struct SweepFlags {
  std::string scenario;
  bool all_outcomes = false;
  bool all_bases = false;
  std::optional<std::string> report;
  std::uint64_t budget = 0;
  unsigned threads = 0;
};

int cmd_run(const RunFlags& flags) {
  ScenarioHandle sc;
  if (auto st = qlan_scenario_load(flags.scenario.c_str(), &sc.ptr); st != QLAN_OK) {
    return report_error(st);
  }
  if (flags.seed) {
    qlan_scenario_set_seed(sc.ptr, *flags.seed);
  }
  if (flags.force_outcomes) {
    if (auto st = qlan_scenario_set_forced_outcomes(sc.ptr, flags.force_outcomes->c_str());
        st != QLAN_OK) {
      return report_error(st);
    }
  }
  if (flags.tolerance) {
    if (auto st = qlan_scenario_set_tolerance(sc.ptr, *flags.tolerance); st != QLAN_OK) {
      return report_error(st);
    }
  }
  if (flags.tamper) {
    qlan_scenario_set_tamper_corrections(sc.ptr, 1);
  }

  ReportHandle rep;
  if (auto st = qlan_run(sc.ptr, &rep.ptr); st != QLAN_OK) {
    return report_error(st);
  }

  const char* text = nullptr;
  if (flags.report) {
    qlan_report_json(rep.ptr, &text);
    if (auto st = write_text(*flags.report, text); st != QLAN_OK) {
      return report_error(st);
    }
  }
  if (flags.dot_dir) {
    std::error_code ec;
    std::filesystem::create_directories(*flags.dot_dir, ec);
    if (ec) {
      std::fprintf(stderr, "qlansim: cannot create %s: %s\n", flags.dot_dir->c_str(),
                   ec.message().c_str());
      return kExitError;
    }
    const std::filesystem::path dir(*flags.dot_dir);
    qlan_report_initial_dot(rep.ptr, &text);
    if (auto st = write_text(dir / "initial.dot", text); st != QLAN_OK) {
      return report_error(st);
    }
    qlan_report_final_dot(rep.ptr, &text);
    if (auto st = write_text(dir / "final.dot", text); st != QLAN_OK) {
      return report_error(st);
    }
  }

  qlan_report_summary(rep.ptr, &text);
  std::printf("%s\n", text);
  qlan_verdict verdict = QLAN_VERDICT_FAIL;
  qlan_report_verdict(rep.ptr, &verdict);
  return verdict == QLAN_VERDICT_PASS ? kExitOk : kExitVerificationFailed;
}

int cmd_sweep(const SweepFlags& flags) {
  ScenarioHandle sc;
  if (auto st = qlan_scenario_load(flags.scenario.c_str(), &sc.ptr); st != QLAN_OK) {
    return report_error(st);
  }
  qlan_sweep_options options{flags.all_outcomes ? 1 : 0, flags.all_bases ? 1 : 0, flags.budget,
                             flags.threads};
  SweepHandle sw;
  if (auto st = qlan_sweep_run(sc.ptr, &options, &sw.ptr); st != QLAN_OK) {
    return report_error(st);
  }
  if (flags.report) {
    const char* text = nullptr;
    qlan_sweep_json(sw.ptr, &text);
    if (auto st = write_text(*flags.report, text); st != QLAN_OK) {
      return report_error(st);
    }
  }
  std::size_t passed = 0;
  std::size_t total = 0;
  qlan_sweep_counts(sw.ptr, &passed, &total);
  std::printf("PASS %zu/%zu\n", passed, total);
  return passed == total ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"QLAN artificial-topology simulator"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(qlan_version()));

  RunFlags run;
  CLI::App* run_cmd = app.add_subcommand("run", "Run one scenario and verify the final state");
  run_cmd->add_option("--scenario", run.scenario, "Scenario JSON file")->required();
  run_cmd->add_option("--seed", run.seed, "Override the scenario seed");
  run_cmd->add_option("--force-outcomes", run.force_outcomes, "Forced outcomes, e.g. \"+-+\"");
  run_cmd->add_option("--report", run.report, "Write the JSON report here");
  run_cmd->add_option("--dot-dir", run.dot_dir, "Write initial.dot and final.dot here");
  run_cmd->add_option("--tolerance", run.tolerance, "Verification tolerance on 1 - fidelity");
  run_cmd->add_flag("--tamper-corrections", run.tamper)->group("");  // test hook

  SweepFlags sweep;
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "Run every requested bases/outcome branch");
  sweep_cmd->add_option("--scenario", sweep.scenario, "Scenario JSON file")->required();
  sweep_cmd->add_flag("--all-outcomes", sweep.all_outcomes, "Force every outcome vector");
  sweep_cmd->add_flag("--all-bases", sweep.all_bases, "Try every bases array");
  sweep_cmd->add_option("--report", sweep.report, "Write the JSON sweep report here");
  sweep_cmd->add_option("--budget", sweep.budget, "Maximum number of runs (0: default)");
  sweep_cmd->add_option("--threads", sweep.threads, "Worker threads (0: all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  if (run_cmd->parsed()) {
    return cmd_run(run);
  }
  return cmd_sweep(sweep);
}
