#pragma once

#include <ostream>
#include <string>

#include "smode/config.hpp"
#include "smode/report.hpp"
#include "smode/verify.hpp"

namespace smode::cli {

enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitFailure = 2 };

/// units -> pulse -> corrections. Electron: gamma if given, else v_perp/v_z,
/// else the defaults 0.127/0.99. Throws DomainError/ConfigError.
Analysis run_analysis(const AnalysisConfig& config);

/// Rendered report; the exit code reflects the verdict.
int cmd_analyze(const AnalysisConfig& config, std::ostream& out);

std::string delta_output(bool json);
int cmd_delta(bool json, std::ostream& out);

/// CSV: header, then one row per grid point with the first axis slowest.
/// Rows are computed on config.threads workers and emitted in grid order.
std::string sweep_csv(const AnalysisConfig& config);
int cmd_sweep(const AnalysisConfig& config, std::ostream& out);

int cmd_verify(const VerifyOptions& options, bool json, std::ostream& out);

}  // namespace smode::cli
