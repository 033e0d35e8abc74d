#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "runner/config.hpp"
#include "runner/report.hpp"

namespace cglab::runner {

enum ExitCode : int { kOk = 0, kConfigError = 1, kIoError = 2 };

// Builds the tables for one suite (not "all"). Row-level failures land in
// Table::errors. Progress lines go to log.
std::vector<Table> build_suite(const std::string& suite, const ExperimentConfig& config,
                               std::ostream& out, std::ostream& log);

// Runs config.suite (expanding "all"), writing every table under
// config.out_dir. Returns an ExitCode.
int run(const ExperimentConfig& config, std::ostream& out, std::ostream& log);

}  // namespace cglab::runner
