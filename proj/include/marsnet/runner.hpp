// Executes CLI commands against a scenario and writes the CSV reports.

#pragma once

#include <string>
#include <vector>

#include "marsnet/scenario.hpp"

namespace marsnet {

// coverage, rtt, route, handover, linkbudget, mass, apps, all.
const std::vector<std::string>& command_names();

// Writes the command's CSV outputs plus effective_config.cfg into
// output_dir (created if needed). Identical scenarios produce byte-identical
// files. Throws ValidationError for user errors and std::runtime_error for
// I/O failures.
void run_command(const std::string& command, const Scenario& scenario,
                 const std::string& output_dir);

}  // namespace marsnet
