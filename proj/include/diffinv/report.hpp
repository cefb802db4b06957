#pragma once

#include <string>

#include "diffinv/eval.hpp"

namespace diffinv {

// Stable machine-readable report:
// {command, identity, n, mode, trials, seed, status, witness?}.
std::string report_json(const VerifyReport& report, const std::string& command, unsigned n);

std::string status_name(VerifyStatus s);
std::string mode_name(RunMode m);

} // namespace diffinv
