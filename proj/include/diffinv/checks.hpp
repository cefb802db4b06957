#pragma once

#include <string>
#include <vector>

#include "diffinv/eval.hpp"

namespace diffinv {

// One verification request, as issued by the CLI `verify` subcommand or the
// acceptance suite.  `identity` names the law; `arg` carries the minor index
// j, the expansion order k, or the invariant name where applicable.
struct CheckRequest {
    std::string identity;
    std::string arg;
    unsigned n = 2;
    RunMode mode = RunMode::Evaluation;
    bool mode_explicit = false; // caller picked the mode; do not override
    EvalOptions opts;
};

VerifyReport run_check(const CheckRequest& req);

// The campaign at dimension n: every identity the verifier knows, with its
// default mode and trial counts.
std::vector<CheckRequest> all_checks(unsigned n);

std::vector<std::string> known_identities();

} // namespace diffinv
