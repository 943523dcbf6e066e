#pragma once

#include <string>
#include <vector>

namespace holomat {

// Outcome of one CLI invocation run in-process. `report` is the stdout
// payload (the JSON document when one is produced), `error` the stderr text.
struct CliResult {
    int exit_code = 0;
    std::string report;
    std::string error;
};

// Exit codes: 0 for definitive outcomes and passing checks, 1 for usage,
// I/O or parse problems, 2 when the analysis itself rejects the input
// (failed hypotheses, mixed or mismatched forms, failing verdicts).
CliResult run_cli_capture(const std::vector<std::string>& args);

// Streams the captured report/error to stdout/stderr and returns the code.
int run_cli(int argc, char** argv);

}  // namespace holomat
