#ifndef WORKBENCH_CLI_HPP_
#define WORKBENCH_CLI_HPP_

#include <string>

#include "workbench/orbital.hpp"

namespace workbench {

struct RunOptions {
    int threads = 1;
    long nu_box = 3;
    Normalization normalization = Normalization::per_w;
    bool no_timestamp = false;
};

struct RunResult {
    int exit_code = 0;  // 0 pass, 1 task failed, 2 input error
    std::string report;  // JSON text
};

/// Parse a problem file (JSON text), run its tasks, and render the
/// report. Input errors are reported in the JSON with exit code 2;
/// per-task errors are isolated and yield exit code 1.
RunResult run_problem(const std::string& json_text, const RunOptions& opts);

/// Documentation of the problem-file and report schemas.
std::string schema_text();

/// FNV-1a 64-bit digest, hex encoded.
std::string fnv1a_digest(const std::string& data);

}  // namespace workbench

#endif  // WORKBENCH_CLI_HPP_
