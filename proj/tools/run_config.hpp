#pragma once

#include <cstdint>
#include <string>

#include "tabmark/model.hpp"

namespace tabmark {

// Run settings from the sidecar config file (key = value lines, '#'
// comments). Secret keys travel in this file or in TABMARK_K1/TABMARK_K2,
// never as command-line arguments.
struct RunConfig {
    MarkConfig mark;
    SecretKeys keys;
    bool keys_present = false;  // k1/k2 appeared in file or environment
    double threshold = 50.0;    // verify pass mark, percent
    bool auto_pk = true;
    uint64_t seed = 0;
    bool seed_present = false;
    size_t wm_width = 0;  // recover output dimensions
    size_t wm_height = 0;
};

// Empty path yields the defaults above. Unknown keys are config errors.
RunConfig load_run_config(const std::string& path);

// TABMARK_K1 / TABMARK_K2 override file values when set.
void apply_env_keys(RunConfig& config);

}  // namespace tabmark
