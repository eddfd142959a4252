#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>

#include "run_config.hpp"

namespace tabmark {

// Exit codes shared by every command.
inline constexpr int exit_ok = 0;
inline constexpr int exit_verify_fail = 1;
inline constexpr int exit_config = 2;
inline constexpr int exit_io = 3;
inline constexpr int exit_schema = 4;

struct EmbedOptions {
    std::string input;
    std::string output;
    std::string watermark;  // PBM path
};

struct VerifyOptions {
    std::string input;
    std::string watermark;
    std::optional<double> threshold;  // overrides the config file
};

struct RecoverOptions {
    std::string input;
    std::string output;  // PBM path
    size_t width = 0;    // 0: take from config
    size_t height = 0;
};

struct AttackOptions {
    std::string input;
    std::string output;
    std::string kind = "delete";
    std::string mode = "both";
    double fraction = 0.0;
};

struct BenchOptions {
    std::string out_dir = "bench_out";
    size_t n = 5000;
    int trials = 50;
    std::string watermark;  // optional PBM; default is a seeded 4x4
    bool svg = false;
};

struct KeygenOptions {
    std::string output;  // optional config-syntax file; empty prints to out
};

int cmd_embed(const RunConfig& config, const EmbedOptions& opt, std::ostream& out, bool quiet);
int cmd_verify(const RunConfig& config, const VerifyOptions& opt, std::ostream& out, bool quiet);
int cmd_recover(const RunConfig& config, const RecoverOptions& opt, std::ostream& out, bool quiet);
int cmd_attack(const RunConfig& config, const AttackOptions& opt, std::ostream& out, bool quiet);
int cmd_bench(const RunConfig& config, const BenchOptions& opt, std::ostream& out, bool quiet);
int cmd_keygen(const RunConfig& config, const KeygenOptions& opt, std::ostream& out, bool quiet);

// Runs `fn`, translating the error taxonomy to exit codes and printing the
// message to `err`.
int guard(std::ostream& err, const std::function<int()>& fn);

}  // namespace tabmark
