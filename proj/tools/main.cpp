#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "run_config.hpp"
#include "tabmark/errors.hpp"

int main(int argc, char** argv) {
    CLI::App app{"tabmark: blind key-based watermarking for relational tables"};
    app.require_subcommand(1);

    std::string config_path;
    uint64_t seed = 0;
    bool quiet = false;
    app.add_option("--config", config_path, "run configuration file (key = value lines)");
    auto* seed_opt = app.add_option("--seed", seed, "master seed (overrides the config file)");
    app.add_flag("--quiet", quiet, "suppress informational output");

    tabmark::EmbedOptions embed_opt;
    auto* embed = app.add_subcommand("embed", "embed a watermark into a CSV table");
    embed->add_option("--input", embed_opt.input, "input CSV table")->required();
    embed->add_option("--output", embed_opt.output, "marked CSV table")->required();
    embed->add_option("--watermark", embed_opt.watermark, "watermark image (plain PBM)")
        ->required();

    tabmark::VerifyOptions verify_opt;
    double verify_threshold = 0.0;
    auto* verify = app.add_subcommand("verify", "match a suspect table against a watermark");
    verify->add_option("--input", verify_opt.input, "suspect CSV table")->required();
    verify->add_option("--watermark", verify_opt.watermark, "original watermark (plain PBM)")
        ->required();
    auto* threshold_opt =
        verify->add_option("--threshold", verify_threshold, "pass mark in percent");

    tabmark::RecoverOptions recover_opt;
    auto* recover = app.add_subcommand("recover", "recover the watermark image from a table");
    recover->add_option("--input", recover_opt.input, "suspect CSV table")->required();
    recover->add_option("--output", recover_opt.output, "recovered watermark (plain PBM)")
        ->required();
    recover->add_option("--width", recover_opt.width, "watermark width in pixels");
    recover->add_option("--height", recover_opt.height, "watermark height in pixels");

    tabmark::AttackOptions attack_opt;
    auto* attack = app.add_subcommand("attack", "apply a seeded robustness attack to a table");
    attack->add_option("--input", attack_opt.input, "input CSV table")->required();
    attack->add_option("--output", attack_opt.output, "attacked CSV table")->required();
    attack->add_option("--attack", attack_opt.kind, "add | delete | alter | select")
        ->required();
    attack->add_option("--fraction", attack_opt.fraction, "attack fraction of the tuple count")
        ->required();
    attack->add_option("--mode", attack_opt.mode, "alter mode: numeric | time | both");

    tabmark::BenchOptions bench_opt;
    auto* bench = app.add_subcommand("bench", "run robustness sweeps and write curve CSVs");
    bench->add_option("--out-dir", bench_opt.out_dir, "report directory");
    bench->add_option("--n", bench_opt.n, "synthetic dataset size");
    bench->add_option("--trials", bench_opt.trials, "attack trials per curve point");
    bench->add_option("--watermark", bench_opt.watermark, "watermark image (default: seeded 4x4)");
    bench->add_flag("--svg", bench_opt.svg, "also write SVG charts");

    tabmark::KeygenOptions keygen_opt;
    auto* keygen = app.add_subcommand("keygen", "generate a fresh k1/k2 pair");
    keygen->add_option("--output", keygen_opt.output, "write keys as a config file");

    // Global flags remain usable after the subcommand name.
    for (CLI::App* sub : {embed, verify, recover, attack, bench, keygen}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : tabmark::exit_config;
    }

    return tabmark::guard(std::cerr, [&]() -> int {
        tabmark::RunConfig config = tabmark::load_run_config(config_path);
        tabmark::apply_env_keys(config);
        if (seed_opt->count() > 0) {
            config.seed = seed;
            config.seed_present = true;
        }
        if (threshold_opt->count() > 0) verify_opt.threshold = verify_threshold;

        if (*embed) return tabmark::cmd_embed(config, embed_opt, std::cout, quiet);
        if (*verify) return tabmark::cmd_verify(config, verify_opt, std::cout, quiet);
        if (*recover) return tabmark::cmd_recover(config, recover_opt, std::cout, quiet);
        if (*attack) return tabmark::cmd_attack(config, attack_opt, std::cout, quiet);
        if (*bench) return tabmark::cmd_bench(config, bench_opt, std::cout, quiet);
        if (*keygen) return tabmark::cmd_keygen(config, keygen_opt, std::cout, quiet);
        throw tabmark::ConfigError("no command given");
    });
}
