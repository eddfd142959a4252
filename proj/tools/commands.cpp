#include "commands.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <random>

#include "tabmark/attacks.hpp"
#include "tabmark/bench.hpp"
#include "tabmark/csv.hpp"
#include "tabmark/embed.hpp"
#include "tabmark/errors.hpp"
#include "tabmark/extract.hpp"
#include "tabmark/pbm.hpp"
#include "tabmark/rng.hpp"

namespace tabmark {

namespace {

std::string pct(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", value);
    return buf;
}

void require_keys(const RunConfig& config) {
    if (!config.keys_present)
        throw ConfigError("k1/k2 not configured (config file or TABMARK_K1/TABMARK_K2)");
    config.keys.validate();
}

void require_distinct(const std::string& input, const std::string& output) {
    if (output == input) throw ConfigError("output path equals input path: " + input);
    std::error_code ec;
    if (std::filesystem::exists(output, ec) &&
        std::filesystem::equivalent(input, output, ec))
        throw ConfigError("output path equals input path: " + input);
}

Relation read_input(const RunConfig& config, const std::string& path) {
    Relation relation = read_csv(path, config.mark);
    if (!relation.pk_column && config.mark.pk_column.empty() && !config.auto_pk)
        throw SchemaError("no primary key column configured and auto_pk is off");
    return relation;
}

void print_report(std::ostream& out, const RecoveryReport& report) {
    out << "rate: " << pct(report.rate) << "% (" << report.match_count << "/"
        << report.total_count << " bits)\n";
    out << "channel 1 coverage: " << pct(report.ch1_coverage()) << "%\n";
    out << "channel 2 coverage: " << pct(report.ch2_coverage()) << "%\n";
}

// Seed domains: trial seeds use fraction/trial indices < 2^32, so the
// dataset and watermark derivations live above that range.
constexpr uint64_t aux_domain = 1ull << 32;

WatermarkBits bench_watermark(const BenchOptions& opt, uint64_t master_seed) {
    if (!opt.watermark.empty()) return read_pbm(opt.watermark);
    SplitMix64 rng(derive_seed(master_seed, aux_domain, 1));
    WatermarkBits wm;
    wm.width = 4;
    wm.height = 4;
    wm.bits.resize(16);
    for (auto& bit : wm.bits) bit = static_cast<uint8_t>(rng.next_bit());
    return wm;
}

std::string lower_name(AttackKind kind) {
    std::string s = attack_name(kind);
    for (char& c : s) c = static_cast<char>(c - 'A' + 'a');
    return s;
}

}  // namespace

int cmd_embed(const RunConfig& config, const EmbedOptions& opt, std::ostream& out, bool quiet) {
    require_keys(config);
    config.mark.validate();
    require_distinct(opt.input, opt.output);

    Relation relation = read_input(config, opt.input);
    const WatermarkBits wm = read_pbm(opt.watermark);
    if (!has_valid_primary_key(relation)) {
        if (!config.auto_pk)
            throw SchemaError("no valid primary key (column missing, NULL, or duplicate) and "
                              "auto_pk is off");
        relation = ensure_primary_key(relation);
        if (!quiet)
            out << "note: appended primary key column '"
                << relation.schema[*relation.pk_column].name << "'\n";
    }

    auto [marked, stats] = embed(relation, config.keys, wm, config.mark);
    write_csv(opt.output, marked);

    if (!quiet) {
        uint64_t ch1 = 0, ch2 = 0;
        for (size_t b = 0; b < wm.size(); ++b) {
            ch1 += stats.ch1_carriers[b];
            ch2 += stats.ch2_carriers[b];
        }
        out << "tuples: " << marked.n() << "\n";
        out << "marked tuples: " << stats.marked_tuples << "\n";
        out << "modified cells: " << stats.modified_cells << "\n";
        out << "channel 1 carriers: " << ch1 << "\n";
        out << "channel 2 carriers: " << ch2 << "\n";
        const auto bare = stats.zero_carrier_bits();
        if (!bare.empty()) {
            out << "warning: watermark bits with no carrier:";
            for (size_t b : bare) out << ' ' << b;
            out << "\n";
        }
        out << "wrote " << opt.output << "\n";
    }
    return exit_ok;
}

int cmd_verify(const RunConfig& config, const VerifyOptions& opt, std::ostream& out, bool quiet) {
    require_keys(config);
    config.mark.validate();

    const Relation relation = read_input(config, opt.input);
    const WatermarkBits wm = read_pbm(opt.watermark);
    const RecoveryReport report = recover(relation, config.keys, wm, config.mark);

    const double threshold = opt.threshold.value_or(config.threshold);
    if (!quiet) {
        print_report(out, report);
        out << "threshold: " << pct(threshold) << "% -> "
            << (report.rate >= threshold ? "PASS" : "FAIL") << "\n";
    }
    return report.rate >= threshold ? exit_ok : exit_verify_fail;
}

int cmd_recover(const RunConfig& config, const RecoverOptions& opt, std::ostream& out,
                bool quiet) {
    require_keys(config);
    config.mark.validate();
    require_distinct(opt.input, opt.output);

    const size_t width = opt.width ? opt.width : config.wm_width;
    const size_t height = opt.height ? opt.height : config.wm_height;
    if (width == 0 || height == 0)
        throw ConfigError("watermark dimensions required (wm_width/wm_height or --width/--height)");

    const Relation relation = read_input(config, opt.input);
    const size_t L = width * height;
    const auto wm1 = extract_phase1(relation, config.keys, L, config.mark);
    const auto wm2 = extract_phase2(relation, config.keys, L, config.mark);

    WatermarkBits recovered;
    recovered.width = width;
    recovered.height = height;
    recovered.bits = recover_bits(wm1, wm2);
    write_pbm(opt.output, recovered);

    if (!quiet) {
        auto coverage = [](const std::vector<ChannelBit>& wm) {
            size_t readable = 0;
            for (ChannelBit b : wm)
                if (b != ChannelBit::erased) readable++;
            return 100.0 * static_cast<double>(readable) / static_cast<double>(wm.size());
        };
        out << "channel 1 coverage: " << pct(coverage(wm1)) << "%\n";
        out << "channel 2 coverage: " << pct(coverage(wm2)) << "%\n";
        out << "wrote " << opt.output << "\n";
    }
    return exit_ok;
}

int cmd_attack(const RunConfig& config, const AttackOptions& opt, std::ostream& out, bool quiet) {
    require_distinct(opt.input, opt.output);
    AttackSpec spec;
    spec.kind = parse_attack_kind(opt.kind);
    spec.alter_mode = parse_alter_mode(opt.mode);
    spec.fraction = opt.fraction;
    spec.seed = config.seed;

    const Relation relation = read_csv(opt.input, config.mark);
    const Relation attacked = apply_attack(relation, spec, config.mark);
    write_csv(opt.output, attacked);

    if (!quiet) {
        out << attack_name(spec.kind) << " fraction " << opt.fraction << ": " << relation.n()
            << " -> " << attacked.n() << " tuples\n";
        out << "wrote " << opt.output << "\n";
    }
    return exit_ok;
}

int cmd_bench(const RunConfig& config, const BenchOptions& opt, std::ostream& out, bool quiet) {
    SecretKeys keys = config.keys;
    if (!config.keys_present) keys = SecretKeys{5, 10};
    keys.validate();
    if (opt.trials < 1) throw ConfigError("trials must be positive");
    if (opt.n < 1) throw ConfigError("dataset size must be positive");

    const uint64_t master_seed = config.seed;
    const DatasetSpec spec;
    const MarkConfig mark = default_mark_config(spec);
    const WatermarkBits wm = bench_watermark(opt, master_seed);

    const Relation base = gen_dataset(opt.n, spec, derive_seed(master_seed, aux_domain, 0));
    auto [marked, stats] = embed(base, keys, wm, mark);

    std::error_code ec;
    std::filesystem::create_directories(opt.out_dir, ec);
    if (ec) throw IoError("cannot create report directory: " + opt.out_dir);

    if (!quiet) {
        out << "bench: n=" << opt.n << " trials=" << opt.trials << " k1=" << keys.k1
            << " k2=" << keys.k2 << " L=" << wm.size() << " seed=" << master_seed << "\n";
        const auto bare = stats.zero_carrier_bits();
        if (!bare.empty()) {
            out << "warning: watermark bits with no carrier:";
            for (size_t b : bare) out << ' ' << b;
            out << "\n";
        }
    }

    const auto fractions = default_fractions();
    for (AttackKind kind :
         {AttackKind::add, AttackKind::del, AttackKind::alter, AttackKind::select}) {
        const auto points = sweep(marked, keys, wm, mark, kind, AlterMode::both, fractions,
                                  opt.trials, master_seed);
        const std::string stem = (std::filesystem::path(opt.out_dir) / lower_name(kind)).string();
        write_curve(stem + ".csv", kind, points);
        if (opt.svg) write_curve_svg(stem + ".svg", kind, points);
        if (!quiet) out << "wrote " << stem << ".csv\n";
    }
    return exit_ok;
}

int cmd_keygen(const RunConfig& config, const KeygenOptions& opt, std::ostream& out, bool quiet) {
    uint64_t seed;
    if (config.seed_present) {
        seed = config.seed;
    } else {
        std::random_device rd;
        seed = (static_cast<uint64_t>(rd()) << 32) ^ rd();
    }
    SplitMix64 rng(seed);
    const int k1 = 1 + static_cast<int>(rng.next_below(31));
    const int k2 = static_cast<int>(rng.next_below(16));

    const std::string text = "k1 = " + std::to_string(k1) + "\nk2 = " + std::to_string(k2) + "\n";
    if (opt.output.empty()) {
        out << text;
    } else {
        std::ofstream file(opt.output);
        if (!file) throw IoError("cannot write key file: " + opt.output);
        file << text;
        file.flush();
        if (!file) throw IoError("write failed: " + opt.output);
        if (!quiet) out << "wrote " << opt.output << "\n";
    }
    return exit_ok;
}

int guard(std::ostream& err, const std::function<int()>& fn) {
    try {
        return fn();
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return exit_config;
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return exit_io;
    } catch (const SchemaError& e) {
        err << "error: " << e.what() << "\n";
        return exit_schema;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return exit_config;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 70;
    }
}

}  // namespace tabmark
