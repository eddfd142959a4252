#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tabmark/attacks.hpp"
#include "tabmark/model.hpp"

namespace tabmark {

// Synthetic dataset shape for robustness runs.
struct DatasetSpec {
    int numeric_cols = 2;
    int scale = 0;
    int64_t value_min = 0;      // scaled units
    int64_t value_max = 9999;   // scaled units
    int datetime_cols = 1;
    int year_min = 2020;
    int year_max = 2023;
};

struct CurvePoint {
    double fraction = 0.0;
    int trials = 0;
    double mean_rate = 0.0;
    double min_rate = 0.0;
    double max_rate = 0.0;
};

// Columns: "id" (key), "val0".."valN", "ts0".."tsM". Primary keys are
// "1".."n" so every k1 stride is hit.
Relation gen_dataset(size_t n, const DatasetSpec& spec, uint64_t seed);

// Marks every generated numeric and datetime column.
MarkConfig default_mark_config(const DatasetSpec& spec);

// One robustness curve: for each fraction run `trials` attacks against a
// fresh copy of the marked relation and fuse-match the result. Trial
// (fi, t) uses derive_seed(master_seed, fi, t), so points are independent
// of sweep order and may be computed concurrently.
std::vector<CurvePoint> sweep(const Relation& marked, const SecretKeys& keys,
                              const WatermarkBits& wm, const MarkConfig& config,
                              AttackKind kind, AlterMode alter_mode,
                              const std::vector<double>& fractions, int trials,
                              uint64_t master_seed);

// CSV: attack,fraction,trials,mean_rate,min_rate,max_rate
void write_curve(const std::string& path, AttackKind kind, const std::vector<CurvePoint>& points);

// Self-contained line chart of mean_rate over fraction, for quick eyeballing.
void write_curve_svg(const std::string& path, AttackKind kind,
                     const std::vector<CurvePoint>& points);

std::vector<double> default_fractions();  // 0.05 .. 1.00 step 0.05

}  // namespace tabmark
