#include "tabmark/bench.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>

#include "tabmark/dates.hpp"
#include "tabmark/errors.hpp"
#include "tabmark/extract.hpp"
#include "tabmark/rng.hpp"

namespace tabmark {

Relation gen_dataset(size_t n, const DatasetSpec& spec, uint64_t seed) {
    if (spec.numeric_cols < 0 || spec.datetime_cols < 0 || spec.value_min > spec.value_max ||
        spec.year_min > spec.year_max)
        throw ConfigError("malformed dataset spec");
    SplitMix64 rng(seed);

    Relation relation;
    relation.schema.push_back(Column{"id", ColumnKind::key, 0});
    for (int c = 0; c < spec.numeric_cols; ++c)
        relation.schema.push_back(Column{"val" + std::to_string(c), ColumnKind::numeric,
                                         spec.scale});
    for (int c = 0; c < spec.datetime_cols; ++c)
        relation.schema.push_back(Column{"ts" + std::to_string(c), ColumnKind::datetime, 0});
    relation.pk_column = 0;

    const int64_t day_lo = days_from_civil(spec.year_min, 1, 1);
    const int64_t day_hi = days_from_civil(spec.year_max, 12, 31);
    relation.tuples.reserve(n);
    for (size_t i = 1; i <= n; ++i) {
        Tuple t;
        t.cells.reserve(relation.schema.size());
        t.cells.emplace_back(std::to_string(i));
        for (int c = 0; c < spec.numeric_cols; ++c)
            t.cells.emplace_back(NumericCell{rng.next_in(spec.value_min, spec.value_max)});
        for (int c = 0; c < spec.datetime_cols; ++c) {
            DateTimeCell dc;
            civil_from_days(rng.next_in(day_lo, day_hi), dc.year, dc.month, dc.day);
            dc.time.hh = static_cast<int>(rng.next_below(24));
            dc.time.mm = static_cast<int>(rng.next_below(60));
            dc.time.ss = static_cast<int>(rng.next_below(60));
            t.cells.emplace_back(dc);
        }
        relation.tuples.push_back(std::move(t));
    }
    return relation;
}

MarkConfig default_mark_config(const DatasetSpec& spec) {
    MarkConfig config;
    config.pk_column = "id";
    for (int c = 0; c < spec.numeric_cols; ++c)
        config.numeric_columns.emplace_back("val" + std::to_string(c), spec.scale);
    for (int c = 0; c < spec.datetime_cols; ++c)
        config.datetime_columns.push_back("ts" + std::to_string(c));
    return config;
}

std::vector<CurvePoint> sweep(const Relation& marked, const SecretKeys& keys,
                              const WatermarkBits& wm, const MarkConfig& config, AttackKind kind,
                              AlterMode alter_mode, const std::vector<double>& fractions,
                              int trials, uint64_t master_seed) {
    if (trials < 1) throw ConfigError("trials must be positive");
    std::vector<CurvePoint> points;
    points.reserve(fractions.size());
    for (size_t fi = 0; fi < fractions.size(); ++fi) {
        CurvePoint pt;
        pt.fraction = fractions[fi];
        pt.trials = trials;
        pt.min_rate = 100.0;
        double sum = 0.0;
        for (int t = 0; t < trials; ++t) {
            AttackSpec spec{kind, fractions[fi], alter_mode, derive_seed(master_seed, fi, t)};
            const Relation attacked = apply_attack(marked, spec, config);
            const double rate = recover(attacked, keys, wm, config).rate;
            sum += rate;
            pt.min_rate = std::min(pt.min_rate, rate);
            pt.max_rate = std::max(pt.max_rate, rate);
        }
        pt.mean_rate = sum / trials;
        points.push_back(pt);
    }
    return points;
}

void write_curve(const std::string& path, AttackKind kind, const std::vector<CurvePoint>& points) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write curve file: " + path);
    out << "attack,fraction,trials,mean_rate,min_rate,max_rate\n";
    char buf[160];
    for (const CurvePoint& pt : points) {
        std::snprintf(buf, sizeof buf, "%s,%g,%d,%.2f,%.2f,%.2f\n", attack_name(kind), pt.fraction,
                      pt.trials, pt.mean_rate, pt.min_rate, pt.max_rate);
        out << buf;
    }
    out.flush();
    if (!out) throw IoError("write failed: " + path);
}

void write_curve_svg(const std::string& path, AttackKind kind,
                     const std::vector<CurvePoint>& points) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write curve file: " + path);
    const double w = 640, h = 400, ml = 56, mr = 16, mt = 28, mb = 44;
    const double pw = w - ml - mr, ph = h - mt - mb;
    double fmax = 1.0;
    for (const CurvePoint& pt : points) fmax = std::max(fmax, pt.fraction);

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << w << ' ' << h << "\">\n";
    out << "<rect width=\"" << w << "\" height=\"" << h << "\" fill=\"white\"/>\n";
    char buf[256];
    for (int pct = 0; pct <= 100; pct += 25) {
        double y = mt + ph * (1.0 - pct / 100.0);
        std::snprintf(buf, sizeof buf,
                      "<line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" stroke=\"#ddd\"/>"
                      "<text x=\"%.1f\" y=\"%.1f\" font-size=\"12\" text-anchor=\"end\">%d</text>\n",
                      ml, y, w - mr, y, ml - 6, y + 4, pct);
        out << buf;
    }
    for (double f = 0.0; f <= fmax + 1e-9; f += 0.25) {
        double x = ml + pw * f / fmax;
        std::snprintf(buf, sizeof buf,
                      "<text x=\"%.1f\" y=\"%.1f\" font-size=\"12\" text-anchor=\"middle\">"
                      "%.2f</text>\n",
                      x, h - mb + 18, f);
        out << buf;
    }
    std::snprintf(buf, sizeof buf,
                  "<text x=\"%.1f\" y=\"18\" font-size=\"14\">%s: mean recovery rate (%%) vs "
                  "fraction</text>\n",
                  ml, attack_name(kind));
    out << buf;
    out << "<polyline fill=\"none\" stroke=\"#1f6feb\" stroke-width=\"2\" points=\"";
    for (const CurvePoint& pt : points) {
        double x = ml + pw * pt.fraction / fmax;
        double y = mt + ph * (1.0 - pt.mean_rate / 100.0);
        std::snprintf(buf, sizeof buf, "%.1f,%.1f ", x, y);
        out << buf;
    }
    out << "\"/>\n</svg>\n";
    out.flush();
    if (!out) throw IoError("write failed: " + path);
}

std::vector<double> default_fractions() {
    std::vector<double> out;
    out.reserve(20);
    for (int i = 1; i <= 20; ++i) out.push_back(i / 20.0);
    return out;
}

}  // namespace tabmark
