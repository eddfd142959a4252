#include <fstream>
#include <sstream>

#include "doctest.h"
#include "support.hpp"
#include "tabmark/bench.hpp"
#include "tabmark/embed.hpp"
#include "tabmark/errors.hpp"
#include "tabmark/rng.hpp"

using namespace tabmark;
using testsupport::TempDir;
using testsupport::wm_from;

TEST_SUITE("bench") {

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

}  // namespace

TEST_CASE("gen_dataset shape and determinism") {
    const DatasetSpec spec;
    Relation r = gen_dataset(100, spec, 5);
    REQUIRE(r.schema.size() == 4);
    CHECK(r.schema[0].name == "id");
    CHECK(r.schema[0].kind == ColumnKind::key);
    CHECK(r.schema[1].name == "val0");
    CHECK(r.schema[2].name == "val1");
    CHECK(r.schema[3].name == "ts0");
    CHECK(r.pk_column == 0);
    REQUIRE(r.n() == 100);
    CHECK(*r.pk_of(r.tuples[0]) == "1");
    CHECK(*r.pk_of(r.tuples[99]) == "100");

    for (const auto& t : r.tuples) {
        for (size_t c : {size_t{1}, size_t{2}}) {
            int64_t v = std::get<NumericCell>(t.cells[c]).scaled;
            CHECK(v >= spec.value_min);
            CHECK(v <= spec.value_max);
        }
        const auto& dc = std::get<DateTimeCell>(t.cells[3]);
        CHECK(dc.year >= 2020);
        CHECK(dc.year <= 2023);
    }

    CHECK(testsupport::render_to_string(gen_dataset(100, spec, 5)) ==
          testsupport::render_to_string(r));
    CHECK(testsupport::render_to_string(gen_dataset(100, spec, 6)) !=
          testsupport::render_to_string(r));
    CHECK(gen_dataset(0, spec, 5).n() == 0);
}

TEST_CASE("gen_dataset minute gate frequency") {
    // mm uniform over 0..59: with k1=5, 12 of 60 values pass.
    const DatasetSpec spec;
    Relation r = gen_dataset(5000, spec, 11);
    size_t gated = 0;
    for (const auto& t : r.tuples)
        if (std::get<DateTimeCell>(t.cells[3]).time.mm % 5 == 0) gated++;
    CHECK(gated > 850);   // expect 1000, sd ~28
    CHECK(gated < 1150);
}

TEST_CASE("default_mark_config covers every generated column") {
    const DatasetSpec spec;
    MarkConfig config = default_mark_config(spec);
    CHECK(config.pk_column == "id");
    REQUIRE(config.numeric_columns.size() == 2);
    CHECK(config.numeric_columns[0].first == "val0");
    CHECK(config.numeric_columns[0].second == spec.scale);
    CHECK(config.datetime_columns == std::vector<std::string>{"ts0"});
    CHECK_NOTHROW(config.validate());
}

TEST_CASE("derive_seed separates fraction and trial indices") {
    CHECK(derive_seed(1, 0, 0) != derive_seed(1, 0, 1));
    CHECK(derive_seed(1, 0, 0) != derive_seed(1, 1, 0));
    CHECK(derive_seed(1, 0, 1) != derive_seed(1, 1, 0));
    CHECK(derive_seed(1, 2, 3) != derive_seed(2, 2, 3));
    CHECK(derive_seed(1, 2, 3) == derive_seed(1, 2, 3));
}

TEST_CASE("sweep on an unattacked table scores 100 at fraction 0") {
    const DatasetSpec spec;
    const MarkConfig config = default_mark_config(spec);
    const SecretKeys keys{5, 10};
    const WatermarkBits wm = wm_from({1, 0, 1, 1, 0, 0, 1, 0, 1, 1, 0, 0, 0, 1, 0, 1}, 4);
    const Relation marked = embed(gen_dataset(2000, spec, 31), keys, wm, config).first;

    for (AttackKind kind : {AttackKind::add, AttackKind::del, AttackKind::alter}) {
        auto points = sweep(marked, keys, wm, config, kind, AlterMode::both, {0.0}, 3, 77);
        REQUIRE(points.size() == 1);
        CHECK(points[0].mean_rate == 100.0);
        CHECK(points[0].min_rate == 100.0);
        CHECK(points[0].max_rate == 100.0);
        CHECK(points[0].trials == 3);
    }
}

TEST_CASE("sweep is deterministic for a fixed grid and master seed") {
    const DatasetSpec spec;
    const MarkConfig config = default_mark_config(spec);
    const SecretKeys keys{5, 10};
    const WatermarkBits wm = wm_from({1, 0, 0, 1}, 2);
    const Relation marked = embed(gen_dataset(1000, spec, 32), keys, wm, config).first;

    auto first = sweep(marked, keys, wm, config, AttackKind::del, AlterMode::both, {0.5, 0.9},
                       5, 123);
    auto again = sweep(marked, keys, wm, config, AttackKind::del, AlterMode::both, {0.5, 0.9},
                       5, 123);
    REQUIRE(first.size() == 2);
    for (size_t i = 0; i < first.size(); ++i) {
        CHECK(first[i].mean_rate == again[i].mean_rate);
        CHECK(first[i].min_rate == again[i].min_rate);
        CHECK(first[i].max_rate == again[i].max_rate);
    }
    CHECK(first[0].fraction == 0.5);
    CHECK(first[1].fraction == 0.9);
}

TEST_CASE("write_curve emits the documented schema") {
    TempDir dir;
    std::vector<CurvePoint> points;
    points.push_back(CurvePoint{0.5, 10, 100.0, 100.0, 100.0});
    points.push_back(CurvePoint{0.75, 10, 93.14, 87.5, 100.0});
    const std::string path = dir.file("delete.csv");
    write_curve(path, AttackKind::del, points);

    CHECK(slurp(path) ==
          "attack,fraction,trials,mean_rate,min_rate,max_rate\n"
          "DELETE,0.5,10,100.00,100.00,100.00\n"
          "DELETE,0.75,10,93.14,87.50,100.00\n");

    write_curve(dir.file("again.csv"), AttackKind::del, points);
    CHECK(slurp(dir.file("again.csv")) == slurp(path));
    CHECK_THROWS_AS(write_curve("/nonexistent/dir/x.csv", AttackKind::del, points), IoError);
}

TEST_CASE("write_curve_svg emits a standalone chart") {
    TempDir dir;
    std::vector<CurvePoint> points{CurvePoint{0.5, 10, 80.0, 60.0, 100.0}};
    write_curve_svg(dir.file("c.svg"), AttackKind::select, points);
    const std::string svg = slurp(dir.file("c.svg"));
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("SELECT") != std::string::npos);
    CHECK(svg.find("polyline") != std::string::npos);
}

TEST_CASE("default fraction grid") {
    auto fractions = default_fractions();
    REQUIRE(fractions.size() == 20);
    CHECK(fractions.front() == 0.05);
    CHECK(fractions.back() == 1.0);
    CHECK(fractions[9] == 0.5);
}

}  // TEST_SUITE
