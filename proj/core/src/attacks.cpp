#include "tabmark/attacks.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "tabmark/dates.hpp"
#include "tabmark/errors.hpp"
#include "tabmark/rng.hpp"

namespace tabmark {

namespace {

size_t attack_count(double fraction, size_t n, const char* what) {
    if (!(fraction >= 0.0) || fraction > 1.0)
        throw ConfigError(std::string(what) + " fraction out of range [0, 1]");
    return static_cast<size_t>(std::llround(fraction * static_cast<double>(n)));
}

// Victim mask: the first m positions of a full Fisher-Yates shuffle of
// [0, n). Exactly n - 1 draws regardless of m, so the victim set for a
// given seed nests as the fraction grows.
std::vector<uint8_t> pick_victims(size_t n, size_t m, SplitMix64& rng) {
    std::vector<uint32_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0u);
    for (size_t i = 0; i + 1 < n; ++i)
        std::swap(idx[i], idx[i + rng.next_below(n - i)]);
    std::vector<uint8_t> victim(n, 0);
    for (size_t i = 0; i < m && i < n; ++i) victim[idx[i]] = 1;
    return victim;
}

struct ColumnRange {
    bool any = false;
    int64_t lo = 0;  // scaled units or day serials
    int64_t hi = 0;
    std::vector<std::string> samples;  // non-null values of text columns

    void widen(int64_t v) {
        lo = any ? std::min(lo, v) : v;
        hi = any ? std::max(hi, v) : v;
        any = true;
    }
};

}  // namespace

Relation attack_add(const Relation& relation, double fraction, uint64_t seed) {
    if (!(fraction >= 0.0)) throw ConfigError("add fraction out of range");
    const size_t n = relation.n();
    const auto m = static_cast<size_t>(std::llround(fraction * static_cast<double>(n)));
    SplitMix64 rng(seed);

    std::vector<ColumnRange> ranges(relation.schema.size());
    for (const auto& t : relation.tuples) {
        for (size_t c = 0; c < t.cells.size(); ++c) {
            const Cell& cell = t.cells[c];
            if (const auto* nc = std::get_if<NumericCell>(&cell))
                ranges[c].widen(nc->scaled);
            else if (const auto* dc = std::get_if<DateTimeCell>(&cell))
                ranges[c].widen(days_from_civil(dc->year, dc->month, dc->day));
            else if (const auto* s = std::get_if<std::string>(&cell))
                ranges[c].samples.push_back(*s);
        }
    }

    // Fresh keys continue past the largest integer key so they collide
    // with nothing and land in every k1 residue class.
    int64_t next_pk = 1;
    std::vector<std::string> raw_keys;
    if (relation.pk_column) {
        for (const auto& t : relation.tuples) {
            const std::string* pk = relation.pk_of(t);
            if (!pk) continue;
            raw_keys.push_back(*pk);
            if (auto v = integer_pk_value(*pk)) next_pk = std::max(next_pk, *v + 1);
        }
    }
    std::sort(raw_keys.begin(), raw_keys.end());

    Relation out = relation;
    out.tuples.reserve(n + m);
    for (size_t i = 0; i < m; ++i) {
        Tuple t;
        t.cells.reserve(relation.schema.size());
        for (size_t c = 0; c < relation.schema.size(); ++c) {
            if (relation.pk_column && c == *relation.pk_column) {
                std::string pk = std::to_string(next_pk++);
                while (std::binary_search(raw_keys.begin(), raw_keys.end(), pk))
                    pk = std::to_string(next_pk++);
                t.cells.emplace_back(std::move(pk));
                continue;
            }
            const Column& col = relation.schema[c];
            const ColumnRange& range = ranges[c];
            switch (col.kind) {
                case ColumnKind::numeric:
                    if (range.any)
                        t.cells.emplace_back(NumericCell{rng.next_in(range.lo, range.hi)});
                    else
                        t.cells.emplace_back(std::monostate{});
                    break;
                case ColumnKind::datetime:
                    if (range.any) {
                        DateTimeCell dc;
                        civil_from_days(rng.next_in(range.lo, range.hi), dc.year, dc.month,
                                        dc.day);
                        dc.time.hh = static_cast<int>(rng.next_below(24));
                        dc.time.mm = static_cast<int>(rng.next_below(60));
                        dc.time.ss = static_cast<int>(rng.next_below(60));
                        t.cells.emplace_back(dc);
                    } else {
                        t.cells.emplace_back(std::monostate{});
                    }
                    break;
                default:
                    if (range.samples.empty())
                        t.cells.emplace_back(std::string());
                    else
                        t.cells.emplace_back(range.samples[rng.next_below(range.samples.size())]);
            }
        }
        out.tuples.push_back(std::move(t));
    }
    return out;
}

Relation attack_delete(const Relation& relation, double fraction, uint64_t seed) {
    const size_t n = relation.n();
    const size_t m = attack_count(fraction, n, "delete");
    SplitMix64 rng(seed);
    const auto victim = pick_victims(n, m, rng);

    Relation out;
    out.schema = relation.schema;
    out.pk_column = relation.pk_column;
    out.tuples.reserve(n - m);
    for (size_t i = 0; i < n; ++i)
        if (!victim[i]) out.tuples.push_back(relation.tuples[i]);
    return out;
}

Relation attack_alter(const Relation& relation, double fraction, AlterMode mode,
                      const MarkConfig& config, uint64_t seed) {
    const size_t n = relation.n();
    const size_t m = attack_count(fraction, n, "alter");
    SplitMix64 rng(seed);
    const auto victim = pick_victims(n, m, rng);

    std::vector<uint8_t> numeric(relation.schema.size(), 0), datetime(relation.schema.size(), 0);
    if (mode != AlterMode::time)
        for (size_t c : resolve_numeric_columns(relation, config)) numeric[c] = 1;
    if (mode != AlterMode::numeric)
        for (size_t c : resolve_datetime_columns(relation, config)) datetime[c] = 1;

    // Perturbations are drawn in input order, then schema order, so the
    // whole attack is a pure function of (relation, spec).
    Relation out = relation;
    for (size_t i = 0; i < n; ++i) {
        if (!victim[i]) continue;
        Tuple& t = out.tuples[i];
        for (size_t c = 0; c < t.cells.size(); ++c) {
            if (numeric[c]) {
                if (auto* nc = std::get_if<NumericCell>(&t.cells[c])) {
                    int64_t delta = rng.next_bit() ? 1 : -1;
                    if (nc->scaled > INT64_MAX - 1 && delta > 0) delta = -1;
                    if (nc->scaled < INT64_MIN + 1 && delta < 0) delta = 1;
                    nc->scaled += delta;
                }
            } else if (datetime[c]) {
                if (auto* dc = std::get_if<DateTimeCell>(&t.cells[c]))
                    dc->time.ss = static_cast<int>(rng.next_below(60));
            }
        }
    }
    return out;
}

Relation attack_select(const Relation& relation, double fraction, uint64_t seed) {
    const size_t n = relation.n();
    const size_t m = attack_count(fraction, n, "select");
    if (m == 0) throw ConfigError("selection keeps no tuples");
    SplitMix64 rng(seed);
    const auto keep = pick_victims(n, m, rng);

    Relation out;
    out.schema = relation.schema;
    out.pk_column = relation.pk_column;
    out.tuples.reserve(m);
    for (size_t i = 0; i < n; ++i)
        if (keep[i]) out.tuples.push_back(relation.tuples[i]);
    return out;
}

Relation apply_attack(const Relation& relation, const AttackSpec& spec, const MarkConfig& config) {
    switch (spec.kind) {
        case AttackKind::add:
            return attack_add(relation, spec.fraction, spec.seed);
        case AttackKind::del:
            return attack_delete(relation, spec.fraction, spec.seed);
        case AttackKind::alter:
            return attack_alter(relation, spec.fraction, spec.alter_mode, config, spec.seed);
        case AttackKind::select:
            return attack_select(relation, spec.fraction, spec.seed);
    }
    throw ConfigError("unknown attack kind");
}

const char* attack_name(AttackKind kind) {
    switch (kind) {
        case AttackKind::add:
            return "ADD";
        case AttackKind::del:
            return "DELETE";
        case AttackKind::alter:
            return "ALTER";
        case AttackKind::select:
            return "SELECT";
    }
    return "?";
}

namespace {

std::string lower(std::string s) {
    for (char& c : s)
        if (c >= 'A' && c <= 'Z') c += 'a' - 'A';
    return s;
}

}  // namespace

AttackKind parse_attack_kind(const std::string& name) {
    const std::string s = lower(name);
    if (s == "add") return AttackKind::add;
    if (s == "delete") return AttackKind::del;
    if (s == "alter") return AttackKind::alter;
    if (s == "select") return AttackKind::select;
    throw ConfigError("unknown attack: " + name);
}

AlterMode parse_alter_mode(const std::string& name) {
    const std::string s = lower(name);
    if (s == "numeric") return AlterMode::numeric;
    if (s == "time") return AlterMode::time;
    if (s == "both") return AlterMode::both;
    throw ConfigError("unknown alter mode: " + name);
}

}  // namespace tabmark
