#include "tabmark/embed.hpp"

#include <stdexcept>

#include "tabmark/codec.hpp"
#include "tabmark/errors.hpp"

namespace tabmark {

std::vector<size_t> EmbedStats::zero_carrier_bits() const {
    std::vector<size_t> out;
    for (size_t b = 0; b < ch1_carriers.size(); ++b)
        if (ch1_carriers[b] + ch2_carriers[b] == 0) out.push_back(b);
    return out;
}

void EmbedStats::merge(const EmbedStats& other) {
    if (other.ch1_carriers.size() != ch1_carriers.size())
        throw std::invalid_argument("embed stats length mismatch");
    for (size_t b = 0; b < ch1_carriers.size(); ++b) {
        ch1_carriers[b] += other.ch1_carriers[b];
        ch2_carriers[b] += other.ch2_carriers[b];
    }
    marked_tuples = std::max(marked_tuples, other.marked_tuples);
    modified_cells += other.modified_cells;
}

namespace {

void check_inputs(const Relation& relation, const SecretKeys& keys, const WatermarkBits& wm) {
    keys.validate();
    if (wm.size() == 0) throw std::invalid_argument("empty watermark");
    if (!relation.pk_column) throw SchemaError("relation has no primary key column");
}

// Selected tuples carry bit (pk_int / k1) mod L. A NULL key makes the
// tuple unaddressable and the table unfit for embedding.
uint64_t require_pk_int(const Relation& relation, const Tuple& t, size_t row) {
    const std::string* pk = relation.pk_of(t);
    if (!pk) throw SchemaError("NULL primary key in row " + std::to_string(row + 1));
    return pk_to_int(*pk);
}

}  // namespace

std::pair<Relation, EmbedStats> embed_phase1(const Relation& relation, const SecretKeys& keys,
                                             const WatermarkBits& wm, const MarkConfig& config) {
    check_inputs(relation, keys, wm);
    const size_t L = wm.size();
    EmbedStats stats(L);
    if (config.numeric_columns.empty()) return {relation, stats};
    const auto columns = resolve_numeric_columns(relation, config);

    Relation out = relation;
    for (size_t row = 0; row < out.tuples.size(); ++row) {
        Tuple& t = out.tuples[row];
        uint64_t pk_int = require_pk_int(out, t, row);
        if (!is_selected(pk_int, keys.k1)) continue;
        stats.marked_tuples++;
        const size_t b = bit_index(pk_int, keys.k1, L);
        const int bit = wm.bits[b];
        for (size_t c : columns) {
            Cell& cell = t.cells[c];
            if (std::holds_alternative<std::monostate>(cell)) continue;
            auto* nc = std::get_if<NumericCell>(&cell);
            if (!nc)
                throw SchemaError("non-numeric cell in column " + out.schema[c].name + ", row " +
                                  std::to_string(row + 1));
            int64_t marked = set_lsb_scaled(nc->scaled, bit);
            if (marked != nc->scaled) stats.modified_cells++;
            nc->scaled = marked;
            stats.ch1_carriers[b]++;
        }
    }
    return {std::move(out), std::move(stats)};
}

std::pair<Relation, EmbedStats> embed_phase2(const Relation& relation, const SecretKeys& keys,
                                             const WatermarkBits& wm, const MarkConfig& config) {
    check_inputs(relation, keys, wm);
    const size_t L = wm.size();
    EmbedStats stats(L);
    if (config.datetime_columns.empty()) return {relation, stats};
    const auto columns = resolve_datetime_columns(relation, config);

    Relation out = relation;
    for (size_t row = 0; row < out.tuples.size(); ++row) {
        Tuple& t = out.tuples[row];
        uint64_t pk_int = require_pk_int(out, t, row);
        if (!is_selected(pk_int, keys.k1)) continue;
        stats.marked_tuples++;
        const size_t b = bit_index(pk_int, keys.k1, L);
        const int bit = wm.bits[b];
        for (size_t c : columns) {
            Cell& cell = t.cells[c];
            if (std::holds_alternative<std::monostate>(cell)) continue;
            auto* dc = std::get_if<DateTimeCell>(&cell);
            if (!dc)
                throw SchemaError("non-datetime cell in column " + out.schema[c].name + ", row " +
                                  std::to_string(row + 1));
            if (dc->time.mm % keys.k1 != 0) continue;
            const int ss = encode_ss(bit, keys.k2);
            if (dc->time.ss != ss) stats.modified_cells++;
            dc->time.ss = ss;
            stats.ch2_carriers[b]++;
        }
    }
    return {std::move(out), std::move(stats)};
}

std::pair<Relation, EmbedStats> embed(const Relation& relation, const SecretKeys& keys,
                                      const WatermarkBits& wm, const MarkConfig& config) {
    config.validate();
    auto [pass1, stats] = embed_phase1(relation, keys, wm, config);
    auto [pass2, stats2] = embed_phase2(pass1, keys, wm, config);
    stats.merge(stats2);
    return {std::move(pass2), std::move(stats)};
}

}  // namespace tabmark
