#include "tabmark/model.hpp"

#include <cstdint>
#include <unordered_set>

#include "tabmark/errors.hpp"

namespace tabmark {

void SecretKeys::validate() const {
    if (k1 < k1_min || k1 > k1_max)
        throw ConfigError("k1 out of range [1, 31]: " + std::to_string(k1));
    if (k2 < k2_min || k2 > k2_max)
        throw ConfigError("k2 out of range [0, 15]: " + std::to_string(k2));
}

std::optional<size_t> Relation::find_column(const std::string& name) const {
    for (size_t i = 0; i < schema.size(); ++i)
        if (schema[i].name == name) return i;
    return std::nullopt;
}

const std::string* Relation::pk_of(const Tuple& t) const {
    if (!pk_column || *pk_column >= t.cells.size()) return nullptr;
    const auto* raw = std::get_if<std::string>(&t.cells[*pk_column]);
    if (!raw || raw->empty()) return nullptr;
    return raw;
}

void MarkConfig::validate() const {
    if (numeric_columns.empty() && datetime_columns.empty())
        throw ConfigError("no mark columns configured; need at least one channel");
    std::unordered_set<std::string> seen;
    for (const auto& [name, scale] : numeric_columns) {
        if (name.empty()) throw ConfigError("empty numeric column name");
        if (scale < 0 || scale > 18)
            throw ConfigError("scale out of range [0, 18] for column " + name);
        if (!seen.insert(name).second) throw ConfigError("duplicate mark column: " + name);
    }
    for (const auto& name : datetime_columns) {
        if (name.empty()) throw ConfigError("empty datetime column name");
        if (!seen.insert(name).second) throw ConfigError("duplicate mark column: " + name);
    }
    if (!pk_column.empty() && seen.count(pk_column))
        throw ConfigError("primary key column cannot carry the mark: " + pk_column);
}

bool has_valid_primary_key(const Relation& relation) {
    if (!relation.pk_column) return false;
    std::unordered_set<std::string> seen;
    seen.reserve(relation.n());
    for (const auto& t : relation.tuples) {
        const std::string* pk = relation.pk_of(t);
        if (!pk || !seen.insert(*pk).second) return false;
    }
    return true;
}

Relation ensure_primary_key(Relation relation) {
    if (has_valid_primary_key(relation)) return relation;
    if (relation.pk_column) relation.schema[*relation.pk_column].kind = ColumnKind::other;
    std::string name = "rowid";
    while (relation.find_column(name)) name += "_";
    relation.schema.push_back(Column{name, ColumnKind::key, 0});
    for (size_t i = 0; i < relation.tuples.size(); ++i)
        relation.tuples[i].cells.emplace_back(std::to_string(i + 1));
    relation.pk_column = relation.schema.size() - 1;
    return relation;
}

std::optional<int64_t> integer_pk_value(const std::string& raw) {
    size_t i = 0;
    bool negative = false;
    if (i < raw.size() && (raw[i] == '+' || raw[i] == '-')) negative = raw[i++] == '-';
    size_t digits_at = i;
    uint64_t value = 0;
    while (i < raw.size() && raw[i] >= '0' && raw[i] <= '9') {
        value = value * 10 + static_cast<uint64_t>(raw[i] - '0');
        ++i;
    }
    size_t ndigits = i - digits_at;
    if (ndigits == 0 || ndigits > 18) return std::nullopt;
    if (i < raw.size()) {
        if (raw[i] != '.') return std::nullopt;
        ++i;
        size_t frac_at = i;
        while (i < raw.size() && raw[i] >= '0' && raw[i] <= '9') ++i;
        if (i == frac_at || i != raw.size()) return std::nullopt;
    }
    auto v = static_cast<int64_t>(value);
    return negative ? -v : v;
}

uint64_t pk_to_int(const std::string& raw) {
    if (auto v = integer_pk_value(raw)) return pk_to_int(*v);
    uint32_t acc = 0;
    for (unsigned char b : raw) acc = acc * 31u + b;
    return acc;
}

uint64_t pk_to_int(int64_t pk) {
    return pk < 0 ? ~static_cast<uint64_t>(pk) + 1 : static_cast<uint64_t>(pk);
}

namespace {

std::vector<size_t> resolve(const Relation& relation, const std::vector<std::string>& names,
                            ColumnKind kind, const char* what) {
    std::vector<size_t> out;
    out.reserve(names.size());
    for (const auto& name : names) {
        auto idx = relation.find_column(name);
        if (!idx) throw SchemaError(std::string(what) + " column missing: " + name);
        if (relation.schema[*idx].kind != kind)
            throw SchemaError(std::string(what) + " column has wrong type: " + name);
        out.push_back(*idx);
    }
    return out;
}

}  // namespace

std::vector<size_t> resolve_numeric_columns(const Relation& relation, const MarkConfig& config) {
    std::vector<std::string> names;
    names.reserve(config.numeric_columns.size());
    for (const auto& [name, scale] : config.numeric_columns) names.push_back(name);
    return resolve(relation, names, ColumnKind::numeric, "numeric");
}

std::vector<size_t> resolve_datetime_columns(const Relation& relation, const MarkConfig& config) {
    return resolve(relation, config.datetime_columns, ColumnKind::datetime, "datetime");
}

}  // namespace tabmark
