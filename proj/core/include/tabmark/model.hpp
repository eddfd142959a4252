#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace tabmark {

// Owner-side secret keys. k1 is the tuple-selection modulus (5 bits,
// k1 = 1 selects every tuple and is legal); k2 is the 4-bit verification
// nibble of the seconds channel.
struct SecretKeys {
    int k1 = 1;
    int k2 = 0;

    static constexpr int k1_min = 1, k1_max = 31;
    static constexpr int k2_min = 0, k2_max = 15;

    void validate() const;  // throws ConfigError when out of range
};

struct TimeValue {
    int hh = 0;  // 0-23
    int mm = 0;  // 0-59
    int ss = 0;  // 0-59

    bool operator==(const TimeValue&) const = default;
};

struct DateTimeCell {
    int year = 1970;
    int month = 1;
    int day = 1;
    TimeValue time;

    bool operator==(const DateTimeCell&) const = default;
};

// Numeric cells are exact decimals: value = scaled / 10^scale with the
// scale declared on the column. Keeping them integral makes the LSB
// well-defined and the file round trip lossless.
struct NumericCell {
    int64_t scaled = 0;

    bool operator==(const NumericCell&) const = default;
};

// monostate marks a NULL cell. Strings hold primary-key and free-text
// column values verbatim.
using Cell = std::variant<std::monostate, NumericCell, DateTimeCell, std::string>;

enum class ColumnKind { key, numeric, datetime, other };

struct Column {
    std::string name;
    ColumnKind kind = ColumnKind::other;
    int scale = 0;  // decimal places; meaningful for numeric columns only
};

struct Tuple {
    std::vector<Cell> cells;
};

struct Relation {
    std::vector<Column> schema;
    std::optional<size_t> pk_column;  // index into schema
    std::vector<Tuple> tuples;

    size_t n() const { return tuples.size(); }
    std::optional<size_t> find_column(const std::string& name) const;

    // Raw primary-key text of a tuple; nullptr when the key is NULL/empty.
    const std::string* pk_of(const Tuple& t) const;
};

// Watermark as a flat row-major bit sequence of L = width x height bits.
struct WatermarkBits {
    size_t width = 0;
    size_t height = 0;
    std::vector<uint8_t> bits;  // each element 0 or 1

    size_t size() const { return bits.size(); }
};

// Which columns carry the mark, and at what decimal precision.
struct MarkConfig {
    std::string pk_column;  // empty: rely on the auto primary key
    std::vector<std::pair<std::string, int>> numeric_columns;  // (name, scale)
    std::vector<std::string> datetime_columns;

    bool channel1() const { return !numeric_columns.empty(); }
    bool channel2() const { return !datetime_columns.empty(); }

    // Column lists must be disjoint, at least one channel enabled,
    // scales within [0, 18]. Throws ConfigError.
    void validate() const;
};

// True when a primary key is designated and its values are non-null and
// unique across all tuples.
bool has_valid_primary_key(const Relation& relation);

// Returns the relation unchanged when it already has a valid primary key;
// otherwise appends a fresh column of consecutive integers 1..n and
// designates it as the key (any previous key column is demoted to a plain
// text column).
Relation ensure_primary_key(Relation relation);

// Integer part of a plain signed decimal literal (at most 18 integer
// digits), or nullopt when `raw` is not one.
std::optional<int64_t> integer_pk_value(const std::string& raw);

// Key normalization: numeric keys map to |integer part|; anything else is
// byte-folded as acc = (acc * 31 + byte) mod 2^32. Deterministic and total.
uint64_t pk_to_int(const std::string& raw);
uint64_t pk_to_int(int64_t pk);

inline bool is_selected(uint64_t pk_int, int k1) {
    return pk_int % static_cast<uint64_t>(k1) == 0;
}

// Resolve configured mark columns against a relation's schema, checking
// presence and kind. Throws SchemaError naming the offending column.
std::vector<size_t> resolve_numeric_columns(const Relation& relation, const MarkConfig& config);
std::vector<size_t> resolve_datetime_columns(const Relation& relation, const MarkConfig& config);

}  // namespace tabmark
