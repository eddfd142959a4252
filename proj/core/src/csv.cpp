#include "tabmark/csv.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <unordered_set>

#include "tabmark/dates.hpp"
#include "tabmark/errors.hpp"

namespace tabmark {

std::vector<std::vector<std::string>> parse_csv(std::istream& in) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> row;
    std::string field;
    bool in_quotes = false;
    bool field_was_quoted = false;
    bool any = false;  // stream had at least one character

    auto end_field = [&] {
        row.push_back(std::move(field));
        field.clear();
        field_was_quoted = false;
    };
    auto end_row = [&] {
        end_field();
        rows.push_back(std::move(row));
        row.clear();
    };

    int c;
    while ((c = in.get()) != EOF) {
        any = true;
        if (in_quotes) {
            if (c == '"') {
                if (in.peek() == '"') {
                    in.get();
                    field += '"';
                } else {
                    in_quotes = false;
                }
            } else {
                field += static_cast<char>(c);
            }
            continue;
        }
        switch (c) {
            case '"':
                if (!field.empty() || field_was_quoted)
                    throw IoError("csv: quote inside unquoted field");
                in_quotes = true;
                field_was_quoted = true;
                break;
            case ',':
                end_field();
                break;
            case '\r':
                if (in.peek() == '\n') in.get();
                end_row();
                break;
            case '\n':
                end_row();
                break;
            default:
                if (field_was_quoted) throw IoError("csv: data after closing quote");
                field += static_cast<char>(c);
        }
    }
    if (in_quotes) throw IoError("csv: unterminated quoted field");
    if (!field.empty() || field_was_quoted || !row.empty()) end_row();
    if (!any) return {};
    return rows;
}

int64_t parse_numeric(const std::string& text, int scale) {
    size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) negative = text[i++] == '-';
    size_t int_at = i;
    unsigned __int128 value = 0;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
        value = value * 10 + static_cast<unsigned>(text[i] - '0');
        if (value > static_cast<unsigned __int128>(INT64_MAX) * 1000)
            throw SchemaError("numeric overflow: " + text);
        ++i;
    }
    if (i == int_at) throw SchemaError("malformed numeric: '" + text + "'");
    int frac_digits = 0;
    if (i < text.size() && text[i] == '.') {
        ++i;
        size_t frac_at = i;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
            value = value * 10 + static_cast<unsigned>(text[i] - '0');
            if (value > static_cast<unsigned __int128>(INT64_MAX) * 1000)
                throw SchemaError("numeric overflow: " + text);
            ++i;
            ++frac_digits;
        }
        if (i == frac_at) throw SchemaError("malformed numeric: '" + text + "'");
    }
    if (i != text.size()) throw SchemaError("malformed numeric: '" + text + "'");
    if (frac_digits > scale)
        throw SchemaError("value '" + text + "' has more than " + std::to_string(scale) +
                          " decimal places");
    for (int d = frac_digits; d < scale; ++d) {
        value *= 10;
        if (value > static_cast<unsigned __int128>(INT64_MAX))
            throw SchemaError("numeric overflow: " + text);
    }
    if (value > static_cast<unsigned __int128>(INT64_MAX))
        throw SchemaError("numeric overflow: " + text);
    auto scaled = static_cast<int64_t>(value);
    return negative ? -scaled : scaled;
}

std::string format_numeric(int64_t scaled, int scale) {
    if (scale == 0) return std::to_string(scaled);
    uint64_t mag = scaled < 0 ? ~static_cast<uint64_t>(scaled) + 1 : static_cast<uint64_t>(scaled);
    uint64_t div = 1;
    for (int d = 0; d < scale; ++d) div *= 10;
    char buf[48];
    std::snprintf(buf, sizeof buf, "%s%llu.%0*llu", scaled < 0 ? "-" : "",
                  static_cast<unsigned long long>(mag / div), scale,
                  static_cast<unsigned long long>(mag % div));
    return buf;
}

namespace {

bool all_digits(const std::string& s, size_t at, size_t len) {
    for (size_t i = at; i < at + len; ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}

int num(const std::string& s, size_t at, size_t len) {
    int v = 0;
    for (size_t i = at; i < at + len; ++i) v = v * 10 + (s[i] - '0');
    return v;
}

}  // namespace

DateTimeCell parse_datetime(const std::string& text) {
    if (text.size() != 19 || text[4] != '-' || text[7] != '-' || text[10] != ' ' ||
        text[13] != ':' || text[16] != ':' || !all_digits(text, 0, 4) ||
        !all_digits(text, 5, 2) || !all_digits(text, 8, 2) || !all_digits(text, 11, 2) ||
        !all_digits(text, 14, 2) || !all_digits(text, 17, 2))
        throw SchemaError("malformed datetime: '" + text + "' (want YYYY-MM-DD HH:MM:SS)");
    DateTimeCell cell;
    cell.year = num(text, 0, 4);
    cell.month = num(text, 5, 2);
    cell.day = num(text, 8, 2);
    cell.time.hh = num(text, 11, 2);
    cell.time.mm = num(text, 14, 2);
    cell.time.ss = num(text, 17, 2);
    int y, m, d;
    civil_from_days(days_from_civil(cell.year, cell.month, cell.day), y, m, d);
    if (y != cell.year || m != cell.month || d != cell.day || cell.time.hh > 23 ||
        cell.time.mm > 59 || cell.time.ss > 59)
        throw SchemaError("datetime out of range: '" + text + "'");
    return cell;
}

std::string format_datetime(const DateTimeCell& value) {
    char buf[24];
    std::snprintf(buf, sizeof buf, "%04d-%02d-%02d %02d:%02d:%02d", value.year, value.month,
                  value.day, value.time.hh, value.time.mm, value.time.ss);
    return buf;
}

Relation parse_relation(std::istream& in, const MarkConfig& config) {
    auto rows = parse_csv(in);
    if (rows.empty()) throw SchemaError("csv has no header row");

    Relation relation;
    const auto& header = rows[0];
    std::unordered_set<std::string> names;
    for (const auto& name : header) {
        if (!names.insert(name).second) throw SchemaError("duplicate column name: " + name);
        relation.schema.push_back(Column{name, ColumnKind::other, 0});
    }
    for (const auto& [name, scale] : config.numeric_columns) {
        auto idx = relation.find_column(name);
        if (!idx) throw SchemaError("numeric column missing: " + name);
        relation.schema[*idx].kind = ColumnKind::numeric;
        relation.schema[*idx].scale = scale;
    }
    for (const auto& name : config.datetime_columns) {
        auto idx = relation.find_column(name);
        if (!idx) throw SchemaError("datetime column missing: " + name);
        if (relation.schema[*idx].kind != ColumnKind::other)
            throw SchemaError("column configured twice: " + name);
        relation.schema[*idx].kind = ColumnKind::datetime;
    }
    if (!config.pk_column.empty()) {
        auto idx = relation.find_column(config.pk_column);
        if (!idx) throw SchemaError("primary key column missing: " + config.pk_column);
        if (relation.schema[*idx].kind != ColumnKind::other)
            throw SchemaError("primary key column cannot carry the mark: " + config.pk_column);
        relation.schema[*idx].kind = ColumnKind::key;
        relation.pk_column = *idx;
    }

    relation.tuples.reserve(rows.size() - 1);
    for (size_t r = 1; r < rows.size(); ++r) {
        const auto& fields = rows[r];
        if (fields.size() != header.size())
            throw SchemaError("row " + std::to_string(r + 1) + " has " +
                              std::to_string(fields.size()) + " fields, expected " +
                              std::to_string(header.size()));
        Tuple t;
        t.cells.reserve(fields.size());
        for (size_t c = 0; c < fields.size(); ++c) {
            const Column& col = relation.schema[c];
            const std::string& text = fields[c];
            try {
                switch (col.kind) {
                    case ColumnKind::numeric:
                        if (text.empty())
                            t.cells.emplace_back(std::monostate{});
                        else
                            t.cells.emplace_back(NumericCell{parse_numeric(text, col.scale)});
                        break;
                    case ColumnKind::datetime:
                        if (text.empty())
                            t.cells.emplace_back(std::monostate{});
                        else
                            t.cells.emplace_back(parse_datetime(text));
                        break;
                    default:
                        t.cells.emplace_back(text);
                }
            } catch (const SchemaError& e) {
                throw SchemaError("row " + std::to_string(r + 1) + ", column " + col.name + ": " +
                                  e.what());
            }
        }
        relation.tuples.push_back(std::move(t));
    }
    return relation;
}

Relation read_csv(const std::string& path, const MarkConfig& config) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open table file: " + path);
    return parse_relation(in, config);
}

namespace {

void render_field(std::ostream& out, const std::string& text) {
    if (text.find_first_of(",\"\r\n") == std::string::npos) {
        out << text;
        return;
    }
    out << '"';
    for (char c : text) {
        if (c == '"') out << '"';
        out << c;
    }
    out << '"';
}

}  // namespace

void render_csv(std::ostream& out, const Relation& relation) {
    for (size_t c = 0; c < relation.schema.size(); ++c) {
        if (c) out << ',';
        render_field(out, relation.schema[c].name);
    }
    out << '\n';
    for (const auto& t : relation.tuples) {
        for (size_t c = 0; c < t.cells.size(); ++c) {
            if (c) out << ',';
            const Cell& cell = t.cells[c];
            if (std::holds_alternative<std::monostate>(cell)) continue;
            if (const auto* nc = std::get_if<NumericCell>(&cell))
                out << format_numeric(nc->scaled, relation.schema[c].scale);
            else if (const auto* dc = std::get_if<DateTimeCell>(&cell))
                out << format_datetime(*dc);
            else
                render_field(out, std::get<std::string>(cell));
        }
        out << '\n';
    }
}

void write_csv(const std::string& path, const Relation& relation) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write table file: " + path);
    render_csv(out, relation);
    out.flush();
    if (!out) throw IoError("write failed: " + path);
}

}  // namespace tabmark
