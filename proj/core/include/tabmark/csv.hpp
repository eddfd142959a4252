#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "tabmark/model.hpp"

namespace tabmark {

// RFC 4180 with a mandatory header row. Fields are quoted on output only
// when they contain a comma, quote, or line break; embedded quotes double.

// Raw rows, header included as row 0.
std::vector<std::vector<std::string>> parse_csv(std::istream& in);

// Types only the columns named by the config; everything else stays a
// string. The primary key column stays a raw string too (pk_to_int maps
// it on demand). Empty fields become NULL in typed columns.
Relation read_csv(const std::string& path, const MarkConfig& config);
Relation parse_relation(std::istream& in, const MarkConfig& config);

void render_csv(std::ostream& out, const Relation& relation);
void write_csv(const std::string& path, const Relation& relation);

// "-12.340" with scale 3 -> -12340. Rejects more than `scale` fraction
// digits, non-numeric text, and values that overflow int64 after scaling.
int64_t parse_numeric(const std::string& text, int scale);
std::string format_numeric(int64_t scaled, int scale);

// Strict "YYYY-MM-DD HH:MM:SS".
DateTimeCell parse_datetime(const std::string& text);
std::string format_datetime(const DateTimeCell& value);

}  // namespace tabmark
