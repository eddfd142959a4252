#include "run_config.hpp"

#include <cstdlib>
#include <fstream>

#include "tabmark/errors.hpp"

namespace tabmark {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return {};
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    size_t at = 0;
    while (at <= s.size()) {
        size_t next = s.find(sep, at);
        if (next == std::string::npos) next = s.size();
        out.push_back(trim(s.substr(at, next - at)));
        at = next + 1;
    }
    return out;
}

int64_t parse_integer(const std::string& key, const std::string& value, int64_t lo, int64_t hi) {
    size_t used = 0;
    int64_t v = 0;
    try {
        v = std::stoll(value, &used);
    } catch (const std::exception&) {
        throw ConfigError("config key " + key + ": not an integer: '" + value + "'");
    }
    if (used != value.size())
        throw ConfigError("config key " + key + ": not an integer: '" + value + "'");
    if (v < lo || v > hi) throw ConfigError("config key " + key + ": value out of range");
    return v;
}

uint64_t parse_u64(const std::string& key, const std::string& value) {
    size_t used = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(value, &used);
    } catch (const std::exception&) {
        throw ConfigError("config key " + key + ": not an unsigned integer: '" + value + "'");
    }
    if (used != value.size() || value.empty() || value[0] == '-')
        throw ConfigError("config key " + key + ": not an unsigned integer: '" + value + "'");
    return v;
}

double parse_number(const std::string& key, const std::string& value) {
    size_t used = 0;
    double v = 0;
    try {
        v = std::stod(value, &used);
    } catch (const std::exception&) {
        throw ConfigError("config key " + key + ": not a number: '" + value + "'");
    }
    if (used != value.size())
        throw ConfigError("config key " + key + ": not a number: '" + value + "'");
    return v;
}

bool parse_bool(const std::string& key, const std::string& value) {
    if (value == "true" || value == "1" || value == "yes" || value == "on") return true;
    if (value == "false" || value == "0" || value == "no" || value == "off") return false;
    throw ConfigError("config key " + key + ": not a boolean: '" + value + "'");
}

// "price:2, qty" -> {(price, 2), (qty, 0)}
std::vector<std::pair<std::string, int>> parse_numeric_columns(const std::string& value) {
    std::vector<std::pair<std::string, int>> out;
    for (const std::string& item : split(value, ',')) {
        if (item.empty()) continue;
        size_t colon = item.find(':');
        if (colon == std::string::npos) {
            out.emplace_back(item, 0);
            continue;
        }
        std::string name = trim(item.substr(0, colon));
        std::string scale = trim(item.substr(colon + 1));
        if (name.empty() || scale.empty())
            throw ConfigError("config key numeric_columns: malformed entry '" + item + "'");
        out.emplace_back(name,
                         static_cast<int>(parse_integer("numeric_columns", scale, 0, 18)));
    }
    return out;
}

void apply_pair(RunConfig& config, const std::string& key, const std::string& value) {
    if (key == "pk_column") {
        config.mark.pk_column = value;
    } else if (key == "numeric_columns") {
        config.mark.numeric_columns = parse_numeric_columns(value);
    } else if (key == "datetime_columns") {
        config.mark.datetime_columns.clear();
        for (const std::string& name : split(value, ','))
            if (!name.empty()) config.mark.datetime_columns.push_back(name);
    } else if (key == "k1") {
        config.keys.k1 = static_cast<int>(parse_integer(key, value, INT32_MIN, INT32_MAX));
        config.keys_present = true;
    } else if (key == "k2") {
        config.keys.k2 = static_cast<int>(parse_integer(key, value, INT32_MIN, INT32_MAX));
        config.keys_present = true;
    } else if (key == "threshold") {
        config.threshold = parse_number(key, value);
        if (config.threshold < 0.0 || config.threshold > 100.0)
            throw ConfigError("config key threshold: expected a percentage in [0, 100]");
    } else if (key == "auto_pk") {
        config.auto_pk = parse_bool(key, value);
    } else if (key == "seed") {
        config.seed = parse_u64(key, value);
        config.seed_present = true;
    } else if (key == "wm_width") {
        config.wm_width = static_cast<size_t>(parse_integer(key, value, 1, 1 << 16));
    } else if (key == "wm_height") {
        config.wm_height = static_cast<size_t>(parse_integer(key, value, 1, 1 << 16));
    } else {
        throw ConfigError("unknown config key: " + key);
    }
}

}  // namespace

RunConfig load_run_config(const std::string& path) {
    RunConfig config;
    if (path.empty()) return config;
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config file: " + path);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(path + ":" + std::to_string(lineno) + ": expected key = value");
        apply_pair(config, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    return config;
}

void apply_env_keys(RunConfig& config) {
    if (const char* k1 = std::getenv("TABMARK_K1")) {
        config.keys.k1 = static_cast<int>(parse_integer("TABMARK_K1", k1, INT32_MIN, INT32_MAX));
        config.keys_present = true;
    }
    if (const char* k2 = std::getenv("TABMARK_K2")) {
        config.keys.k2 = static_cast<int>(parse_integer("TABMARK_K2", k2, INT32_MIN, INT32_MAX));
        config.keys_present = true;
    }
}

}  // namespace tabmark
