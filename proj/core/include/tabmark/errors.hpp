#pragma once

#include <stdexcept>
#include <string>

namespace tabmark {

// Error categories map one-to-one onto tool exit codes:
// ConfigError -> 2, IoError -> 3, SchemaError -> 4.

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

struct IoError : std::runtime_error {
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

struct SchemaError : std::runtime_error {
    explicit SchemaError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace tabmark
