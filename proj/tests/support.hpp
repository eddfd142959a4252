#pragma once

#include <filesystem>
#include <initializer_list>
#include <random>
#include <sstream>
#include <string>

#include "tabmark/csv.hpp"
#include "tabmark/model.hpp"

namespace testsupport {

inline tabmark::WatermarkBits wm_from(std::initializer_list<int> bits, size_t width) {
    tabmark::WatermarkBits wm;
    wm.width = width;
    wm.height = bits.size() / width;
    for (int b : bits) wm.bits.push_back(static_cast<uint8_t>(b));
    return wm;
}

inline std::string render_to_string(const tabmark::Relation& relation) {
    std::ostringstream out;
    tabmark::render_csv(out, relation);
    return out.str();
}

inline tabmark::Relation relation_from_csv(const std::string& text,
                                           const tabmark::MarkConfig& config) {
    std::istringstream in(text);
    return tabmark::parse_relation(in, config);
}

// Scratch directory removed on scope exit.
class TempDir {
  public:
    TempDir() {
        std::random_device rd;
        path_ = std::filesystem::temp_directory_path() /
                ("tabmark_test_" + std::to_string(rd()) + std::to_string(rd()));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    std::string file(const std::string& name) const { return (path_ / name).string(); }

  private:
    std::filesystem::path path_;
};

}  // namespace testsupport
