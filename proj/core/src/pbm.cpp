#include "tabmark/pbm.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <string>

#include "tabmark/errors.hpp"

namespace tabmark {

namespace {

constexpr size_t max_pixels = 1u << 20;

// Advances past whitespace and '#' comments; false at end of stream.
bool skip_filler(std::istream& in) {
    int c;
    while ((c = in.peek()) != EOF) {
        if (c == '#') {
            while ((c = in.get()) != EOF && c != '\n') {
            }
            continue;
        }
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v') {
            in.get();
            continue;
        }
        return true;
    }
    return false;
}

size_t read_dimension(std::istream& in, const char* what) {
    if (!skip_filler(in)) throw IoError(std::string("pbm: missing ") + what);
    size_t value = 0;
    bool any = false;
    int c;
    while ((c = in.peek()) != EOF && c >= '0' && c <= '9') {
        value = value * 10 + static_cast<size_t>(c - '0');
        if (value > max_pixels) throw IoError(std::string("pbm: ") + what + " too large");
        in.get();
        any = true;
    }
    if (!any) throw IoError(std::string("pbm: malformed ") + what);
    return value;
}

}  // namespace

WatermarkBits parse_pbm(std::istream& in) {
    if (!skip_filler(in)) throw IoError("pbm: empty input");
    std::string magic(2, '\0');
    magic[0] = static_cast<char>(in.get());
    magic[1] = static_cast<char>(in.get());
    if (magic != "P1") throw IoError("pbm: not a plain PBM (magic '" + magic + "')");

    WatermarkBits wm;
    wm.width = read_dimension(in, "width");
    wm.height = read_dimension(in, "height");
    if (wm.width == 0 || wm.height == 0) throw IoError("pbm: zero dimension");
    if (wm.width * wm.height > max_pixels) throw IoError("pbm: image too large");

    wm.bits.reserve(wm.width * wm.height);
    while (wm.bits.size() < wm.width * wm.height) {
        if (!skip_filler(in)) throw IoError("pbm: truncated pixel data");
        int c = in.get();
        if (c != '0' && c != '1') throw IoError("pbm: invalid pixel character");
        wm.bits.push_back(static_cast<uint8_t>(c - '0'));
    }
    if (skip_filler(in)) throw IoError("pbm: trailing data after pixels");
    return wm;
}

WatermarkBits read_pbm(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open watermark file: " + path);
    try {
        return parse_pbm(in);
    } catch (const IoError& e) {
        throw IoError(path + ": " + e.what());
    }
}

void render_pbm(std::ostream& out, const WatermarkBits& wm) {
    if (wm.width == 0 || wm.height == 0 || wm.bits.size() != wm.width * wm.height)
        throw std::invalid_argument("watermark dimensions do not match bit count");
    out << "P1\n" << wm.width << ' ' << wm.height << '\n';
    for (size_t r = 0; r < wm.height; ++r) {
        for (size_t c = 0; c < wm.width; ++c) {
            if (c) out << ' ';
            out << static_cast<int>(wm.bits[r * wm.width + c]);
        }
        out << '\n';
    }
}

void write_pbm(const std::string& path, const WatermarkBits& wm) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write watermark file: " + path);
    render_pbm(out, wm);
    out.flush();
    if (!out) throw IoError("write failed: " + path);
}

}  // namespace tabmark
