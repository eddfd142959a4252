#include "tabmark/codec.hpp"

#include <cmath>
#include <stdexcept>

namespace tabmark {

WatermarkBits image_to_bits(const BitRaster& image) {
    if (image.empty() || image[0].empty()) throw std::invalid_argument("empty watermark image");
    WatermarkBits wm;
    wm.height = image.size();
    wm.width = image[0].size();
    wm.bits.reserve(wm.width * wm.height);
    for (const auto& row : image) {
        if (row.size() != wm.width) throw std::invalid_argument("ragged watermark image");
        for (uint8_t px : row) {
            if (px > 1) throw std::invalid_argument("watermark pixel not 0/1");
            wm.bits.push_back(px);
        }
    }
    return wm;
}

BitRaster bits_to_image(const WatermarkBits& wm) {
    if (wm.width == 0 || wm.height == 0 || wm.bits.size() != wm.width * wm.height)
        throw std::invalid_argument("watermark dimensions do not match bit count");
    BitRaster image(wm.height, std::vector<uint8_t>(wm.width));
    for (size_t r = 0; r < wm.height; ++r)
        for (size_t c = 0; c < wm.width; ++c) image[r][c] = wm.bits[r * wm.width + c];
    return image;
}

int get_lsb_scaled(int64_t scaled) {
    uint64_t mag = scaled < 0 ? ~static_cast<uint64_t>(scaled) + 1 : static_cast<uint64_t>(scaled);
    return static_cast<int>(mag & 1);
}

int64_t set_lsb_scaled(int64_t scaled, int bit) {
    uint64_t mag = scaled < 0 ? ~static_cast<uint64_t>(scaled) + 1 : static_cast<uint64_t>(scaled);
    mag = (mag & ~1ull) | static_cast<uint64_t>(bit & 1);
    auto out = static_cast<int64_t>(mag);
    return scaled < 0 ? -out : out;
}

namespace {

double pow10d(int scale) {
    double p = 1.0;
    while (scale-- > 0) p *= 10.0;
    return p;
}

}  // namespace

double set_lsb(double value, int scale, int bit) {
    if (!std::isfinite(value)) throw std::invalid_argument("non-finite numeric value");
    double factor = pow10d(scale);
    return static_cast<double>(set_lsb_scaled(std::llround(value * factor), bit)) / factor;
}

int get_lsb(double value, int scale) {
    if (!std::isfinite(value)) throw std::invalid_argument("non-finite numeric value");
    return get_lsb_scaled(std::llround(value * pow10d(scale)));
}

}  // namespace tabmark
