#pragma once

#include <cstdint>
#include <vector>

#include "tabmark/model.hpp"

namespace tabmark {

// Per-position extraction outcome. Decode paths may yield `erased` (no
// carrier, key-verification failure, or tie vote); encode paths never do.
enum class ChannelBit : uint8_t { zero = 0, one = 1, erased = 2 };

inline ChannelBit to_channel_bit(int bit) {
    return bit ? ChannelBit::one : ChannelBit::zero;
}

// Rows of 0/1 pixels; pixel 1 corresponds to watermark bit 1.
using BitRaster = std::vector<std::vector<uint8_t>>;

WatermarkBits image_to_bits(const BitRaster& image);
BitRaster bits_to_image(const WatermarkBits& wm);

// Watermark bit held by a selected tuple: (pk_int / k1) mod L. A function
// of the key alone, so adding or deleting other tuples never shifts any
// tuple's assigned bit.
inline size_t bit_index(uint64_t pk_int, int k1, size_t L) {
    return static_cast<size_t>((pk_int / static_cast<uint64_t>(k1)) % L);
}

// Seconds value carrying one watermark bit: k2 occupies the high four
// bits, the bit is the LSB. Always lands in [0, 31], a valid SS value.
inline int encode_ss(int bit, int k2) { return k2 * 2 + bit; }

// Inverse of encode_ss. A seconds value whose high bits differ from k2
// carries no information for this key and decodes to `erased`.
inline ChannelBit decode_ss(int ss, int k2) {
    if (ss / 2 != k2) return ChannelBit::erased;
    return to_channel_bit(ss % 2);
}

// LSB of the magnitude of a scaled decimal. set_lsb_scaled changes the
// value by at most one unit in the last place and preserves sign.
int get_lsb_scaled(int64_t scaled);
int64_t set_lsb_scaled(int64_t scaled, int bit);

// Same operations over plain doubles at a given decimal scale; the value
// is rounded to the scale first. Throws on non-finite input.
double set_lsb(double value, int scale, int bit);
int get_lsb(double value, int scale);

}  // namespace tabmark
