#pragma once

#include <cstdint>
#include <vector>

#include "tabmark/codec.hpp"
#include "tabmark/model.hpp"

namespace tabmark {

// Majority-vote tally for one watermark bit position in one channel.
struct Tally {
    uint64_t zeros = 0;
    uint64_t ones = 0;

    void add(int bit) { (bit ? ones : zeros)++; }

    // Ties and empty tallies are both unreadable.
    ChannelBit majority() const {
        if (ones > zeros) return ChannelBit::one;
        if (zeros > ones) return ChannelBit::zero;
        return ChannelBit::erased;
    }
};

struct RecoveryReport {
    size_t L = 0;
    std::vector<ChannelBit> wm1;        // numeric channel after voting
    std::vector<ChannelBit> wm2;        // seconds channel after voting
    std::vector<uint8_t> recovered;     // fused bit image, erased positions -> 0
    uint64_t match_count = 0;           // positions where some channel matches
    uint64_t total_count = 0;           // == L
    double rate = 0.0;                  // match_count / total_count * 100

    // Fraction of bit positions readable (not erased) per channel.
    double ch1_coverage() const;
    double ch2_coverage() const;
};

// Blind per-bit majority vote over the numeric channel. Tuples whose
// primary key is NULL are skipped, not rejected: attacked data must
// still be scannable.
std::vector<ChannelBit> extract_phase1(const Relation& relation, const SecretKeys& keys,
                                       size_t L, const MarkConfig& config);

// Blind per-bit majority vote over the seconds channel. Only cells whose
// minutes pass the k1 gate and whose seconds decode under k2 cast votes.
std::vector<ChannelBit> extract_phase2(const Relation& relation, const SecretKeys& keys,
                                       size_t L, const MarkConfig& config);

// OR fusion: position i matches when either channel recovered the original
// bit. ERASED never matches. Throws std::invalid_argument on length
// mismatch between the original and either channel.
RecoveryReport fuse_and_match(const WatermarkBits& original, std::vector<ChannelBit> wm1,
                              std::vector<ChannelBit> wm2);

// Best-effort bit image without the original: per position take the
// seconds channel when readable (it is key-verified), else the numeric
// channel, else 0.
std::vector<uint8_t> recover_bits(const std::vector<ChannelBit>& wm1,
                                  const std::vector<ChannelBit>& wm2);

// Full pipeline: extract both enabled channels, fuse against original.
RecoveryReport recover(const Relation& relation, const SecretKeys& keys,
                       const WatermarkBits& original, const MarkConfig& config);

}  // namespace tabmark
