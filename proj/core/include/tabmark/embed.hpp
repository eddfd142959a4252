#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "tabmark/model.hpp"

namespace tabmark {

// Carrier accounting from an embedding run. A carrier is one (tuple, cell)
// position that holds a copy of one watermark bit; modified_cells counts
// only cells whose stored value actually changed.
struct EmbedStats {
    std::vector<uint64_t> ch1_carriers;  // per watermark bit, numeric channel
    std::vector<uint64_t> ch2_carriers;  // per watermark bit, seconds channel
    uint64_t marked_tuples = 0;          // tuples selected by k1
    uint64_t modified_cells = 0;

    EmbedStats() = default;
    explicit EmbedStats(size_t L) : ch1_carriers(L, 0), ch2_carriers(L, 0) {}

    // Watermark bit indices with no carrier in either channel. The owner
    // may accept partial coverage, so this is a warning, not an error.
    std::vector<size_t> zero_carrier_bits() const;

    // Both phases select the same tuples, so marked_tuples merges by max.
    void merge(const EmbedStats& other);
};

// Phase 1: for every tuple selected by k1, set the LSB of each configured
// numeric cell to the tuple's watermark bit. NULL cells are skipped; all
// other cells stay byte-identical.
std::pair<Relation, EmbedStats> embed_phase1(const Relation& relation, const SecretKeys& keys,
                                             const WatermarkBits& wm, const MarkConfig& config);

// Phase 2: for every selected tuple and each configured datetime cell
// whose minutes field passes mm mod k1 = 0, replace the seconds field with
// encode_ss(bit, k2). Hours and minutes are never modified.
std::pair<Relation, EmbedStats> embed_phase2(const Relation& relation, const SecretKeys& keys,
                                             const WatermarkBits& wm, const MarkConfig& config);

// Phase 1 then phase 2 over the enabled channels, stats merged.
std::pair<Relation, EmbedStats> embed(const Relation& relation, const SecretKeys& keys,
                                      const WatermarkBits& wm, const MarkConfig& config);

}  // namespace tabmark
