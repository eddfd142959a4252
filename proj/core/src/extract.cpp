#include "tabmark/extract.hpp"

#include <stdexcept>

#include "tabmark/errors.hpp"

namespace tabmark {

namespace {

double coverage(const std::vector<ChannelBit>& wm) {
    if (wm.empty()) return 0.0;
    size_t readable = 0;
    for (ChannelBit b : wm)
        if (b != ChannelBit::erased) readable++;
    return 100.0 * static_cast<double>(readable) / static_cast<double>(wm.size());
}

std::vector<ChannelBit> majorities(const std::vector<Tally>& tallies) {
    std::vector<ChannelBit> out(tallies.size());
    for (size_t b = 0; b < tallies.size(); ++b) out[b] = tallies[b].majority();
    return out;
}

}  // namespace

double RecoveryReport::ch1_coverage() const { return coverage(wm1); }
double RecoveryReport::ch2_coverage() const { return coverage(wm2); }

std::vector<ChannelBit> extract_phase1(const Relation& relation, const SecretKeys& keys, size_t L,
                                       const MarkConfig& config) {
    keys.validate();
    if (L == 0) throw std::invalid_argument("watermark length is zero");
    std::vector<Tally> tallies(L);
    if (config.numeric_columns.empty()) return majorities(tallies);
    const auto columns = resolve_numeric_columns(relation, config);

    // Attacked tables may hold NULL or non-numeric junk; such cells simply
    // cast no vote.
    for (const Tuple& t : relation.tuples) {
        const std::string* pk = relation.pk_of(t);
        if (!pk) continue;
        uint64_t pk_int = pk_to_int(*pk);
        if (!is_selected(pk_int, keys.k1)) continue;
        const size_t b = bit_index(pk_int, keys.k1, L);
        for (size_t c : columns) {
            const auto* nc = std::get_if<NumericCell>(&t.cells[c]);
            if (!nc) continue;
            tallies[b].add(get_lsb_scaled(nc->scaled));
        }
    }
    return majorities(tallies);
}

std::vector<ChannelBit> extract_phase2(const Relation& relation, const SecretKeys& keys, size_t L,
                                       const MarkConfig& config) {
    keys.validate();
    if (L == 0) throw std::invalid_argument("watermark length is zero");
    std::vector<Tally> tallies(L);
    if (config.datetime_columns.empty()) return majorities(tallies);
    const auto columns = resolve_datetime_columns(relation, config);

    for (const Tuple& t : relation.tuples) {
        const std::string* pk = relation.pk_of(t);
        if (!pk) continue;
        uint64_t pk_int = pk_to_int(*pk);
        if (!is_selected(pk_int, keys.k1)) continue;
        const size_t b = bit_index(pk_int, keys.k1, L);
        for (size_t c : columns) {
            const auto* dc = std::get_if<DateTimeCell>(&t.cells[c]);
            if (!dc) continue;
            if (dc->time.mm % keys.k1 != 0) continue;
            ChannelBit vote = decode_ss(dc->time.ss, keys.k2);
            if (vote == ChannelBit::erased) continue;
            tallies[b].add(vote == ChannelBit::one ? 1 : 0);
        }
    }
    return majorities(tallies);
}

RecoveryReport fuse_and_match(const WatermarkBits& original, std::vector<ChannelBit> wm1,
                              std::vector<ChannelBit> wm2) {
    const size_t L = original.size();
    if (wm1.size() != L || wm2.size() != L)
        throw std::invalid_argument("channel length does not match watermark length");
    RecoveryReport report;
    report.L = L;
    report.wm1 = std::move(wm1);
    report.wm2 = std::move(wm2);
    report.recovered = recover_bits(report.wm1, report.wm2);
    report.total_count = L;
    for (size_t b = 0; b < L; ++b) {
        const ChannelBit truth = to_channel_bit(original.bits[b]);
        if (report.wm1[b] == truth || report.wm2[b] == truth) report.match_count++;
    }
    report.rate = L == 0 ? 0.0 : 100.0 * static_cast<double>(report.match_count) / static_cast<double>(L);
    return report;
}

std::vector<uint8_t> recover_bits(const std::vector<ChannelBit>& wm1,
                                  const std::vector<ChannelBit>& wm2) {
    if (wm1.size() != wm2.size()) throw std::invalid_argument("channel length mismatch");
    std::vector<uint8_t> out(wm1.size(), 0);
    for (size_t b = 0; b < wm1.size(); ++b) {
        // Channel 2 is key-verified, so it wins when readable.
        if (wm2[b] != ChannelBit::erased)
            out[b] = wm2[b] == ChannelBit::one ? 1 : 0;
        else if (wm1[b] != ChannelBit::erased)
            out[b] = wm1[b] == ChannelBit::one ? 1 : 0;
    }
    return out;
}

RecoveryReport recover(const Relation& relation, const SecretKeys& keys,
                       const WatermarkBits& original, const MarkConfig& config) {
    config.validate();
    const size_t L = original.size();
    if (L == 0) throw std::invalid_argument("empty watermark");
    auto wm1 = extract_phase1(relation, keys, L, config);
    auto wm2 = extract_phase2(relation, keys, L, config);
    return fuse_and_match(original, std::move(wm1), std::move(wm2));
}

}  // namespace tabmark
