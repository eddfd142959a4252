#pragma once

#include <cstdint>
#include <string>

#include "tabmark/model.hpp"

namespace tabmark {

enum class AttackKind { add, del, alter, select };

// What ALTER perturbs: numeric cells, time fields, or both.
enum class AlterMode { numeric, time, both };

struct AttackSpec {
    AttackKind kind = AttackKind::del;
    double fraction = 0.0;  // of the input tuple count n
    AlterMode alter_mode = AlterMode::both;
    uint64_t seed = 0;
};

// All attacks draw from SplitMix64(seed) only, so a (spec, input) pair is
// reproducible byte for byte. Count m = llround(fraction * n). Where a
// random subset of tuples is needed, the first m positions of a full
// Fisher-Yates shuffle of [0, n) are taken; survivors keep input order.
// Per-tuple perturbations are then drawn in input order, and within a
// tuple in schema column order.

// Append m fabricated tuples. Fresh primary keys continue from the
// maximum integer key plus one (skipping raw collisions); other cells are
// drawn uniformly from per-column empirical ranges of the input, text
// columns by sampling observed non-NULL values.
Relation attack_add(const Relation& relation, double fraction, uint64_t seed);

// Delete a random m-subset of tuples.
Relation attack_delete(const Relation& relation, double fraction, uint64_t seed);

// Perturb a random m-subset: numeric cells move by one unit in the last
// scaled digit (sign random), time cells get a fresh uniform seconds
// value. NULL cells are left alone.
Relation attack_alter(const Relation& relation, double fraction, AlterMode mode,
                      const MarkConfig& config, uint64_t seed);

// Keep only a random m-subset (subset attack). fraction <= 0 would yield
// an empty relation and throws ConfigError.
Relation attack_select(const Relation& relation, double fraction, uint64_t seed);

Relation apply_attack(const Relation& relation, const AttackSpec& spec, const MarkConfig& config);

const char* attack_name(AttackKind kind);
AttackKind parse_attack_kind(const std::string& name);    // throws ConfigError
AlterMode parse_alter_mode(const std::string& name);      // throws ConfigError

}  // namespace tabmark
