#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cotilt/prime_set.hpp"
#include "cotilt/ring.hpp"

namespace cotilt {

/// A tuple (P_0, ..., P_{n-1}) of subsets of Spec R. Whether it is a
/// characteristic sequence is decided by validate_sequence; construction
/// only checks that every level lives over `ring`.
class CharacteristicSequence {
 public:
  CharacteristicSequence(Ring ring, std::vector<PrimeSet> levels);

  const Ring& ring() const { return ring_; }
  std::size_t length() const { return levels_.size(); }
  const std::vector<PrimeSet>& levels() const { return levels_; }
  const PrimeSet& level(std::size_t i) const { return levels_.at(i); }

  std::string format() const;

  friend bool operator==(const CharacteristicSequence&, const CharacteristicSequence&) = default;

 private:
  Ring ring_;
  std::vector<PrimeSet> levels_;
};

/// Ass Ω^{-i}(R) for the minimal injective coresolution of R.
///
/// Z and F_q[x]: {(0)} at i = 0, every maximal ideal at i = 1, empty beyond.
/// Z/n: every prime at i = 0, empty beyond. Synthetic: the declared data, or
/// the primes of height exactly i under gorenstein_heights.
PrimeSet bass_assassinators(const Ring& ring, std::size_t i);

/// The three defining clauses, numbered as usually cited.
enum class Clause { LowerSet = 1, Nested = 2, Bass = 3 };

std::string clause_name(Clause c);

struct SequenceViolation {
  Clause clause;
  std::size_t index;
  /// A prime demonstrating the failure: the missing prime for (i) and (iii),
  /// a prime of P_i outside P_{i+1} for (ii).
  std::optional<PrimeIdeal> witness;
  /// For (i): the member of P_i lying above the missing witness.
  std::optional<PrimeIdeal> above;

  friend bool operator==(const SequenceViolation&, const SequenceViolation&) = default;
};

struct SequenceVerdict {
  std::vector<SequenceViolation> violations;
  /// Observations that are not violations, e.g. an empty level.
  std::vector<std::string> notes;

  bool ok() const { return violations.empty(); }
};

/// Checks clauses (i)-(iii). Every violated clause is reported with its index.
SequenceVerdict validate_sequence(const CharacteristicSequence& seq);

/// Clause check over explicit levels. When `within` is given, Bass data is
/// intersected with it (the localized Bass data at a maximal ideal).
SequenceVerdict validate_levels(const Ring& ring, std::span<const PrimeSet> levels,
                                const std::optional<PrimeSet>& within = std::nullopt);

std::string format_violation(const Ring& ring, const SequenceViolation& v);

}  // namespace cotilt
