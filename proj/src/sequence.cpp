#include "cotilt/sequence.hpp"

#include <bit>

#include "cotilt/error.hpp"
#include "cotilt/spectrum.hpp"

namespace cotilt {

CharacteristicSequence::CharacteristicSequence(Ring ring, std::vector<PrimeSet> levels)
    : ring_(std::move(ring)), levels_(std::move(levels)) {
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    if (!(levels_[i].ring() == ring_)) {
      throw InputError("level " + std::to_string(i) + " is not a prime set over " + ring_.describe());
    }
  }
}

std::string CharacteristicSequence::format() const {
  std::string out = "(";
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    if (i > 0) out += ", ";
    out += levels_[i].format();
  }
  return out + ")";
}

PrimeSet bass_assassinators(const Ring& ring, std::size_t i) {
  switch (ring.kind()) {
    case RingKind::Integers:
    case RingKind::PolyOverPrimeField:
      if (i == 0) return PrimeSet::of(ring, {PrimeIdeal::zero()});
      if (i == 1) return PrimeSet::all_maximal(ring);
      return PrimeSet::empty(ring);
    case RingKind::IntegerQuotient:
      return i == 0 ? PrimeSet::all(ring) : PrimeSet::empty(ring);
    case RingKind::Synthetic:
      return PrimeSet::from_mask(ring, ring.poset().bass(i));
  }
  return PrimeSet::empty(ring);
}

std::string clause_name(Clause c) {
  switch (c) {
    case Clause::LowerSet:
      return "(i) lower set";
    case Clause::Nested:
      return "(ii) nesting";
    case Clause::Bass:
      return "(iii) Bass containment";
  }
  return "?";
}

namespace {

// For a set that is not lower: a missing prime together with a member above it.
std::pair<PrimeIdeal, PrimeIdeal> lower_set_witness(const Ring& ring, const PrimeSet& s) {
  if (ring.is_dimension_one()) {
    const auto& d = s.dim_one_rep();
    PrimeSet maximal_part = PrimeSet::dim_one(ring, false, d.cofinite, d.maximals);
    return {PrimeIdeal::zero(), *maximal_part.any_element()};
  }
  const SpectrumPoset& poset = ring.poset();
  const NodeMask mask = s.mask();
  for (NodeMask rest = mask; rest != 0; rest &= rest - 1) {
    const auto v = static_cast<std::size_t>(std::countr_zero(rest));
    const NodeMask missing = poset.below(v) & ~mask;
    if (missing != 0) {
      return {PrimeIdeal::node(static_cast<std::size_t>(std::countr_zero(missing))), PrimeIdeal::node(v)};
    }
  }
  throw std::logic_error("lower_set_witness called on a lower set");
}

}  // namespace

SequenceVerdict validate_levels(const Ring& ring, std::span<const PrimeSet> levels,
                                const std::optional<PrimeSet>& within) {
  SequenceVerdict verdict;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const PrimeSet& level = levels[i];
    if (!(level.ring() == ring)) {
      throw InputError("level " + std::to_string(i) + " is not a prime set over " + ring.describe());
    }
    if (level.is_empty()) {
      verdict.notes.push_back("level " + std::to_string(i) + " is empty");
    }
    if (!is_lower_set(ring, level)) {
      auto [missing, above] = lower_set_witness(ring, level);
      verdict.violations.push_back({Clause::LowerSet, i, missing, above});
    }
    if (i + 1 < levels.size()) {
      const PrimeSet escaped = level.minus(levels[i + 1]);
      if (!escaped.is_empty()) {
        verdict.violations.push_back({Clause::Nested, i, escaped.any_element(), std::nullopt});
      }
    }
    PrimeSet required = bass_assassinators(ring, i);
    if (within) required = required.intersect(*within);
    const PrimeSet missing = required.minus(level);
    if (!missing.is_empty()) {
      verdict.violations.push_back({Clause::Bass, i, missing.any_element(), std::nullopt});
    }
  }
  return verdict;
}

SequenceVerdict validate_sequence(const CharacteristicSequence& seq) {
  return validate_levels(seq.ring(), seq.levels());
}

std::string format_violation(const Ring& ring, const SequenceViolation& v) {
  std::string out = "violation " + clause_name(v.clause) + " at index " + std::to_string(v.index);
  if (v.witness) {
    switch (v.clause) {
      case Clause::LowerSet:
        out += ": " + ring.format(*v.witness) + " is missing below " + ring.format(*v.above);
        break;
      case Clause::Nested:
        out += ": " + ring.format(*v.witness) + " is in P_" + std::to_string(v.index) + " but not in P_" +
               std::to_string(v.index + 1);
        break;
      case Clause::Bass:
        out += ": Bass prime " + ring.format(*v.witness) + " is missing";
        break;
    }
  }
  return out;
}

}  // namespace cotilt
