#include "cotilt/family.hpp"

#include <algorithm>
#include <stdexcept>

#include "cotilt/error.hpp"
#include "cotilt/spectrum.hpp"

namespace cotilt {

LocalSequence::LocalSequence(Ring ring, PrimeIdeal at, std::vector<PrimeSet> levels)
    : ring_(std::move(ring)), at_(std::move(at)), levels_(std::move(levels)) {
  const PrimeSet down = primes_under(ring_, at_);
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    if (!(levels_[i].ring() == ring_)) {
      throw InputError("local level " + std::to_string(i) + " is not a prime set over " + ring_.describe());
    }
    const PrimeSet outside = levels_[i].minus(down);
    if (!outside.is_empty()) {
      throw InputError("local level " + std::to_string(i) + " at " + ring_.format(at_) + " contains " +
                       ring_.format(*outside.any_element()) + ", which is not below it");
    }
  }
}

std::string LocalSequence::format() const {
  std::string out = ring_.format(at_) + ": (";
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    if (i > 0) out += ", ";
    out += levels_[i].format();
  }
  return out + ")";
}

SequenceVerdict validate_local_sequence(const LocalSequence& local) {
  return validate_levels(local.ring(), local.levels(), primes_under(local.ring(), local.at()));
}

// ---------------------------------------------------------------------------

CompatibleFamily::CompatibleFamily(Ring ring, std::size_t length,
                                   std::optional<std::vector<LocalPattern>> default_pattern,
                                   std::vector<LocalSequence> exceptions)
    : ring_(std::move(ring)), length_(length), default_(std::move(default_pattern)) {
  if (default_) {
    if (ring_.kind() == RingKind::Synthetic) {
      throw InputError("a default pattern is only meaningful over Z, F_q[x] and Z/n");
    }
    if (default_->size() != length_) {
      throw InputError("default pattern has " + std::to_string(default_->size()) + " levels, expected " +
                       std::to_string(length_));
    }
    if (ring_.kind() == RingKind::IntegerQuotient) {
      for (const auto& p : *default_) {
        if (p.zero) throw InputError("Z/n has no zero prime; default pattern may not contain \"zero\"");
      }
    }
  } else if (ring_.is_dimension_one()) {
    if (length_ != 0) throw InputError("a family over " + ring_.describe() + " needs a default pattern");
    default_.emplace();
  }

  for (auto& local : exceptions) {
    if (!(local.ring() == ring_)) throw InputError("exception at " + ring_.format(local.at()) + " is over another ring");
    if (local.length() != length_) {
      throw InputError("exception at " + ring_.format(local.at()) + " has length " + std::to_string(local.length()) +
                       ", expected " + std::to_string(length_));
    }
    PrimeIdeal key = local.at();
    if (!exceptions_.emplace(key, std::move(local)).second) {
      throw InputError("maximal ideal " + ring_.format(key) + " appears twice");
    }
  }

  if (ring_.has_finite_spectrum()) {
    // Finite spectra are stored explicitly so that equality is canonical.
    for (const auto& m : ring_.maximal_ideals()) {
      if (exceptions_.count(m) != 0) continue;
      if (default_) {
        exceptions_.emplace(m, instantiate_default(m));
      } else if (length_ == 0) {
        exceptions_.emplace(m, LocalSequence(ring_, m, {}));
      } else {
        throw InputError("family assigns nothing to maximal ideal " + ring_.format(m));
      }
    }
    default_.reset();
  } else {
    std::erase_if(exceptions_, [&](const auto& entry) { return entry.second == instantiate_default(entry.first); });
  }
}

LocalSequence CompatibleFamily::instantiate_default(const PrimeIdeal& m) const {
  std::vector<PrimeSet> levels;
  for (const auto& pattern : *default_) {
    std::vector<PrimeIdeal> members;
    if (pattern.zero) members.push_back(PrimeIdeal::zero());
    if (pattern.max) members.push_back(m);
    levels.push_back(PrimeSet::of(ring_, members));
  }
  return LocalSequence(ring_, m, std::move(levels));
}

LocalSequence CompatibleFamily::at(const PrimeIdeal& m) const {
  ring_.check_maximal(m);
  if (const auto it = exceptions_.find(m); it != exceptions_.end()) return it->second;
  if (!default_) throw InputError("family assigns nothing to " + ring_.format(m));
  return instantiate_default(m);
}

std::vector<PrimeIdeal> CompatibleFamily::representatives() const {
  if (ring_.has_finite_spectrum()) return ring_.maximal_ideals();
  std::vector<PrimeIdeal> reps;
  for (const auto& [m, local] : exceptions_) reps.push_back(m);
  const std::vector<PrimeIdeal> keys = reps;
  const PrimeIdeal first = ring_.maximal_outside(keys);
  std::vector<PrimeIdeal> keys_and_first = keys;
  keys_and_first.push_back(first);
  reps.push_back(first);
  reps.push_back(ring_.maximal_outside(keys_and_first));
  std::sort(reps.begin(), reps.end());
  return reps;
}

// ---------------------------------------------------------------------------

namespace {

void require_characteristic(const CharacteristicSequence& seq) {
  SequenceVerdict verdict = validate_sequence(seq);
  if (!verdict.ok()) {
    std::string message =
        "input is not a characteristic sequence: " + format_violation(seq.ring(), verdict.violations.front());
    throw InvalidSequenceError(std::move(message), std::move(verdict));
  }
}

LocalSequence localize_unchecked(const CharacteristicSequence& seq, const PrimeIdeal& m) {
  const PrimeSet down = primes_under(seq.ring(), m);
  std::vector<PrimeSet> levels;
  levels.reserve(seq.length());
  for (const auto& level : seq.levels()) levels.push_back(level.intersect(down));
  return LocalSequence(seq.ring(), m, std::move(levels));
}

}  // namespace

LocalSequence localize_sequence(const CharacteristicSequence& seq, const PrimeIdeal& m) {
  seq.ring().check_maximal(m);
  require_characteristic(seq);
  return localize_unchecked(seq, m);
}

CompatibleFamily localization_family(const CharacteristicSequence& seq) {
  require_characteristic(seq);
  const Ring& ring = seq.ring();
  std::vector<LocalSequence> locals;
  if (ring.has_finite_spectrum()) {
    for (const auto& m : ring.maximal_ideals()) locals.push_back(localize_unchecked(seq, m));
    return CompatibleFamily(ring, seq.length(), std::nullopt, std::move(locals));
  }
  std::vector<LocalPattern> pattern;
  std::vector<PrimeIdeal> deviating;
  for (const auto& level : seq.levels()) {
    const auto& d = level.dim_one_rep();
    pattern.push_back({d.zero, d.cofinite});
    deviating.insert(deviating.end(), d.maximals.begin(), d.maximals.end());
  }
  std::sort(deviating.begin(), deviating.end());
  deviating.erase(std::unique(deviating.begin(), deviating.end()), deviating.end());
  for (const auto& m : deviating) locals.push_back(localize_unchecked(seq, m));
  return CompatibleFamily(ring, seq.length(), std::move(pattern), std::move(locals));
}

FamilyVerdict check_compatibility(const CompatibleFamily& family) {
  const Ring& ring = family.ring();
  FamilyVerdict verdict;
  const std::vector<PrimeIdeal> reps = family.representatives();
  std::vector<LocalSequence> locals;
  std::vector<PrimeSet> downs;
  bool default_checked = false;
  for (const auto& m : reps) {
    locals.push_back(family.at(m));
    downs.push_back(primes_under(ring, m));
    const bool is_default = ring.is_dimension_one() && family.exceptions().count(m) == 0;
    if (is_default && default_checked) continue;
    default_checked = default_checked || is_default;
    for (auto& v : validate_local_sequence(locals.back()).violations) {
      verdict.local.push_back({m, std::move(v)});
    }
  }
  for (std::size_t a = 0; a < reps.size(); ++a) {
    for (std::size_t b = a + 1; b < reps.size(); ++b) {
      const PrimeSet shared = downs[a].intersect(downs[b]);
      if (shared.is_empty()) continue;
      for (std::size_t i = 0; i < family.length(); ++i) {
        const PrimeSet left = locals[a].level(i).intersect(shared);
        const PrimeSet right = locals[b].level(i).intersect(shared);
        if (left == right) continue;
        const PrimeSet differ = left.minus(right).union_with(right.minus(left));
        verdict.pairs.push_back({i, reps[a], reps[b], *differ.any_element()});
      }
    }
  }
  return verdict;
}

CharacteristicSequence glue_family(const CompatibleFamily& family) {
  FamilyVerdict verdict = check_compatibility(family);
  if (!verdict.ok()) {
    std::string what = "family is not compatible";
    if (!verdict.pairs.empty()) {
      what += ": " + format_compatibility_violation(family.ring(), verdict.pairs.front());
    } else {
      const auto& lv = verdict.local.front();
      what += ": at " + family.ring().format(lv.at) + ", " + format_violation(family.ring(), lv.violation);
    }
    throw IncompatibleFamilyError(what, std::move(verdict));
  }
  const Ring& ring = family.ring();
  std::vector<PrimeSet> levels;
  for (std::size_t i = 0; i < family.length(); ++i) {
    PrimeSet glued = PrimeSet::empty(ring);
    if (ring.is_dimension_one()) {
      const LocalPattern& pattern = (*family.default_pattern())[i];
      std::vector<PrimeIdeal> keys;
      for (const auto& [m, local] : family.exceptions()) keys.push_back(m);
      // Default maximals contribute (0) and themselves per the pattern.
      glued = PrimeSet::dim_one(ring, pattern.zero, pattern.max, pattern.max ? keys : std::vector<PrimeIdeal>{});
    }
    for (const auto& [m, local] : family.exceptions()) glued = glued.union_with(local.level(i));
    levels.push_back(std::move(glued));
  }
  CharacteristicSequence result(ring, std::move(levels));
  const SequenceVerdict check = validate_sequence(result);
  if (!check.ok()) {
    throw std::logic_error("glued sequence is not characteristic: " + format_violation(ring, check.violations.front()));
  }
  return result;
}

bool sequences_equal(const CharacteristicSequence& a, const CharacteristicSequence& b) {
  return a.ring() == b.ring() && a.length() == b.length() && a.levels() == b.levels();
}

bool families_equivalent(const CompatibleFamily& a, const CompatibleFamily& b) {
  // Both encodings are canonical (redundant exceptions dropped, finite
  // spectra listed in full), so class-wise comparison is plain equality.
  return a.ring() == b.ring() && a.length() == b.length() && a == b;
}

std::string format_compatibility_violation(const Ring& ring, const CompatibilityViolation& v) {
  return "levels " + std::to_string(v.index) + " at " + ring.format(v.m) + " and " + ring.format(v.m_prime) +
         " disagree on shared prime " + ring.format(v.witness);
}

}  // namespace cotilt
