#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cotilt/error.hpp"
#include "cotilt/prime.hpp"
#include "cotilt/prime_set.hpp"
#include "cotilt/ring.hpp"
#include "cotilt/sequence.hpp"

namespace cotilt {

/// A characteristic sequence of R_m, stored through hat-preimages: each
/// level is a subset of primes_under(m).
class LocalSequence {
 public:
  /// Throws InputError if m is not maximal or a level leaves primes_under(m).
  LocalSequence(Ring ring, PrimeIdeal at, std::vector<PrimeSet> levels);

  const Ring& ring() const { return ring_; }
  const PrimeIdeal& at() const { return at_; }
  std::size_t length() const { return levels_.size(); }
  const std::vector<PrimeSet>& levels() const { return levels_; }
  const PrimeSet& level(std::size_t i) const { return levels_.at(i); }

  std::string format() const;

  friend bool operator==(const LocalSequence&, const LocalSequence&) = default;

 private:
  Ring ring_;
  PrimeIdeal at_;
  std::vector<PrimeSet> levels_;
};

/// Clauses (i)-(iii) in Spec R_m; local Bass data is the global one cut down
/// to primes_under(m).
SequenceVerdict validate_local_sequence(const LocalSequence& local);

/// Membership of (0) and of m itself in one local level. This describes every
/// level over a ring whose down-sets are {(0), m} or {m}.
struct LocalPattern {
  bool zero = false;
  bool max = false;
  friend bool operator==(const LocalPattern&, const LocalPattern&) = default;
};

/// An assignment m ↦ local sequence of length n for every maximal ideal m.
///
/// For Z and F_q[x] the assignment is a default pattern plus finitely many
/// exceptions. Finite spectra list every maximal ideal as an exception and
/// carry no default. Exceptions equal to the default are dropped, so two
/// families over the same ring are equivalent iff they compare equal.
class CompatibleFamily {
 public:
  CompatibleFamily(Ring ring, std::size_t length, std::optional<std::vector<LocalPattern>> default_pattern,
                   std::vector<LocalSequence> exceptions);

  const Ring& ring() const { return ring_; }
  std::size_t length() const { return length_; }
  const std::optional<std::vector<LocalPattern>>& default_pattern() const { return default_; }
  const std::map<PrimeIdeal, LocalSequence>& exceptions() const { return exceptions_; }

  /// The local sequence assigned to maximal m.
  LocalSequence at(const PrimeIdeal& m) const;
  /// One maximal per behavior class: every exception, plus two distinct
  /// default maximals for infinite spectra; every maximal for finite spectra.
  std::vector<PrimeIdeal> representatives() const;

  friend bool operator==(const CompatibleFamily&, const CompatibleFamily&) = default;

 private:
  LocalSequence instantiate_default(const PrimeIdeal& m) const;

  Ring ring_;
  std::size_t length_;
  std::optional<std::vector<LocalPattern>> default_;
  std::map<PrimeIdeal, LocalSequence> exceptions_;
};

/// Hat-images of levels i at m and m' disagree on a prime p ⊆ m ∩ m'.
struct CompatibilityViolation {
  std::size_t index;
  PrimeIdeal m;
  PrimeIdeal m_prime;
  PrimeIdeal witness;
  friend bool operator==(const CompatibilityViolation&, const CompatibilityViolation&) = default;
};

struct LocalViolation {
  PrimeIdeal at;
  SequenceViolation violation;
};

struct FamilyVerdict {
  std::vector<LocalViolation> local;
  std::vector<CompatibilityViolation> pairs;
  bool ok() const { return local.empty() && pairs.empty(); }
};

/// Raised by operations whose input sequence is not characteristic.
class InvalidSequenceError : public PreconditionError {
 public:
  InvalidSequenceError(std::string what, SequenceVerdict verdict)
      : PreconditionError(std::move(what)), verdict_(std::move(verdict)) {}
  const SequenceVerdict& verdict() const { return verdict_; }

 private:
  SequenceVerdict verdict_;
};

/// Raised by glue_family on a family that is not compatible.
class IncompatibleFamilyError : public PreconditionError {
 public:
  IncompatibleFamilyError(std::string what, FamilyVerdict verdict)
      : PreconditionError(std::move(what)), verdict_(std::move(verdict)) {}
  const FamilyVerdict& verdict() const { return verdict_; }

 private:
  FamilyVerdict verdict_;
};

/// P_{i,m} = { p ∈ P_i | p ⊆ m } in hat-preimage encoding.
LocalSequence localize_sequence(const CharacteristicSequence& seq, const PrimeIdeal& m);

/// (localize_sequence(seq, m) | m maximal), finitely encoded.
CompatibleFamily localization_family(const CharacteristicSequence& seq);

/// Individual validity of each local sequence, then agreement of hat-images
/// on shared primes for every pair m != m'.
FamilyVerdict check_compatibility(const CompatibleFamily& family);

/// P_i = union over maximal m of hat(P_{i,m}). The result is validated before
/// it is returned; a failure there is a logic_error.
CharacteristicSequence glue_family(const CompatibleFamily& family);

bool sequences_equal(const CharacteristicSequence& a, const CharacteristicSequence& b);
bool families_equivalent(const CompatibleFamily& a, const CompatibleFamily& b);

std::string format_compatibility_violation(const Ring& ring, const CompatibilityViolation& v);

}  // namespace cotilt
