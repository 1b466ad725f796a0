#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cotilt/poset.hpp"
#include "cotilt/prime.hpp"

namespace cotilt {

enum class RingKind { Integers, PolyOverPrimeField, IntegerQuotient, Synthetic };

/// One of the supported commutative noetherian rings, together with the
/// model of its prime spectrum.
///
/// Integers and F_q[x] are the dimension-one domains: Spec is (0) plus
/// infinitely many maximal ideals. Z/n has the finite discrete spectrum of
/// primes dividing n. Synthetic rings are given by an explicit poset.
/// Values are immutable and cheap to copy.
class Ring {
 public:
  static Ring integers();
  static Ring poly_over_prime_field(std::uint64_t q);
  static Ring integer_quotient(std::uint64_t n);
  static Ring synthetic(SpectrumPoset spectrum);

  RingKind kind() const { return kind_; }
  /// q for F_q[x], n for Z/n, 0 otherwise.
  std::uint64_t parameter() const { return parameter_; }
  bool is_dimension_one() const {
    return kind_ == RingKind::Integers || kind_ == RingKind::PolyOverPrimeField;
  }
  bool has_finite_spectrum() const { return !is_dimension_one(); }
  const SpectrumPoset& poset() const;

  /// Throws InputError unless p is a prime of this ring.
  void check_prime(const PrimeIdeal& p) const;
  bool is_maximal(const PrimeIdeal& p) const;
  void check_maximal(const PrimeIdeal& m) const;

  /// Every prime, ascending. Only for finite spectra.
  std::vector<PrimeIdeal> spectrum() const;
  /// Every maximal ideal, ascending. Only for finite spectra.
  std::vector<PrimeIdeal> maximal_ideals() const;
  /// Smallest maximal ideal not in `excluded` (dimension-one rings only).
  PrimeIdeal maximal_outside(std::span<const PrimeIdeal> excluded) const;
  /// The first `count` maximal ideals in ascending order (dimension-one rings).
  std::vector<PrimeIdeal> first_maximals(std::size_t count) const;

  std::string format(const PrimeIdeal& p) const;
  /// Accepts "(0)", "0", "(7)", "7", "(x^2+x+1)", or a synthetic label.
  PrimeIdeal parse_prime(std::string_view text) const;

  std::string describe() const;

  friend bool operator==(const Ring& a, const Ring& b);

 private:
  Ring() = default;

  RingKind kind_ = RingKind::Integers;
  std::uint64_t parameter_ = 0;
  std::vector<std::uint64_t> quotient_primes_;
  std::shared_ptr<const SpectrumPoset> poset_;
};

}  // namespace cotilt
