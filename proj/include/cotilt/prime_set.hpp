#pragma once

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "cotilt/poset.hpp"
#include "cotilt/prime.hpp"
#include "cotilt/ring.hpp"

namespace cotilt {

/// A finitely representable subset of Spec R.
///
/// The representation is fixed by the ring, which keeps equality syntactic:
///   - Z/n:                 a sorted finite list of primes;
///   - Z and F_q[x]:        a flag for (0) plus a finite or cofinite set of
///                          maximal ideals (every lower set has this shape);
///   - synthetic spectra:   a node bitset.
/// Binary operations throw InputError when the operands live over different
/// rings.
class PrimeSet {
 public:
  struct FiniteList {
    std::vector<PrimeIdeal> elems;
    friend bool operator==(const FiniteList&, const FiniteList&) = default;
  };
  /// `maximals` lists the members when !cofinite, the non-members otherwise.
  struct DimOne {
    bool zero = false;
    bool cofinite = false;
    std::vector<PrimeIdeal> maximals;
    friend bool operator==(const DimOne&, const DimOne&) = default;
  };
  struct Bitset {
    NodeMask mask = 0;
    friend bool operator==(const Bitset&, const Bitset&) = default;
  };
  using Rep = std::variant<FiniteList, DimOne, Bitset>;

  static PrimeSet empty(const Ring& ring);
  static PrimeSet all(const Ring& ring);
  /// The finite set of the given primes; each is checked against the ring.
  static PrimeSet of(const Ring& ring, std::span<const PrimeIdeal> primes);
  static PrimeSet of(const Ring& ring, std::initializer_list<PrimeIdeal> primes) {
    return of(ring, std::span<const PrimeIdeal>(primes.begin(), primes.size()));
  }
  /// Dimension-one rings only.
  static PrimeSet dim_one(const Ring& ring, bool zero, bool cofinite, std::span<const PrimeIdeal> maximals);
  /// All maximal ideals.
  static PrimeSet all_maximal(const Ring& ring);
  /// Synthetic rings only.
  static PrimeSet from_mask(const Ring& ring, NodeMask mask);

  const Ring& ring() const { return ring_; }
  const Rep& rep() const { return rep_; }

  bool contains(const PrimeIdeal& p) const;
  bool is_empty() const;
  bool is_finite() const;
  /// Members in ascending order. Throws UnsupportedError for infinite sets.
  std::vector<PrimeIdeal> elements() const;
  /// Smallest member, if any (for a cofinite maximal part, the smallest
  /// maximal ideal not excluded).
  std::optional<PrimeIdeal> any_element() const;
  /// Synthetic rings only.
  NodeMask mask() const;
  const DimOne& dim_one_rep() const;

  PrimeSet union_with(const PrimeSet& other) const;
  PrimeSet intersect(const PrimeSet& other) const;
  PrimeSet minus(const PrimeSet& other) const;
  PrimeSet complement() const;
  bool is_subset_of(const PrimeSet& other) const;

  std::string format() const;

  friend bool operator==(const PrimeSet& a, const PrimeSet& b);

 private:
  PrimeSet(Ring ring, Rep rep) : ring_(std::move(ring)), rep_(std::move(rep)) {}
  void require_same_ring(const PrimeSet& other) const;

  Ring ring_;
  Rep rep_;
};

PrimeSet operator|(const PrimeSet& a, const PrimeSet& b);
PrimeSet operator&(const PrimeSet& a, const PrimeSet& b);

}  // namespace cotilt
