#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cotilt/zhom/int_matrix.hpp"

namespace cotilt::zhom {

/// (Z/p^exponent)^multiplicity
struct PrimaryComponent {
  std::uint64_t prime = 0;
  unsigned exponent = 0;
  unsigned multiplicity = 0;

  friend auto operator<=>(const PrimaryComponent&, const PrimaryComponent&) = default;
};

/// Finitely generated abelian group Z^rank ⊕ (primary torsion), stored in
/// canonical form: components sorted, merged, with positive multiplicities.
class FgZModule {
 public:
  FgZModule() = default;
  FgZModule(unsigned rank, std::vector<PrimaryComponent> torsion);

  static FgZModule free(unsigned rank) { return FgZModule(rank, {}); }
  /// Z/n; n == 0 gives Z and n == 1 the zero module.
  static FgZModule cyclic(const Integer& n);
  static FgZModule from_invariant_factors(unsigned rank, std::span<const Integer> factors);

  unsigned rank() const { return rank_; }
  const std::vector<PrimaryComponent>& torsion() const { return torsion_; }
  bool is_finite() const { return rank_ == 0; }
  bool is_zero() const { return rank_ == 0 && torsion_.empty(); }

  FgZModule torsion_part() const { return FgZModule(0, torsion_); }
  FgZModule primary_part(std::uint64_t p) const;
  /// Number of elements of the torsion subgroup.
  Integer torsion_order() const;
  /// Primes with nonzero primary part, ascending.
  std::vector<std::uint64_t> support() const;
  /// Orders of the cyclic summands of the torsion part, one entry per summand.
  std::vector<Integer> elementary_divisors() const;
  /// d_1 | d_2 | ... with d_1 > 1.
  std::vector<Integer> invariant_factors() const;

  std::string format() const;

  friend FgZModule operator+(const FgZModule& a, const FgZModule& b);
  friend bool operator==(const FgZModule&, const FgZModule&) = default;

 private:
  unsigned rank_ = 0;
  std::vector<PrimaryComponent> torsion_;
};

/// Finitely generated module over the local ring Z_(p): Z_(p)^rank plus
/// cyclic p-power torsion given as (exponent, multiplicity).
class LocalizedModule {
 public:
  LocalizedModule() = default;
  LocalizedModule(std::uint64_t prime, unsigned rank, std::vector<std::pair<unsigned, unsigned>> torsion);

  /// The p-local module whose underlying lift is `m`; other primes are dropped.
  static LocalizedModule localize(const FgZModule& m, std::uint64_t prime);

  std::uint64_t prime() const { return prime_; }
  unsigned rank() const { return rank_; }
  const std::vector<std::pair<unsigned, unsigned>>& torsion() const { return torsion_; }
  bool is_zero() const { return rank_ == 0 && torsion_.empty(); }

  /// Z^rank ⊕ torsion, a Z-module whose localization at p is this module.
  FgZModule lift() const;

  std::string format() const;

  friend bool operator==(const LocalizedModule&, const LocalizedModule&) = default;

 private:
  std::uint64_t prime_ = 2;
  unsigned rank_ = 0;
  std::vector<std::pair<unsigned, unsigned>> torsion_;
};

/// (Q/Z)^divisible_rank ⊕ finite, the shape of a Matlis dual over Z.
struct MatlisModule {
  unsigned divisible_rank = 0;
  FgZModule finite;

  std::string format() const;
  friend bool operator==(const MatlisModule&, const MatlisModule&) = default;
};

/// Module presented as the cokernel of `relations`: Z^rows / (column span).
FgZModule module_from_cokernel(const IntMatrix& relations);

/// Injective presentation: generators are the rank free summands followed by
/// one generator per cyclic torsion summand (in elementary_divisors order),
/// with one relation column per torsion summand.
IntMatrix presentation_matrix(const FgZModule& m);

LocalizedModule localize_module(const FgZModule& m, std::uint64_t prime);
/// p-primary part of a finite module, the shape of Hom(Z_(p), M).
FgZModule colocalize_finite(const FgZModule& m, std::uint64_t prime);
/// Hom(M, Q/Z).
MatlisModule matlis_dual(const FgZModule& m);
/// Hom(M, E(Z/p)) over Z_(p) for finite M; finite local modules are self-dual.
LocalizedModule matlis_dual(const LocalizedModule& m);

}  // namespace cotilt::zhom
