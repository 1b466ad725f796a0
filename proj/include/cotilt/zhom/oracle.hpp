#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cotilt/prime.hpp"
#include "cotilt/zhom/modules.hpp"

namespace cotilt::zhom {

/// Hom(Z_(p), M) for finite M, as the limit of M <-s- M <-s- ... where s is
/// the product of the primes other than p dividing |M|. The tower is run
/// element by element until the image stops shrinking.
FgZModule colocalize_by_inverse_limit(const FgZModule& m, std::uint64_t p);

/// Both sides of an Ext comparison, as Z_(p)-modules.
struct ExtComparison {
  LocalizedModule left;
  LocalizedModule right;
  bool agree = false;
};

/// Ext^i over Z_(p) of (A_p, B) against Ext^i over Z of (A, B), where B is a
/// Z_(p)-module. The left side uses closed forms over Z_(p), the right side
/// free resolutions over Z.
ExtComparison verify_cartanei_a(const FgZModule& a, const LocalizedModule& b, unsigned i);

/// Ext^i over Z_(p) of (A, Hom(Z_(p), B)) against Ext^i over Z of (A, B), for
/// a Z_(p)-module A and a finite B. On the right, the free Z_(p) summands of A
/// are handled through the inverse-limit colocalization (their Ext^1 into a
/// finite group vanishes since the tower is Mittag-Leffler).
ExtComparison verify_cartanei_b(const LocalizedModule& a, const FgZModule& b, unsigned i);

/// Hom(N, Q/Z) colocalized at p, against the dual of N localized at p.
struct DualComparison {
  FgZModule colocalized_dual;
  FgZModule dual_of_localization;
  bool agree = false;
};
DualComparison verify_dual_coloc(const FgZModule& n, std::uint64_t p);

/// μ_i(p, Z): the F_p-dimension of Ext^i over Z_(p) of F_p into Z_(p); for the
/// zero ideal, the rank of Ext^i over Z of (Z, Z), i.e. the Q-dimension of
/// Ext^i over Q of (Q, Q). Degrees above 1 give 0.
unsigned bass_number_oracle(const PrimeIdeal& p, unsigned i);

struct SweepReport {
  std::size_t checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

enum class CartanPart { A, B };

/// All pairs of abelian p-groups of order ≤ max_order.
SweepReport cartanei_sweep(CartanPart part, std::uint64_t max_order, std::span<const std::uint64_t> primes,
                           std::span<const unsigned> degrees);
/// All finite groups of order ≤ max_order.
SweepReport dual_coloc_sweep(std::uint64_t max_order, std::span<const std::uint64_t> primes);
/// colocalize_finite against colocalize_by_inverse_limit.
SweepReport colocalization_sweep(std::uint64_t max_order, std::span<const std::uint64_t> primes);
/// bass_number_oracle against the built-in Bass data of Z, degrees 0..max_degree.
SweepReport bass_sweep(std::span<const std::uint64_t> primes, unsigned max_degree);

}  // namespace cotilt::zhom
