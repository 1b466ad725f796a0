#include "cotilt/zhom/oracle.hpp"

#include <algorithm>

#include "cotilt/error.hpp"
#include "cotilt/number_theory.hpp"
#include "cotilt/ring.hpp"
#include "cotilt/sequence.hpp"
#include "cotilt/zhom/finite_group.hpp"
#include "cotilt/zhom/homology.hpp"

namespace cotilt::zhom {

namespace {

FgZModule repeat(const FgZModule& m, unsigned k) {
  FgZModule out;
  for (unsigned i = 0; i < k; ++i) out = out + m;
  return out;
}

bool is_primary(const FgZModule& m, std::uint64_t p) { return m.rank() == 0 && m == m.primary_part(p); }


void require_prime(std::uint64_t p) {
  if (!nt::is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
}

}  // namespace

FgZModule colocalize_by_inverse_limit(const FgZModule& m, std::uint64_t p) {
  require_prime(p);
  if (!m.is_finite()) {
    throw UnsupportedError("colocalization of " + m.format() + " is not finitely generated");
  }
  const ExplicitGroup g = ExplicitGroup::of(m);
  std::uint64_t s = 1;
  for (std::uint64_t q : m.support()) {
    if (q != p) s *= q;
  }
  std::vector<ExplicitGroup::Element> image = g.all();
  for (;;) {
    std::vector<ExplicitGroup::Element> next;
    next.reserve(image.size());
    for (auto x : image) next.push_back(g.multiply(x, s));
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    if (next.size() == image.size()) break;
    image = std::move(next);
  }
  return g.structure_of(image);
}

ExtComparison verify_cartanei_a(const FgZModule& a, const LocalizedModule& b, unsigned i) {
  const std::uint64_t p = b.prime();
  const LocalizedModule left = homology(Functor::Ext, i, localize_module(a, p), b);
  // Ext_Z(A, Z_(p)^r) = Ext_Z(A, Z^r) ⊗ Z_(p) for finitely generated A.
  const FgZModule over_free = homology(Functor::Ext, i, a, FgZModule::free(b.rank()), Method::Resolution);
  const FgZModule over_torsion =
      homology(Functor::Ext, i, a, b.lift().torsion_part(), Method::Resolution);
  ExtComparison c;
  c.left = left;
  c.right = LocalizedModule::localize(over_free + over_torsion, p);
  c.agree = is_primary(over_torsion, p) && c.left == c.right;
  return c;
}

ExtComparison verify_cartanei_b(const LocalizedModule& a, const FgZModule& b, unsigned i) {
  if (!b.is_finite()) throw InputError("the second module must be finite, got " + b.format());
  const std::uint64_t p = a.prime();
  const LocalizedModule coloc = LocalizedModule::localize(colocalize_finite(b, p), p);
  const LocalizedModule left = homology(Functor::Ext, i, a, coloc);

  FgZModule right = homology(Functor::Ext, i, a.lift().torsion_part(), b, Method::Resolution);
  if (i == 0) right = right + repeat(colocalize_by_inverse_limit(b, p), a.rank());
  ExtComparison c;
  c.left = left;
  c.right = LocalizedModule::localize(right, p);
  c.agree = is_primary(right, p) && c.left == c.right;
  return c;
}

DualComparison verify_dual_coloc(const FgZModule& n, std::uint64_t p) {
  require_prime(p);
  if (!n.is_finite()) throw UnsupportedError("dual-of-localization check needs a finite module, got " + n.format());
  DualComparison c;
  c.colocalized_dual = colocalize_finite(matlis_dual(n).finite, p);
  c.dual_of_localization = matlis_dual(localize_module(n, p)).lift();
  c.agree = c.colocalized_dual == c.dual_of_localization;
  return c;
}

unsigned bass_number_oracle(const PrimeIdeal& p, unsigned i) {
  if (i >= 2) return 0;
  if (p.is_zero()) {
    return homology(Functor::Ext, i, FgZModule::free(1), FgZModule::free(1), Method::Resolution).rank();
  }
  if (p.kind() != PrimeIdeal::Kind::Integer) throw InputError("Bass numbers are computed over Z only");
  const std::uint64_t q = p.integer_value();
  require_prime(q);
  const LocalizedModule residue(q, 0, {{1, 1}});
  const LocalizedModule ring(q, 1, {});
  const LocalizedModule ext = homology(Functor::Ext, i, residue, ring, Method::Resolution);
  unsigned dimension = ext.rank();
  for (const auto& [e, mult] : ext.torsion()) dimension += e * mult;
  return dimension;
}

SweepReport cartanei_sweep(CartanPart part, std::uint64_t max_order, std::span<const std::uint64_t> primes,
                           std::span<const unsigned> degrees) {
  SweepReport report;
  for (std::uint64_t p : primes) {
    const auto groups = abelian_p_groups(p, max_order);
    for (const auto& a : groups) {
      for (const auto& b : groups) {
        for (unsigned i : degrees) {
          const ExtComparison c = part == CartanPart::A
                                      ? verify_cartanei_a(a, LocalizedModule::localize(b, p), i)
                                      : verify_cartanei_b(LocalizedModule::localize(a, p), b, i);
          ++report.checked;
          if (!c.agree) {
            report.failures.push_back("p=" + std::to_string(p) + " i=" + std::to_string(i) + " A=" + a.format() +
                                      " B=" + b.format() + ": " + c.left.format() + " vs " + c.right.format());
          }
        }
      }
    }
  }
  return report;
}

SweepReport dual_coloc_sweep(std::uint64_t max_order, std::span<const std::uint64_t> primes) {
  SweepReport report;
  for (const auto& n : finite_abelian_groups(max_order)) {
    for (std::uint64_t p : primes) {
      const DualComparison c = verify_dual_coloc(n, p);
      ++report.checked;
      if (!c.agree) {
        report.failures.push_back("p=" + std::to_string(p) + " N=" + n.format() + ": " +
                                  c.colocalized_dual.format() + " vs " + c.dual_of_localization.format());
      }
    }
  }
  return report;
}

SweepReport colocalization_sweep(std::uint64_t max_order, std::span<const std::uint64_t> primes) {
  SweepReport report;
  for (const auto& m : finite_abelian_groups(max_order)) {
    for (std::uint64_t p : primes) {
      const FgZModule closed = colocalize_finite(m, p);
      const FgZModule limit = colocalize_by_inverse_limit(m, p);
      ++report.checked;
      if (closed != limit) {
        report.failures.push_back("p=" + std::to_string(p) + " M=" + m.format() + ": " + closed.format() + " vs " +
                                  limit.format());
      }
    }
  }
  return report;
}

SweepReport bass_sweep(std::span<const std::uint64_t> primes, unsigned max_degree) {
  SweepReport report;
  const Ring z = Ring::integers();
  std::vector<PrimeIdeal> tested{PrimeIdeal::zero()};
  for (std::uint64_t p : primes) tested.push_back(PrimeIdeal::integer(p));
  for (unsigned i = 0; i <= max_degree; ++i) {
    const PrimeSet builtin = bass_assassinators(z, i);
    for (const auto& p : tested) {
      const unsigned mu = bass_number_oracle(p, i);
      ++report.checked;
      if ((mu > 0) != builtin.contains(p)) {
        report.failures.push_back("mu_" + std::to_string(i) + "(" + z.format(p) + ") = " + std::to_string(mu) +
                                  " disagrees with the built-in Bass data");
      }
    }
  }
  return report;
}

}  // namespace cotilt::zhom
