#pragma once

#include <cstdint>
#include <vector>

#include "cotilt/zhom/modules.hpp"

namespace cotilt::zhom {

/// A finite abelian group ⊕ Z/n_k held element by element, for oracles that
/// must not rely on the structure theory they are checking.
class ExplicitGroup {
 public:
  using Element = std::uint32_t;

  explicit ExplicitGroup(std::vector<std::uint64_t> moduli);
  /// Built from the elementary divisors of a finite module.
  static ExplicitGroup of(const FgZModule& m);

  std::size_t size() const { return size_; }
  const std::vector<std::uint64_t>& moduli() const { return moduli_; }

  Element add(Element a, Element b) const;
  Element multiply(Element a, std::uint64_t k) const;
  std::vector<Element> all() const;

  /// Invariants of the subgroup whose elements are listed, recovered from the
  /// counts #{x : p^k x = 0}.
  FgZModule structure_of(const std::vector<Element>& subgroup) const;

 private:
  std::vector<std::uint64_t> moduli_;
  std::size_t size_ = 1;
};

/// Every finite abelian group of order 1..max_order, ordered by order and
/// then by canonical form.
std::vector<FgZModule> finite_abelian_groups(std::uint64_t max_order);
/// Abelian p-groups of order ≤ max_order, the trivial group included.
std::vector<FgZModule> abelian_p_groups(std::uint64_t p, std::uint64_t max_order);

}  // namespace cotilt::zhom
