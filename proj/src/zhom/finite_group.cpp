#include "cotilt/zhom/finite_group.hpp"

#include <algorithm>

#include "cotilt/error.hpp"
#include "cotilt/number_theory.hpp"

namespace cotilt::zhom {

namespace {

constexpr std::size_t kMaxExplicitSize = std::size_t{1} << 22;

void partitions(unsigned remaining, unsigned largest, std::vector<unsigned>& current,
                std::vector<std::vector<unsigned>>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  for (unsigned part = std::min(remaining, largest); part >= 1; --part) {
    current.push_back(part);
    partitions(remaining - part, part, current, out);
    current.pop_back();
  }
}

std::vector<FgZModule> groups_of_order(std::uint64_t n) {
  std::vector<FgZModule> groups{FgZModule()};
  for (const auto& [p, e] : nt::factor(n)) {
    std::vector<std::vector<unsigned>> shapes;
    std::vector<unsigned> current;
    partitions(e, e, current, shapes);
    std::vector<FgZModule> next;
    for (const auto& g : groups) {
      for (const auto& shape : shapes) {
        std::vector<PrimaryComponent> parts;
        for (unsigned exponent : shape) parts.push_back({p, exponent, 1});
        next.push_back(g + FgZModule(0, std::move(parts)));
      }
    }
    groups = std::move(next);
  }
  return groups;
}

}  // namespace

ExplicitGroup::ExplicitGroup(std::vector<std::uint64_t> moduli) : moduli_(std::move(moduli)) {
  for (auto m : moduli_) {
    if (m == 0) throw InputError("explicit groups must be finite");
    size_ *= m;
    if (size_ > kMaxExplicitSize) throw UnsupportedError("group too large to enumerate");
  }
}

ExplicitGroup ExplicitGroup::of(const FgZModule& m) {
  if (!m.is_finite()) throw UnsupportedError("cannot enumerate the infinite module " + m.format());
  std::vector<std::uint64_t> moduli;
  for (const auto& d : m.elementary_divisors()) {
    if (!d.fits_ulong_p()) throw UnsupportedError("group too large to enumerate");
    moduli.push_back(d.get_ui());
  }
  return ExplicitGroup(std::move(moduli));
}

ExplicitGroup::Element ExplicitGroup::add(Element a, Element b) const {
  Element result = 0;
  std::uint64_t place = 1;
  for (auto m : moduli_) {
    const std::uint64_t x = a % m, y = b % m;
    a /= m;
    b /= m;
    result += static_cast<Element>(((x + y) % m) * place);
    place *= m;
  }
  return result;
}

ExplicitGroup::Element ExplicitGroup::multiply(Element a, std::uint64_t k) const {
  Element result = 0;
  std::uint64_t place = 1;
  for (auto m : moduli_) {
    const std::uint64_t x = a % m;
    a /= m;
    result += static_cast<Element>(nt::mul_mod(x, k % m, m) * place);
    place *= m;
  }
  return result;
}

std::vector<ExplicitGroup::Element> ExplicitGroup::all() const {
  std::vector<Element> elements(size_);
  for (std::size_t i = 0; i < size_; ++i) elements[i] = static_cast<Element>(i);
  return elements;
}

FgZModule ExplicitGroup::structure_of(const std::vector<Element>& subgroup) const {
  std::vector<PrimaryComponent> parts;
  for (const auto& [p, e] : nt::factor(subgroup.size())) {
    // counts[k] = #{x : p^k x = 0} = p^(sum_j min(k, e_j))
    std::vector<unsigned> log_counts{0};
    std::uint64_t pk = 1;
    for (unsigned k = 1;; ++k) {
      pk *= p;
      std::size_t killed = 0;
      for (Element x : subgroup) {
        if (multiply(x, pk) == 0) ++killed;
      }
      unsigned log = 0;
      while (killed % p == 0 && killed > 1) {
        killed /= p;
        ++log;
      }
      log_counts.push_back(log);
      if (log == e) break;
    }
    // at_least[k] = number of cyclic summands of exponent ≥ k
    std::vector<unsigned> at_least(log_counts.size() + 1, 0);
    for (std::size_t k = 1; k < log_counts.size(); ++k) at_least[k] = log_counts[k] - log_counts[k - 1];
    for (std::size_t k = 1; k < log_counts.size(); ++k) {
      const unsigned exact = at_least[k] - at_least[k + 1];
      if (exact > 0) parts.push_back({p, static_cast<unsigned>(k), exact});
    }
  }
  return FgZModule(0, std::move(parts));
}

std::vector<FgZModule> finite_abelian_groups(std::uint64_t max_order) {
  std::vector<FgZModule> groups;
  for (std::uint64_t n = 1; n <= max_order; ++n) {
    auto batch = groups_of_order(n);
    std::sort(batch.begin(), batch.end(), [](const FgZModule& a, const FgZModule& b) {
      return a.torsion() < b.torsion();
    });
    groups.insert(groups.end(), batch.begin(), batch.end());
  }
  return groups;
}

std::vector<FgZModule> abelian_p_groups(std::uint64_t p, std::uint64_t max_order) {
  if (!nt::is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
  std::vector<FgZModule> groups;
  for (std::uint64_t order = 1; order <= max_order; order *= p) {
    auto batch = groups_of_order(order);
    std::sort(batch.begin(), batch.end(), [](const FgZModule& a, const FgZModule& b) {
      return a.torsion() < b.torsion();
    });
    groups.insert(groups.end(), batch.begin(), batch.end());
    if (order > max_order / p) break;
  }
  return groups;
}

}  // namespace cotilt::zhom
