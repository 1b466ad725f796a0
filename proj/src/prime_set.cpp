#include "cotilt/prime_set.hpp"

#include <algorithm>
#include <bit>
#include <iterator>

#include "cotilt/error.hpp"

namespace cotilt {

namespace {

using List = std::vector<PrimeIdeal>;

List sorted_unique(List v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

List list_union(const List& a, const List& b) {
  List out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

List list_intersection(const List& a, const List& b) {
  List out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

List list_difference(const List& a, const List& b) {
  List out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool list_contains(const List& a, const PrimeIdeal& p) { return std::binary_search(a.begin(), a.end(), p); }

// Maximal parts of dimension-one sets: (cofinite, list).
struct MaxPart {
  bool cofinite;
  List list;
};

MaxPart max_union(const MaxPart& a, const MaxPart& b) {
  if (!a.cofinite && !b.cofinite) return {false, list_union(a.list, b.list)};
  if (a.cofinite && b.cofinite) return {true, list_intersection(a.list, b.list)};
  const MaxPart& co = a.cofinite ? a : b;
  const MaxPart& fin = a.cofinite ? b : a;
  return {true, list_difference(co.list, fin.list)};
}

MaxPart max_intersection(const MaxPart& a, const MaxPart& b) {
  if (!a.cofinite && !b.cofinite) return {false, list_intersection(a.list, b.list)};
  if (a.cofinite && b.cofinite) return {true, list_union(a.list, b.list)};
  const MaxPart& co = a.cofinite ? a : b;
  const MaxPart& fin = a.cofinite ? b : a;
  return {false, list_difference(fin.list, co.list)};
}

MaxPart max_complement(const MaxPart& a) { return {!a.cofinite, a.list}; }

}  // namespace

PrimeSet PrimeSet::empty(const Ring& ring) {
  if (ring.is_dimension_one()) return PrimeSet(ring, DimOne{});
  if (ring.kind() == RingKind::Synthetic) return PrimeSet(ring, Bitset{});
  return PrimeSet(ring, FiniteList{});
}

PrimeSet PrimeSet::all(const Ring& ring) {
  if (ring.is_dimension_one()) return PrimeSet(ring, DimOne{true, true, {}});
  if (ring.kind() == RingKind::Synthetic) return PrimeSet(ring, Bitset{ring.poset().all()});
  return PrimeSet(ring, FiniteList{ring.spectrum()});
}

PrimeSet PrimeSet::all_maximal(const Ring& ring) {
  if (ring.is_dimension_one()) return PrimeSet(ring, DimOne{false, true, {}});
  if (ring.kind() == RingKind::Synthetic) return PrimeSet(ring, Bitset{ring.poset().maximal()});
  return all(ring);
}

PrimeSet PrimeSet::of(const Ring& ring, std::span<const PrimeIdeal> primes) {
  for (const auto& p : primes) ring.check_prime(p);
  if (ring.kind() == RingKind::Synthetic) {
    NodeMask mask = 0;
    for (const auto& p : primes) mask |= node_bit(p.node_id());
    return PrimeSet(ring, Bitset{mask});
  }
  List list = sorted_unique(List(primes.begin(), primes.end()));
  if (ring.is_dimension_one()) {
    DimOne d;
    if (!list.empty() && list.front().is_zero()) {
      d.zero = true;
      list.erase(list.begin());
    }
    d.maximals = std::move(list);
    return PrimeSet(ring, std::move(d));
  }
  return PrimeSet(ring, FiniteList{std::move(list)});
}

PrimeSet PrimeSet::dim_one(const Ring& ring, bool zero, bool cofinite, std::span<const PrimeIdeal> maximals) {
  if (!ring.is_dimension_one()) {
    throw InputError("dimension-one prime set over " + ring.describe());
  }
  for (const auto& m : maximals) ring.check_maximal(m);
  return PrimeSet(ring, DimOne{zero, cofinite, sorted_unique(List(maximals.begin(), maximals.end()))});
}

PrimeSet PrimeSet::from_mask(const Ring& ring, NodeMask mask) {
  if (ring.kind() != RingKind::Synthetic) throw InputError("bitset prime set over " + ring.describe());
  if ((mask & ~ring.poset().all()) != 0) throw InputError("bitset refers to unknown nodes");
  return PrimeSet(ring, Bitset{mask});
}

void PrimeSet::require_same_ring(const PrimeSet& other) const {
  if (!(ring_ == other.ring_)) {
    throw InputError("prime sets over different rings: " + ring_.describe() + " and " + other.ring_.describe());
  }
}

bool PrimeSet::contains(const PrimeIdeal& p) const {
  ring_.check_prime(p);
  if (const auto* f = std::get_if<FiniteList>(&rep_)) return list_contains(f->elems, p);
  if (const auto* b = std::get_if<Bitset>(&rep_)) return (b->mask >> p.node_id()) & 1U;
  const auto& d = std::get<DimOne>(rep_);
  if (p.is_zero()) return d.zero;
  return list_contains(d.maximals, p) != d.cofinite;
}

bool PrimeSet::is_empty() const {
  if (const auto* f = std::get_if<FiniteList>(&rep_)) return f->elems.empty();
  if (const auto* b = std::get_if<Bitset>(&rep_)) return b->mask == 0;
  const auto& d = std::get<DimOne>(rep_);
  return !d.zero && !d.cofinite && d.maximals.empty();
}

bool PrimeSet::is_finite() const {
  const auto* d = std::get_if<DimOne>(&rep_);
  return d == nullptr || !d->cofinite;
}

std::vector<PrimeIdeal> PrimeSet::elements() const {
  if (const auto* f = std::get_if<FiniteList>(&rep_)) return f->elems;
  if (const auto* b = std::get_if<Bitset>(&rep_)) {
    List out;
    for (NodeMask rest = b->mask; rest != 0; rest &= rest - 1) {
      out.push_back(PrimeIdeal::node(static_cast<std::size_t>(std::countr_zero(rest))));
    }
    return out;
  }
  const auto& d = std::get<DimOne>(rep_);
  if (d.cofinite) throw UnsupportedError("cannot list the members of an infinite prime set");
  List out;
  if (d.zero) out.push_back(PrimeIdeal::zero());
  out.insert(out.end(), d.maximals.begin(), d.maximals.end());
  return out;
}

std::optional<PrimeIdeal> PrimeSet::any_element() const {
  if (const auto* d = std::get_if<DimOne>(&rep_)) {
    if (d->zero) return PrimeIdeal::zero();
    if (d->cofinite) return ring_.maximal_outside(d->maximals);
    if (!d->maximals.empty()) return d->maximals.front();
    return std::nullopt;
  }
  List members = elements();
  if (members.empty()) return std::nullopt;
  return members.front();
}

NodeMask PrimeSet::mask() const {
  if (const auto* b = std::get_if<Bitset>(&rep_)) return b->mask;
  throw InputError("prime set over " + ring_.describe() + " has no bitset form");
}

const PrimeSet::DimOne& PrimeSet::dim_one_rep() const {
  if (const auto* d = std::get_if<DimOne>(&rep_)) return *d;
  throw InputError("prime set over " + ring_.describe() + " has no dimension-one form");
}

PrimeSet PrimeSet::union_with(const PrimeSet& other) const {
  require_same_ring(other);
  if (const auto* b = std::get_if<Bitset>(&rep_)) {
    return PrimeSet(ring_, Bitset{b->mask | std::get<Bitset>(other.rep_).mask});
  }
  if (const auto* f = std::get_if<FiniteList>(&rep_)) {
    return PrimeSet(ring_, FiniteList{list_union(f->elems, std::get<FiniteList>(other.rep_).elems)});
  }
  const auto& a = std::get<DimOne>(rep_);
  const auto& b = std::get<DimOne>(other.rep_);
  MaxPart m = max_union({a.cofinite, a.maximals}, {b.cofinite, b.maximals});
  return PrimeSet(ring_, DimOne{a.zero || b.zero, m.cofinite, std::move(m.list)});
}

PrimeSet PrimeSet::intersect(const PrimeSet& other) const {
  require_same_ring(other);
  if (const auto* b = std::get_if<Bitset>(&rep_)) {
    return PrimeSet(ring_, Bitset{b->mask & std::get<Bitset>(other.rep_).mask});
  }
  if (const auto* f = std::get_if<FiniteList>(&rep_)) {
    return PrimeSet(ring_, FiniteList{list_intersection(f->elems, std::get<FiniteList>(other.rep_).elems)});
  }
  const auto& a = std::get<DimOne>(rep_);
  const auto& b = std::get<DimOne>(other.rep_);
  MaxPart m = max_intersection({a.cofinite, a.maximals}, {b.cofinite, b.maximals});
  return PrimeSet(ring_, DimOne{a.zero && b.zero, m.cofinite, std::move(m.list)});
}

PrimeSet PrimeSet::complement() const {
  if (const auto* b = std::get_if<Bitset>(&rep_)) return PrimeSet(ring_, Bitset{ring_.poset().all() & ~b->mask});
  if (const auto* f = std::get_if<FiniteList>(&rep_)) {
    return PrimeSet(ring_, FiniteList{list_difference(ring_.spectrum(), f->elems)});
  }
  const auto& d = std::get<DimOne>(rep_);
  MaxPart m = max_complement({d.cofinite, d.maximals});
  return PrimeSet(ring_, DimOne{!d.zero, m.cofinite, std::move(m.list)});
}

PrimeSet PrimeSet::minus(const PrimeSet& other) const {
  require_same_ring(other);
  return intersect(other.complement());
}

bool PrimeSet::is_subset_of(const PrimeSet& other) const {
  require_same_ring(other);
  if (const auto* b = std::get_if<Bitset>(&rep_)) return (b->mask & ~std::get<Bitset>(other.rep_).mask) == 0;
  if (const auto* f = std::get_if<FiniteList>(&rep_)) {
    const auto& g = std::get<FiniteList>(other.rep_).elems;
    return std::includes(g.begin(), g.end(), f->elems.begin(), f->elems.end());
  }
  return minus(other).is_empty();
}

bool operator==(const PrimeSet& a, const PrimeSet& b) { return a.ring_ == b.ring_ && a.rep_ == b.rep_; }

PrimeSet operator|(const PrimeSet& a, const PrimeSet& b) { return a.union_with(b); }
PrimeSet operator&(const PrimeSet& a, const PrimeSet& b) { return a.intersect(b); }

std::string PrimeSet::format() const {
  auto join = [&](const List& items) {
    std::string out;
    for (const auto& p : items) {
      if (!out.empty()) out += ", ";
      out += ring_.format(p);
    }
    return out;
  };
  if (const auto* d = std::get_if<DimOne>(&rep_)) {
    if (!d->cofinite) return "{" + join(elements()) + "}";
    std::string out = d->zero ? "{(0)} u " : "";
    out += "mSpec";
    if (!d->maximals.empty()) out += " \\ {" + join(d->maximals) + "}";
    return out;
  }
  return "{" + join(elements()) + "}";
}

}  // namespace cotilt
