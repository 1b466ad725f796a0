#include "cotilt/zhom/membership.hpp"

#include <algorithm>

#include "cotilt/error.hpp"
#include "cotilt/family.hpp"
#include "cotilt/zhom/homology.hpp"

namespace cotilt::zhom {

namespace {

const Ring& integers() {
  static const Ring z = Ring::integers();
  return z;
}

PrimeSet support_set(const FgZModule& m) {
  std::vector<PrimeIdeal> primes;
  for (std::uint64_t p : m.support()) primes.push_back(PrimeIdeal::integer(p));
  return PrimeSet::of(integers(), primes);
}

void require_integer_sequence(const CharacteristicSequence& seq) {
  if (seq.ring().kind() != RingKind::Integers) {
    throw InputError("membership is computed over Z, but the sequence lives over " + seq.ring().describe());
  }
  SequenceVerdict verdict = validate_sequence(seq);
  if (!verdict.ok()) throw InvalidSequenceError("the characteristic sequence is not valid", std::move(verdict));
}

}  // namespace

PrimeSet ass_cosyzygy(const FgZModule& m, std::size_t i) {
  const Ring& z = integers();
  switch (i) {
    case 0:
      return m.rank() > 0 ? PrimeSet::of(z, {PrimeIdeal::zero()}) | support_set(m) : support_set(m);
    case 1:
      return m.rank() > 0 ? PrimeSet::all_maximal(z) : support_set(m);
    default:
      return PrimeSet::empty(z);
  }
}

PrimeSet ass_cosyzygy(const MatlisModule& m, std::size_t i) {
  const Ring& z = integers();
  switch (i) {
    case 0:
      return m.divisible_rank > 0 ? PrimeSet::all_maximal(z) : support_set(m.finite);
    case 1:
      return support_set(m.finite);
    default:
      return PrimeSet::empty(z);
  }
}

namespace {

template <typename M>
bool cotilting(const M& m, const CharacteristicSequence& seq) {
  require_integer_sequence(seq);
  for (std::size_t i = 0; i < seq.length(); ++i) {
    if (!ass_cosyzygy(m, i).is_subset_of(seq.level(i))) return false;
  }
  return true;
}

}  // namespace

bool cotilting_membership(const FgZModule& m, const CharacteristicSequence& seq) { return cotilting(m, seq); }

bool cotilting_membership(const MatlisModule& m, const CharacteristicSequence& seq) { return cotilting(m, seq); }

bool tilting_membership(const FgZModule& n, const CharacteristicSequence& seq) {
  require_integer_sequence(seq);
  const Ring& z = integers();
  const PrimeSet supp = support_set(n);
  for (std::size_t i = 0; i < seq.length(); ++i) {
    const PrimeSet excluded = PrimeSet::all_maximal(z).minus(seq.level(i));
    if (excluded.is_empty()) continue;
    // Tor_i(N, Z/p) depends only on whether p divides |tors N|, so the excluded
    // primes in the support plus one excluded prime outside it cover every case.
    std::vector<PrimeIdeal> tested = excluded.intersect(supp).elements();
    const PrimeSet rest = excluded.minus(supp);
    if (const auto representative = rest.any_element()) tested.push_back(*representative);
    for (const auto& p : tested) {
      const FgZModule residue = FgZModule::cyclic(Integer(static_cast<unsigned long>(p.integer_value())));
      if (!homology(Functor::Tor, static_cast<unsigned>(i), n, residue).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace cotilt::zhom
