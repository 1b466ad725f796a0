#include "cotilt/spectrum.hpp"

#include "cotilt/error.hpp"

namespace cotilt {

bool leq(const Ring& ring, const PrimeIdeal& p, const PrimeIdeal& q) {
  ring.check_prime(p);
  ring.check_prime(q);
  switch (ring.kind()) {
    case RingKind::Integers:
    case RingKind::PolyOverPrimeField:
      return p.is_zero() || p == q;
    case RingKind::IntegerQuotient:
      return p == q;
    case RingKind::Synthetic:
      return ring.poset().leq(p.node_id(), q.node_id());
  }
  return false;
}

PrimeSet primes_under(const Ring& ring, const PrimeIdeal& m) {
  ring.check_maximal(m);
  switch (ring.kind()) {
    case RingKind::Integers:
    case RingKind::PolyOverPrimeField:
      return PrimeSet::of(ring, {PrimeIdeal::zero(), m});
    case RingKind::IntegerQuotient:
      return PrimeSet::of(ring, {m});
    case RingKind::Synthetic:
      return PrimeSet::from_mask(ring, ring.poset().below(m.node_id()));
  }
  return PrimeSet::empty(ring);
}

namespace {

void require_below(const Ring& ring, const PrimeIdeal& m, const PrimeIdeal& p) {
  ring.check_maximal(m);
  if (!leq(ring, p, m)) {
    throw InputError("prime " + ring.format(p) + " is not contained in " + ring.format(m));
  }
}

}  // namespace

PrimeIdeal localize_prime(const Ring& ring, const PrimeIdeal& m, const PrimeIdeal& p) {
  require_below(ring, m, p);
  return p;
}

PrimeIdeal hat(const Ring& ring, const PrimeIdeal& m, const PrimeIdeal& local) {
  require_below(ring, m, local);
  return local;
}

bool is_lower_set(const Ring& ring, const PrimeSet& s) {
  if (!(s.ring() == ring)) throw InputError("prime set is not over " + ring.describe());
  switch (ring.kind()) {
    case RingKind::Integers:
    case RingKind::PolyOverPrimeField: {
      const auto& d = s.dim_one_rep();
      const bool has_maximal = d.cofinite || !d.maximals.empty();
      return !has_maximal || d.zero;
    }
    case RingKind::IntegerQuotient:
      return true;
    case RingKind::Synthetic:
      return ring.poset().is_lower(s.mask());
  }
  return false;
}

}  // namespace cotilt
