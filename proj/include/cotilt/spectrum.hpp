#pragma once

#include "cotilt/prime.hpp"
#include "cotilt/prime_set.hpp"
#include "cotilt/ring.hpp"

namespace cotilt {

/// True iff p ⊆ q.
bool leq(const Ring& ring, const PrimeIdeal& p, const PrimeIdeal& q);

/// {p ∈ Spec R | p ⊆ m}, the model of Spec R_m. Throws InputError unless m is
/// maximal.
PrimeSet primes_under(const Ring& ring, const PrimeIdeal& m);

// Primes of R_m are represented by their preimages in R, so localization and
// its inverse are identities guarded by the down-set check.

/// The prime of R_m corresponding to p ⊆ m.
PrimeIdeal localize_prime(const Ring& ring, const PrimeIdeal& m, const PrimeIdeal& p);
/// The unique prime of R below m that localizes to `local`.
PrimeIdeal hat(const Ring& ring, const PrimeIdeal& m, const PrimeIdeal& local);

/// Downward closure test: q ⊆ p ∈ s implies q ∈ s.
bool is_lower_set(const Ring& ring, const PrimeSet& s);

}  // namespace cotilt
