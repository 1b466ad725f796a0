#pragma once

#include <cstddef>
#include <random>

#include "cotilt/family.hpp"
#include "cotilt/ring.hpp"
#include "cotilt/sequence.hpp"

namespace cotilt {

// Random characteristic data over Z or F_q[x], used by randomized round-trip
// sweeps. Exceptional maximal ideals are drawn from the first `pool` maximals.

/// A characteristic sequence of length n whose P_0 has a finite or cofinite
/// maximal part with at most `max_exceptions` listed primes.
CharacteristicSequence random_dim_one_sequence(const Ring& ring, std::size_t n, std::size_t max_exceptions,
                                               std::mt19937_64& rng, std::size_t pool = 30);

/// A compatible family of length n with at most `max_exceptions` maximal
/// ideals deviating from the default pattern.
CompatibleFamily random_dim_one_family(const Ring& ring, std::size_t n, std::size_t max_exceptions,
                                       std::mt19937_64& rng, std::size_t pool = 30);

}  // namespace cotilt
