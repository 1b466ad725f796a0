#include "cotilt/sampling.hpp"

#include <algorithm>

#include "cotilt/error.hpp"

namespace cotilt {

namespace {

std::vector<PrimeIdeal> draw_maximals(const Ring& ring, std::size_t max_count, std::mt19937_64& rng,
                                      std::size_t pool) {
  if (!ring.is_dimension_one()) throw UnsupportedError("random sampling needs Z or F_q[x]");
  std::vector<PrimeIdeal> candidates = ring.first_maximals(pool);
  std::shuffle(candidates.begin(), candidates.end(), rng);
  const std::size_t count = std::uniform_int_distribution<std::size_t>(0, std::min(max_count, pool))(rng);
  candidates.resize(count);
  std::sort(candidates.begin(), candidates.end());
  return candidates;
}

}  // namespace

CharacteristicSequence random_dim_one_sequence(const Ring& ring, std::size_t n, std::size_t max_exceptions,
                                               std::mt19937_64& rng, std::size_t pool) {
  const std::vector<PrimeIdeal> listed = draw_maximals(ring, max_exceptions, rng, pool);
  const bool cofinite = std::bernoulli_distribution(0.5)(rng);
  std::vector<PrimeSet> levels;
  for (std::size_t i = 0; i < n; ++i) {
    levels.push_back(i == 0 ? PrimeSet::dim_one(ring, true, cofinite, listed) : PrimeSet::all(ring));
  }
  return CharacteristicSequence(ring, std::move(levels));
}

CompatibleFamily random_dim_one_family(const Ring& ring, std::size_t n, std::size_t max_exceptions,
                                       std::mt19937_64& rng, std::size_t pool) {
  // Locally, (0) lies in every level and m in every level from 1 on; only
  // whether m ∈ P_0 is free.
  std::bernoulli_distribution coin(0.5);
  std::vector<LocalPattern> pattern(n, LocalPattern{true, true});
  if (n > 0) pattern[0].max = coin(rng);
  std::vector<LocalSequence> exceptions;
  for (const auto& m : draw_maximals(ring, max_exceptions, rng, pool)) {
    std::vector<PrimeSet> levels;
    for (std::size_t i = 0; i < n; ++i) {
      const bool with_m = i > 0 || coin(rng);
      levels.push_back(with_m ? PrimeSet::of(ring, {PrimeIdeal::zero(), m}) : PrimeSet::of(ring, {PrimeIdeal::zero()}));
    }
    exceptions.emplace_back(ring, m, std::move(levels));
  }
  return CompatibleFamily(ring, n, std::move(pattern), std::move(exceptions));
}

}  // namespace cotilt
