#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "cotilt/zhom/int_matrix.hpp"
#include "cotilt/zhom/modules.hpp"

namespace testsupport {

inline cotilt::zhom::IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long bound) {
  std::uniform_int_distribution<long> entry(-bound, bound);
  cotilt::zhom::IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = entry(rng);
  }
  return m;
}

/// Product of random elementary operations, so det = ±1 by construction.
inline cotilt::zhom::IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n) {
  auto m = cotilt::zhom::IntMatrix::identity(n);
  if (n < 2) return m;
  std::uniform_int_distribution<std::size_t> index(0, n - 1);
  std::uniform_int_distribution<long> factor(-3, 3);
  for (std::size_t step = 0; step < 4 * n; ++step) {
    const std::size_t a = index(rng), b = index(rng);
    if (a == b) {
      m.negate_row(a);
    } else {
      m.add_row_multiple(a, b, factor(rng));
    }
  }
  return m;
}

inline cotilt::zhom::FgZModule random_module(std::mt19937_64& rng, unsigned max_rank, unsigned max_summands) {
  static const std::uint64_t primes[] = {2, 3, 5, 7};
  std::uniform_int_distribution<unsigned> rank(0, max_rank), summands(0, max_summands), exponent(1, 3);
  std::uniform_int_distribution<std::size_t> prime(0, 3);
  std::vector<cotilt::zhom::PrimaryComponent> parts;
  const unsigned count = summands(rng);
  for (unsigned k = 0; k < count; ++k) parts.push_back({primes[prime(rng)], exponent(rng), 1});
  return cotilt::zhom::FgZModule(rank(rng), parts);
}

}  // namespace testsupport
