#include <gtest/gtest.h>

#include <random>

#include "cotilt/error.hpp"
#include "cotilt/number_theory.hpp"

using namespace cotilt::nt;

TEST(Primality, MatchesSieve) {
  const std::size_t limit = 200000;
  std::vector<bool> composite(limit, false);
  for (std::size_t i = 2; i * i < limit; ++i) {
    if (composite[i]) continue;
    for (std::size_t j = i * i; j < limit; j += i) composite[j] = true;
  }
  for (std::size_t n = 0; n < limit; ++n) {
    ASSERT_EQ(is_prime(n), n >= 2 && !composite[n]) << n;
  }
}

TEST(Primality, LargeKnownValues) {
  EXPECT_TRUE(is_prime(18446744073709551557ULL));
  EXPECT_FALSE(is_prime(18446744073709551556ULL));
  EXPECT_FALSE(is_prime(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
  EXPECT_EQ(next_prime(13), 17u);
}

TEST(Factoring, ProductOfFactorsIsInput) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 300; ++trial) {
    std::uint64_t n = rng() >> (rng() % 40 + 1);
    if (n == 0) n = 1;
    std::uint64_t product = 1;
    std::uint64_t last = 0;
    for (auto [p, e] : factor(n)) {
      EXPECT_TRUE(is_prime(p));
      EXPECT_GT(p, last);
      last = p;
      for (unsigned k = 0; k < e; ++k) product *= p;
    }
    EXPECT_EQ(product, n);
  }
  EXPECT_TRUE(factor(1).empty());
  EXPECT_THROW(factor(0), cotilt::InputError);
}

namespace {

int mobius(unsigned n) {
  int mu = 1;
  for (unsigned p = 2; p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  return mu;
}

// Number of monic irreducibles of degree d over F_q: (1/d) Σ_{e|d} μ(e) q^{d/e}.
std::int64_t necklace_count(std::uint64_t q, unsigned d) {
  std::int64_t total = 0;
  for (unsigned e = 1; e <= d; ++e) {
    if (d % e != 0) continue;
    std::int64_t power = 1;
    for (unsigned k = 0; k < d / e; ++k) power *= static_cast<std::int64_t>(q);
    total += mobius(e) * power;
  }
  return total / d;
}

}  // namespace

TEST(PolynomialIrreducibility, CountsMatchNecklaceFormula) {
  for (std::uint64_t q : {2, 3, 5}) {
    const unsigned max_degree = q == 2 ? 8 : (q == 3 ? 5 : 3);
    for (unsigned d = 1; d <= max_degree; ++d) {
      PrimeField field(q);
      Poly f(d + 1, 0);
      f.back() = 1;
      std::int64_t count = 0;
      while (f.size() == d + 1) {
        count += field.is_irreducible(f) ? 1 : 0;
        next_monic(f, q);
      }
      EXPECT_EQ(count, necklace_count(q, d)) << "q=" << q << " d=" << d;
    }
  }
}

TEST(PolynomialText, FormatAndParseRoundTrip) {
  EXPECT_EQ(format_poly({1, 1, 1}), "x^2+x+1");
  EXPECT_EQ(format_poly({2, 0, 1}), "x^2+2");
  EXPECT_EQ(parse_poly("x^2 + x + 1", 2), (Poly{1, 1, 1}));
  EXPECT_EQ(parse_poly("x^3-1", 5), (Poly{4, 0, 0, 1}));
  EXPECT_EQ(parse_poly("3x", 2), (Poly{0, 1}));
  EXPECT_THROW(parse_poly("x^", 2), cotilt::InputError);
  EXPECT_THROW(parse_poly("", 2), cotilt::InputError);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    Poly f(rng() % 6 + 1);
    for (auto& c : f) c = rng() % 7;
    f.back() = 1 + rng() % 6;
    EXPECT_EQ(parse_poly(format_poly(f), 7), f);
  }
}

TEST(PolynomialText, MonicOrderIsDegreeThenCoefficients) {
  Poly f{0, 1};
  next_monic(f, 2);
  EXPECT_EQ(f, (Poly{1, 1}));
  next_monic(f, 2);
  EXPECT_EQ(f, (Poly{0, 0, 1}));
}

TEST(PrimeFieldCtor, RejectsComposite) { EXPECT_THROW(PrimeField(4), cotilt::InputError); }
