#include <gtest/gtest.h>

#include <random>

#include "cotilt/error.hpp"
#include "cotilt/prime_set.hpp"
#include "cotilt/spectrum.hpp"
#include "support/posets.hpp"

using namespace cotilt;

namespace {

const Ring Z = Ring::integers();

PrimeIdeal ip(std::uint64_t p) { return PrimeIdeal::integer(p); }
std::vector<PrimeIdeal> ips(std::initializer_list<std::uint64_t> ps) {
  std::vector<PrimeIdeal> out;
  for (auto p : ps) out.push_back(ip(p));
  return out;
}

Ring branching_ring() {
  // 0 < q < m1, 0 < q < m2
  return Ring::synthetic(
      SpectrumPoset({"0", "q", "m1", "m2"}, std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {1, 2}, {1, 3}}));
}

}  // namespace

TEST(Leq, Examples) {
  EXPECT_TRUE(leq(Z, PrimeIdeal::zero(), ip(7)));
  EXPECT_FALSE(leq(Z, ip(2), ip(3)));
  EXPECT_FALSE(leq(Z, ip(7), PrimeIdeal::zero()));
  const Ring chain = Ring::synthetic(
      SpectrumPoset({"0", "p", "m"}, std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {1, 2}}));
  EXPECT_TRUE(leq(chain, PrimeIdeal::node(1), PrimeIdeal::node(2)));
  EXPECT_TRUE(leq(chain, PrimeIdeal::node(0), PrimeIdeal::node(2)));
  EXPECT_THROW(leq(Z, ip(4), ip(2)), InputError);
  EXPECT_THROW(leq(Z, PrimeIdeal::node(0), ip(2)), InputError);
}

TEST(PrimesUnder, Examples) {
  EXPECT_EQ(primes_under(Z, ip(5)), PrimeSet::of(Z, {PrimeIdeal::zero(), ip(5)}));
  const Ring z12 = Ring::integer_quotient(12);
  EXPECT_EQ(primes_under(z12, ip(3)), PrimeSet::of(z12, {ip(3)}));
  const Ring r = branching_ring();
  EXPECT_EQ(primes_under(r, PrimeIdeal::node(2)), PrimeSet::from_mask(r, 0b0111));
  EXPECT_THROW(primes_under(Z, PrimeIdeal::zero()), InputError);
  EXPECT_THROW(primes_under(r, PrimeIdeal::node(1)), InputError);
  EXPECT_THROW(primes_under(z12, ip(5)), InputError);
}

TEST(PrimesUnder, PolynomialRing) {
  const Ring f2 = Ring::poly_over_prime_field(2);
  const PrimeIdeal m = f2.parse_prime("(x^2+x+1)");
  EXPECT_EQ(f2.format(m), "(x^2+x+1)");
  EXPECT_EQ(primes_under(f2, m), PrimeSet::of(f2, {PrimeIdeal::zero(), m}));
  EXPECT_THROW(f2.parse_prime("x^2+1"), InputError);  // (x+1)^2
}

TEST(Hat, Examples) {
  EXPECT_EQ(hat(Z, ip(2), PrimeIdeal::zero()), PrimeIdeal::zero());
  EXPECT_EQ(hat(Z, ip(2), ip(2)), ip(2));
  const Ring r = branching_ring();
  EXPECT_EQ(hat(r, PrimeIdeal::node(2), PrimeIdeal::node(1)), PrimeIdeal::node(1));
  EXPECT_THROW(hat(r, PrimeIdeal::node(2), PrimeIdeal::node(3)), InputError);
  EXPECT_THROW(hat(Z, ip(2), ip(3)), InputError);
}

TEST(Hat, InvertsLocalizationOnRandomSpectra) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const auto raw = testsupport::random_poset(rng, 1 + rng() % 10, 0.3);
    const Ring r = testsupport::gorenstein_ring(raw);
    const auto leq_bf = testsupport::order_closure(raw);
    for (std::size_t m = 0; m < raw.size; ++m) {
      if (!r.is_maximal(PrimeIdeal::node(m))) continue;
      const PrimeSet down = primes_under(r, PrimeIdeal::node(m));
      for (std::size_t p = 0; p < raw.size; ++p) {
        EXPECT_EQ(down.contains(PrimeIdeal::node(p)), static_cast<bool>(leq_bf[p][m]));
        if (!leq_bf[p][m]) continue;
        const PrimeIdeal local = localize_prime(r, PrimeIdeal::node(m), PrimeIdeal::node(p));
        EXPECT_EQ(hat(r, PrimeIdeal::node(m), local), PrimeIdeal::node(p));
      }
    }
  }
}

TEST(IsLowerSet, Examples) {
  EXPECT_TRUE(is_lower_set(Z, PrimeSet::of(Z, {PrimeIdeal::zero(), ip(2), ip(3)})));
  EXPECT_FALSE(is_lower_set(Z, PrimeSet::of(Z, {ip(2)})));
  EXPECT_TRUE(is_lower_set(Z, PrimeSet::empty(Z)));
  EXPECT_TRUE(is_lower_set(Z, PrimeSet::of(Z, {PrimeIdeal::zero()})));
  EXPECT_FALSE(is_lower_set(Z, PrimeSet::all_maximal(Z)));
  const Ring chain = Ring::synthetic(
      SpectrumPoset({"0", "q", "m"}, std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {1, 2}}));
  EXPECT_FALSE(is_lower_set(chain, PrimeSet::from_mask(chain, 0b101)));
}

TEST(IsLowerSet, MatchesPairwiseDefinitionUpToTenNodes) {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + trial % 10;
    const auto raw = testsupport::random_poset(rng, n, 0.35);
    const Ring r = testsupport::gorenstein_ring(raw);
    const auto leq_bf = testsupport::order_closure(raw);
    for (NodeMask s = 0; s < (NodeMask{1} << n); ++s) {
      bool lower = true;
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          if (leq_bf[a][b] && ((s >> b) & 1U) && !((s >> a) & 1U)) lower = false;
        }
      }
      ASSERT_EQ(is_lower_set(r, PrimeSet::from_mask(r, s)), lower) << "mask " << s;
    }
  }
}

TEST(PrimeSetOps, CofiniteExamples) {
  const PrimeSet no2 = PrimeSet::dim_one(Z, false, true, ips({2}));
  const PrimeSet no3 = PrimeSet::dim_one(Z, false, true, ips({3}));
  EXPECT_EQ(no2 | PrimeSet::of(Z, {ip(2)}), PrimeSet::all_maximal(Z));
  EXPECT_EQ(no2 & no3, PrimeSet::dim_one(Z, false, true, ips({2, 3})));
  EXPECT_TRUE(PrimeSet::of(Z, {PrimeIdeal::zero()}).is_subset_of(PrimeSet::of(Z, {PrimeIdeal::zero(), ip(3)})));
  // Cofinite with empty complement is the same set as "all maximal ideals".
  EXPECT_EQ(PrimeSet::dim_one(Z, true, true, {}), PrimeSet::all(Z));
  EXPECT_EQ(PrimeSet::all(Z).complement(), PrimeSet::empty(Z));
  EXPECT_EQ(no2.format(), "mSpec \\ {(2)}");
}

TEST(PrimeSetOps, MixedRingsAreRejected) {
  const Ring f3 = Ring::poly_over_prime_field(3);
  EXPECT_THROW(PrimeSet::all(Z) | PrimeSet::all(f3), InputError);
  EXPECT_THROW(PrimeSet::of(Z, {PrimeIdeal::node(0)}), InputError);
}

namespace {

// Sets over Z with maximal parts drawn from a small window so that both finite
// and cofinite shapes occur; membership is probed on the window plus a prime
// outside it.
PrimeSet random_dim_one(std::mt19937_64& rng) {
  static const std::uint64_t window[] = {2, 3, 5, 7};
  std::vector<PrimeIdeal> listed;
  for (auto p : window) {
    if (rng() % 2) listed.push_back(ip(p));
  }
  return PrimeSet::dim_one(Z, rng() % 2, rng() % 2, listed);
}

std::vector<bool> membership(const PrimeSet& s) {
  std::vector<bool> out{s.contains(PrimeIdeal::zero())};
  for (auto p : {2, 3, 5, 7, 11}) out.push_back(s.contains(ip(p)));
  return out;
}

}  // namespace

TEST(PrimeSetOps, BooleanLawsOverIntegers) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 500; ++trial) {
    const PrimeSet a = random_dim_one(rng), b = random_dim_one(rng), c = random_dim_one(rng);
    const auto ma = membership(a), mb = membership(b);
    const auto mu = membership(a | b), mi = membership(a & b), mm = membership(a.minus(b)), mc = membership(a.complement());
    for (std::size_t k = 0; k < ma.size(); ++k) {
      EXPECT_EQ(mu[k], ma[k] || mb[k]);
      EXPECT_EQ(mi[k], ma[k] && mb[k]);
      EXPECT_EQ(mm[k], ma[k] && !mb[k]);
      EXPECT_EQ(mc[k], !ma[k]);
    }
    EXPECT_EQ(a | (b & c), (a | b) & (a | c));
    EXPECT_EQ(a & (b | c), (a & b) | (a & c));
    EXPECT_EQ((a | b).complement(), a.complement() & b.complement());
    EXPECT_EQ(a.complement().complement(), a);
    EXPECT_EQ(a | a.complement(), PrimeSet::all(Z));
    EXPECT_EQ(a.is_subset_of(b), (a & b) == a);
  }
}

TEST(PrimeSetOps, BooleanLawsOnFiniteSpectra) {
  std::mt19937_64 rng(22);
  const Ring z360 = Ring::integer_quotient(360);
  const Ring syn = testsupport::gorenstein_ring(testsupport::diamond(3));
  for (int trial = 0; trial < 300; ++trial) {
    const NodeMask x = rng() % 32, y = rng() % 32;
    EXPECT_EQ(PrimeSet::from_mask(syn, x) | PrimeSet::from_mask(syn, y), PrimeSet::from_mask(syn, x | y));
    EXPECT_EQ(PrimeSet::from_mask(syn, x) & PrimeSet::from_mask(syn, y), PrimeSet::from_mask(syn, x & y));
    EXPECT_EQ(PrimeSet::from_mask(syn, x).complement(), PrimeSet::from_mask(syn, ~x & 31));
  }
  const PrimeSet twos = PrimeSet::of(z360, {ip(2)});
  EXPECT_EQ(twos.complement(), PrimeSet::of(z360, {ip(3), ip(5)}));
  EXPECT_EQ(twos | twos.complement(), PrimeSet::all(z360));
  EXPECT_EQ(PrimeSet::all(z360).elements().size(), 3u);
}
