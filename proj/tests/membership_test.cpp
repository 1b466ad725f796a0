#include <gtest/gtest.h>

#include "cotilt/error.hpp"
#include "cotilt/family.hpp"
#include "cotilt/zhom/membership.hpp"

using namespace cotilt;
using zhom::FgZModule;
using zhom::Integer;

namespace {

const Ring Z = Ring::integers();

FgZModule zmod(long n) { return FgZModule::cyclic(Integer(n)); }
PrimeIdeal p(std::uint64_t v) { return PrimeIdeal::integer(v); }

/// {(0)} together with the listed maximal ideals.
PrimeSet zero_and(std::initializer_list<std::uint64_t> primes) {
  std::vector<PrimeIdeal> max;
  for (auto v : primes) max.push_back(p(v));
  return PrimeSet::dim_one(Z, true, false, max);
}

CharacteristicSequence seq(std::vector<PrimeSet> levels) { return CharacteristicSequence(Z, std::move(levels)); }

}  // namespace

TEST(AssCosyzygy, ClosedForms) {
  EXPECT_EQ(zhom::ass_cosyzygy(FgZModule::free(1), 1), PrimeSet::all_maximal(Z));
  EXPECT_EQ(zhom::ass_cosyzygy(FgZModule::free(1), 0), PrimeSet::of(Z, {PrimeIdeal::zero()}));
  EXPECT_EQ(zhom::ass_cosyzygy(zmod(9), 0), PrimeSet::of(Z, {p(3)}));
  EXPECT_EQ(zhom::ass_cosyzygy(zmod(9), 1), PrimeSet::of(Z, {p(3)}));
  EXPECT_TRUE(zhom::ass_cosyzygy(zmod(9), 2).is_empty());
  const zhom::MatlisModule dual{1, zmod(6)};
  EXPECT_EQ(zhom::ass_cosyzygy(dual, 0), PrimeSet::all_maximal(Z));
  EXPECT_EQ(zhom::ass_cosyzygy(dual, 1), PrimeSet::of(Z, {p(2), p(3)}));
}

TEST(Cotilting, Examples) {
  EXPECT_TRUE(zhom::cotilting_membership(zmod(9), seq({zero_and({3})})));
  EXPECT_FALSE(zhom::cotilting_membership(FgZModule::free(1) + zmod(4), seq({zero_and({3})})));
  const auto full = PrimeSet::all(Z);
  EXPECT_TRUE(zhom::cotilting_membership(FgZModule::free(2) + zmod(12), seq({full, full, full})));
}

TEST(Cotilting, InvalidSequenceIsAPreconditionFailure) {
  EXPECT_THROW(zhom::cotilting_membership(zmod(9), seq({PrimeSet::of(Z, {p(3)})})), PreconditionError);
}

TEST(Cotilting, RingMismatch) {
  const Ring q = Ring::poly_over_prime_field(2);
  const CharacteristicSequence s(q, {PrimeSet::all(q)});
  EXPECT_THROW(zhom::cotilting_membership(zmod(9), s), InputError);
  EXPECT_THROW(zhom::tilting_membership(zmod(9), s), InputError);
}

TEST(Tilting, Examples) {
  EXPECT_TRUE(zhom::tilting_membership(zmod(8), seq({zero_and({2})})));
  EXPECT_FALSE(zhom::tilting_membership(zmod(6), seq({zero_and({2})})));
  EXPECT_TRUE(zhom::tilting_membership(FgZModule::free(1), seq({PrimeSet::all(Z)})));
  EXPECT_FALSE(zhom::tilting_membership(FgZModule::free(1), seq({zero_and({2})})));
}

TEST(Tilting, CofiniteLevelsUseTheDefaultClass) {
  // P_0 excludes only (3): Z/4 passes, Z/3 fails, Z fails.
  const PrimeSet level = PrimeSet::dim_one(Z, true, true, std::vector{p(3)});
  EXPECT_TRUE(zhom::tilting_membership(zmod(4), seq({level})));
  EXPECT_FALSE(zhom::tilting_membership(zmod(3), seq({level})));
  EXPECT_FALSE(zhom::tilting_membership(FgZModule::free(1), seq({level})));
}

TEST(Tilting, LongerSequences) {
  // Over Z every valid P_1 contains all maximal ideals, so only degree 0 can exclude.
  const PrimeSet full = PrimeSet::all(Z);
  const PrimeSet level0 = PrimeSet::dim_one(Z, true, true, std::vector{p(5)});
  EXPECT_TRUE(zhom::tilting_membership(FgZModule::free(1) + zmod(5), seq({full, full})));
  EXPECT_FALSE(zhom::tilting_membership(zmod(5), seq({level0, full})));
  EXPECT_TRUE(zhom::tilting_membership(zmod(7), seq({level0, full, full})));
}
