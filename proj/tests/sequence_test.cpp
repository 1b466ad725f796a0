#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "cotilt/enumerate.hpp"
#include "cotilt/error.hpp"
#include "cotilt/sequence.hpp"
#include "support/posets.hpp"

using namespace cotilt;

namespace {

const Ring Z = Ring::integers();

PrimeIdeal ip(std::uint64_t p) { return PrimeIdeal::integer(p); }

std::vector<NodeMask> bass_masks(const Ring& r, std::size_t n) {
  std::vector<NodeMask> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(bass_assassinators(r, i).mask());
  return out;
}

std::vector<std::vector<NodeMask>> enumerated_masks(const Ring& r, std::size_t n) {
  std::vector<std::vector<NodeMask>> out;
  SequenceEnumerator e(r, n);
  while (e.next()) out.push_back(e.current_masks());
  return out;
}

bool has(const SequenceVerdict& v, Clause c, std::size_t index) {
  return std::any_of(v.violations.begin(), v.violations.end(),
                     [&](const SequenceViolation& x) { return x.clause == c && x.index == index; });
}

}  // namespace

TEST(BassData, BuiltIns) {
  EXPECT_EQ(bass_assassinators(Z, 0), PrimeSet::of(Z, {PrimeIdeal::zero()}));
  EXPECT_EQ(bass_assassinators(Z, 1), PrimeSet::all_maximal(Z));
  EXPECT_TRUE(bass_assassinators(Z, 2).is_empty());
  const Ring z36 = Ring::integer_quotient(36);
  EXPECT_EQ(bass_assassinators(z36, 0), PrimeSet::all(z36));
  EXPECT_TRUE(bass_assassinators(z36, 1).is_empty());
  const Ring chain = testsupport::gorenstein_ring(testsupport::chain(3), {"0", "p", "m"});
  EXPECT_EQ(bass_assassinators(chain, 2), PrimeSet::of(chain, {PrimeIdeal::node(2)}));
}

TEST(BassData, UndeclaredSyntheticIsAConfigError) {
  const Ring r = Ring::synthetic(SpectrumPoset({"a"}, {}));
  EXPECT_THROW(bass_assassinators(r, 0), ConfigError);
}

TEST(Validate, Examples) {
  EXPECT_TRUE(validate_sequence(CharacteristicSequence(Z, {PrimeSet::of(Z, {PrimeIdeal::zero(), ip(2)})})).ok());

  const auto bad = validate_sequence(CharacteristicSequence(Z, {PrimeSet::of(Z, {ip(2)})}));
  EXPECT_TRUE(has(bad, Clause::LowerSet, 0));
  EXPECT_TRUE(has(bad, Clause::Bass, 0));

  const PrimeSet all = PrimeSet::all(Z);
  const auto unnested = validate_sequence(CharacteristicSequence(Z, {all, PrimeSet::of(Z, {PrimeIdeal::zero()})}));
  EXPECT_TRUE(has(unnested, Clause::Nested, 0));
  EXPECT_TRUE(has(unnested, Clause::Bass, 1));
  EXPECT_EQ(unnested.violations.size(), 2u);
}

TEST(Validate, WitnessesAreReported) {
  const auto bad = validate_sequence(CharacteristicSequence(Z, {PrimeSet::of(Z, {ip(2)})}));
  for (const auto& v : bad.violations) {
    if (v.clause == Clause::LowerSet) {
      EXPECT_EQ(v.witness, PrimeIdeal::zero());
      EXPECT_EQ(v.above, ip(2));
    }
  }
  EXPECT_FALSE(format_violation(Z, bad.violations.front()).empty());
}

TEST(Validate, EmptyLevelIsANoteNotAViolation) {
  // Explicit Bass data that is empty at index 0.
  SpectrumPoset p({"a", "b"}, std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}});
  p.set_explicit_bass({{1, node_bit(0)}});
  const Ring r = Ring::synthetic(p);
  const auto v = validate_sequence(CharacteristicSequence(r, {PrimeSet::empty(r), PrimeSet::from_mask(r, 1)}));
  EXPECT_TRUE(v.ok());
  EXPECT_EQ(v.notes.size(), 1u);
}

TEST(Validate, LengthZeroIsValid) {
  EXPECT_TRUE(validate_sequence(CharacteristicSequence(Z, {})).ok());
}

TEST(Validate, ForeignLevelsAreAnInputError) {
  const Ring f2 = Ring::poly_over_prime_field(2);
  EXPECT_THROW(CharacteristicSequence(Z, {PrimeSet::all(f2)}), InputError);
}

TEST(Validate, DimensionOneClosedForm) {
  // Valid iff P_0 = {(0)} ∪ S and every later level is Spec R.
  std::mt19937_64 rng(5);
  const std::uint64_t window[] = {2, 3, 5, 7};
  auto random_level = [&]() {
    std::vector<PrimeIdeal> listed;
    for (auto p : window) {
      if (rng() % 2) listed.push_back(ip(p));
    }
    return PrimeSet::dim_one(Z, rng() % 4 != 0, rng() % 2, listed);
  };
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t n = 1 + rng() % 3;
    std::vector<PrimeSet> levels;
    for (std::size_t i = 0; i < n; ++i) levels.push_back(rng() % 3 == 0 ? PrimeSet::all(Z) : random_level());
    bool expected = levels[0].contains(PrimeIdeal::zero());
    for (std::size_t i = 1; i < n; ++i) expected = expected && levels[i] == PrimeSet::all(Z);
    EXPECT_EQ(validate_sequence(CharacteristicSequence(Z, levels)).ok(), expected);
  }
}

TEST(Enumerate, DedekindLikeExamples) {
  const Ring r = testsupport::gorenstein_ring(testsupport::dedekind_like(2), testsupport::dedekind_labels(2));
  EXPECT_EQ(enumerate_sequences(r, 1).size(), 4u);
  EXPECT_EQ(enumerate_sequences(r, 2).size(), 4u);
  EXPECT_EQ(count_sequences(r, 1), 4u);
  for (const auto& s : enumerate_sequences(r, 2)) EXPECT_EQ(s.level(1), PrimeSet::all(r));
  EXPECT_EQ(enumerate_sequences(r, 0).size(), 1u);
  EXPECT_EQ(count_sequences(r, 0), 1u);
}

TEST(Enumerate, BuiltInRingsAreUnsupported) {
  EXPECT_THROW(SequenceEnumerator(Z, 1), UnsupportedError);
  EXPECT_THROW(count_sequences(Ring::integer_quotient(6), 1), UnsupportedError);
}

TEST(Enumerate, SizeLimits) {
  const Ring big = testsupport::gorenstein_ring(testsupport::chain(21));
  EXPECT_THROW(count_sequences(big, 1), InputError);
  const Ring small = testsupport::gorenstein_ring(testsupport::chain(2));
  EXPECT_THROW(count_sequences(small, 9), InputError);
}

TEST(Enumerate, MatchesBruteForceFilterOnRandomSpectra) {
  std::mt19937_64 rng(2718);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t size = 1 + rng() % 8;
    const auto raw = testsupport::random_poset(rng, size, 0.1 + 0.1 * (rng() % 5));
    // Alternate Gorenstein heights with random explicit Bass data.
    SpectrumPoset poset(testsupport::numbered_labels(size), raw.less);
    if (trial % 2 == 0) {
      poset.set_gorenstein_heights();
    } else {
      std::map<std::size_t, NodeMask> bass;
      for (std::size_t i = 0; i < 3; ++i) bass[i] = rng() & ((NodeMask{1} << size) - 1) & rng();
      poset.set_explicit_bass(bass);
    }
    const Ring r = Ring::synthetic(poset);
    for (std::size_t n = 0; n <= 3; ++n) {
      const auto expected = testsupport::brute_force_sequences(raw, bass_masks(r, n), n);
      ASSERT_EQ(enumerated_masks(r, n), expected) << "trial " << trial << " n=" << n;
      ASSERT_EQ(count_sequences(r, n), expected.size());
    }
  }
}

TEST(Enumerate, EverySequenceValidatesAndIsDistinct) {
  const Ring r = testsupport::gorenstein_ring(testsupport::double_diamond());
  const auto all = enumerate_sequences(r, 3);
  for (std::size_t k = 0; k < all.size(); ++k) {
    EXPECT_TRUE(validate_sequence(all[k]).ok());
    if (k > 0) EXPECT_FALSE(all[k] == all[k - 1]);
  }
}

TEST(Enumerate, GorensteinHeightRule) {
  for (const auto& raw : {testsupport::chain(5), testsupport::diamond(3), testsupport::double_diamond()}) {
    const Ring r = testsupport::gorenstein_ring(raw);
    const auto heights = testsupport::brute_heights(raw);
    for (const auto& s : enumerate_sequences(r, 3)) {
      for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t v = 0; v < raw.size; ++v) {
          if (heights[v] <= i) EXPECT_TRUE(s.level(i).contains(PrimeIdeal::node(v)));
        }
      }
    }
  }
}

TEST(Enumerate, HeightsMatchLongestChains) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    const auto raw = testsupport::random_poset(rng, 1 + rng() % 12, 0.3);
    const Ring r = testsupport::gorenstein_ring(raw);
    EXPECT_EQ(r.poset().heights(), testsupport::brute_heights(raw));
  }
}
