#include <gtest/gtest.h>

#include "support/poset_census.hpp"

TEST(PosetCensus, CountsMatchKnownValues) {
  const auto census = testsupport::posets_up_to_isomorphism(6);
  const std::size_t known[] = {1, 2, 5, 16, 63, 318};
  ASSERT_EQ(census.size(), 6U);
  for (std::size_t k = 0; k < 6; ++k) EXPECT_EQ(census[k].size(), known[k]) << (k + 1) << " nodes";
}

TEST(PosetCensus, RelabelingGivesSameCode) {
  // 0 < 1, 0 < 2 and the same shape with the bottom relabeled as node 2.
  const testsupport::census_detail::Relation a{0b110, 0, 0};
  const testsupport::census_detail::Relation b{0, 0, 0b011};
  const testsupport::census_detail::Relation chain{0b110, 0b100, 0};
  EXPECT_EQ(testsupport::census_detail::canonical_code(a), testsupport::census_detail::canonical_code(b));
  EXPECT_NE(testsupport::census_detail::canonical_code(a), testsupport::census_detail::canonical_code(chain));
}
