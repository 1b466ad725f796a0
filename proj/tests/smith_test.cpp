#include <gtest/gtest.h>

#include <random>

#include "cotilt/zhom/smith.hpp"
#include "support/generators.hpp"

using cotilt::zhom::ColumnEchelon;
using cotilt::zhom::IntMatrix;
using cotilt::zhom::Integer;

namespace {

// Cofactor expansion; slow but shares nothing with the library code.
Integer laplace_det(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Integer total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      for (std::size_t c = 0, cc = 0; c < n; ++c) {
        if (c != j) minor(r - 1, cc++) = m(r, c);
      }
    }
    const Integer term = m(0, j) * laplace_det(minor);
    total += (j % 2 == 0) ? term : Integer(-term);
  }
  return total;
}

void choose(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
            std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    choose(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// Δ_k = gcd of all k×k minors; the Smith diagonal is Δ_k / Δ_{k-1}.
std::vector<Integer> determinantal_diagonal(const IntMatrix& a) {
  std::vector<Integer> delta{1};
  const std::size_t limit = std::min(a.rows(), a.cols());
  for (std::size_t k = 1; k <= limit; ++k) {
    std::vector<std::vector<std::size_t>> rows, cols;
    std::vector<std::size_t> cur;
    choose(a.rows(), k, 0, cur, rows);
    choose(a.cols(), k, 0, cur, cols);
    Integer g = 0;
    for (const auto& r : rows) {
      for (const auto& c : cols) {
        IntMatrix sub(k, k);
        for (std::size_t i = 0; i < k; ++i) {
          for (std::size_t j = 0; j < k; ++j) sub(i, j) = a(r[i], c[j]);
        }
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), Integer(laplace_det(sub)).get_mpz_t());
      }
    }
    delta.push_back(g);
  }
  std::vector<Integer> diag;
  for (std::size_t k = 1; k < delta.size(); ++k) diag.push_back(delta[k] == 0 ? Integer(0) : Integer(delta[k] / delta[k - 1]));
  return diag;
}

void expect_valid_smith_form(const IntMatrix& a) {
  const auto f = cotilt::zhom::smith_normal_form(a);
  EXPECT_EQ(f.left * a * f.right, f.diagonal) << a.format();
  EXPECT_TRUE(f.diagonal.is_diagonal());
  EXPECT_EQ(abs(laplace_det(f.left)), 1);
  EXPECT_EQ(abs(laplace_det(f.right)), 1);
  const std::size_t n = std::min(a.rows(), a.cols());
  for (std::size_t i = 0; i < n; ++i) {
    EXPECT_GE(f.diagonal(i, i), 0);
    if (i + 1 < n && f.diagonal(i, i) != 0) {
      EXPECT_EQ(f.diagonal(i + 1, i + 1) % f.diagonal(i, i), 0) << a.format();
    }
    if (i + 1 < n && f.diagonal(i, i) == 0) EXPECT_EQ(f.diagonal(i + 1, i + 1), 0);
  }
}

}  // namespace

TEST(SmithNormalForm, DiagonalTwoThree) {
  const IntMatrix a{{2, 0}, {0, 3}};
  const auto f = cotilt::zhom::smith_normal_form(a);
  EXPECT_EQ(f.diagonal, (IntMatrix{{1, 0}, {0, 6}}));
  EXPECT_EQ(determinantal_diagonal(a), (std::vector<Integer>{1, 6}));
}

TEST(SmithNormalForm, IdentityAndZero) {
  EXPECT_EQ(cotilt::zhom::smith_normal_form(IntMatrix::identity(4)).diagonal, IntMatrix::identity(4));
  EXPECT_EQ(cotilt::zhom::smith_normal_form(IntMatrix(3, 5)).diagonal, IntMatrix(3, 5));
}

TEST(SmithNormalForm, EmptyShapes) {
  expect_valid_smith_form(IntMatrix(0, 3));
  expect_valid_smith_form(IntMatrix(3, 0));
}

TEST(SmithNormalForm, RandomMatricesSatisfyAllProperties) {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<std::size_t> dim(1, 6);
  for (int trial = 0; trial < 300; ++trial) {
    const IntMatrix a = testsupport::random_matrix(rng, dim(rng), dim(rng), 50);
    expect_valid_smith_form(a);
  }
}

TEST(SmithNormalForm, DiagonalMatchesDeterminantalDivisors) {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<std::size_t> dim(1, 4);
  for (int trial = 0; trial < 150; ++trial) {
    // Low-rank products exercise zero divisors.
    IntMatrix a = testsupport::random_matrix(rng, dim(rng), 2, 6) * testsupport::random_matrix(rng, 2, dim(rng), 6);
    if (trial % 2 == 0) a = testsupport::random_matrix(rng, a.rows(), a.cols(), 50);
    EXPECT_EQ(cotilt::zhom::smith_diagonal(a), determinantal_diagonal(a)) << a.format();
  }
}

TEST(SmithNormalForm, BareissDeterminantMatchesCofactorExpansion) {
  std::mt19937_64 rng(5);
  for (std::size_t n = 0; n <= 5; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      const IntMatrix a = testsupport::random_matrix(rng, n, n, 9);
      EXPECT_EQ(a.determinant(), laplace_det(a));
    }
  }
}

TEST(ColumnEchelon, KernelIsExactlyTheNullLattice) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<std::size_t> dim(1, 5);
  for (int trial = 0; trial < 200; ++trial) {
    const IntMatrix a = testsupport::random_matrix(rng, dim(rng), 2, 4) * testsupport::random_matrix(rng, 2, dim(rng), 4);
    const ColumnEchelon e = cotilt::zhom::column_echelon(a);
    EXPECT_EQ(a * e.transform, e.echelon);
    EXPECT_EQ(abs(laplace_det(e.transform)), 1);
    for (std::size_t j = 0; j < e.rank; ++j) {
      EXPECT_GT(e.echelon(e.pivot_rows[j], j), 0);
      for (std::size_t i = 0; i < e.pivot_rows[j]; ++i) EXPECT_EQ(e.echelon(i, j), 0);
      if (j > 0) EXPECT_GT(e.pivot_rows[j], e.pivot_rows[j - 1]);
    }
    const IntMatrix k = cotilt::zhom::integer_kernel(a);
    EXPECT_TRUE((a * k).is_zero());
    // Rank–nullity: the kernel basis has the complementary size.
    EXPECT_EQ(k.cols() + e.rank, a.cols());
    std::size_t nonzero = 0;
    for (const auto& d : cotilt::zhom::smith_diagonal(a)) nonzero += d != 0 ? 1 : 0;
    EXPECT_EQ(e.rank, nonzero);
  }
}

TEST(IntMatrixOps, KroneckerLayout) {
  const IntMatrix a{{1, 2}, {3, 4}};
  const IntMatrix b{{0, 5}, {6, 7}};
  const IntMatrix k = cotilt::zhom::kron(a, b);
  EXPECT_EQ(k, (IntMatrix{{0, 5, 0, 10}, {6, 7, 12, 14}, {0, 15, 0, 20}, {18, 21, 24, 28}}));
}
