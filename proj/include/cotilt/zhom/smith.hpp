#pragma once

#include <cstddef>
#include <vector>

#include "cotilt/zhom/int_matrix.hpp"

namespace cotilt::zhom {

/// left * input * right == diagonal, with left and right unimodular and the
/// diagonal entries d_0 | d_1 | ... non-negative (zeros last).
struct SmithForm {
  IntMatrix left;
  IntMatrix diagonal;
  IntMatrix right;
};

SmithForm smith_normal_form(const IntMatrix& a);

/// Diagonal of the Smith form, length min(rows, cols).
std::vector<Integer> smith_diagonal(const IntMatrix& a);

/// input * transform == echelon, where the first `rank` columns of echelon
/// have strictly increasing pivot rows (positive pivots, zeros above) and the
/// remaining columns vanish. The trailing columns of transform span the
/// integer kernel.
struct ColumnEchelon {
  IntMatrix echelon;
  IntMatrix transform;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_rows;
};

ColumnEchelon column_echelon(const IntMatrix& a);

/// Basis of {v ∈ Z^cols : a v = 0}, as columns.
IntMatrix integer_kernel(const IntMatrix& a);

}  // namespace cotilt::zhom
