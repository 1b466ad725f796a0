#include "cotilt/zhom/smith.hpp"

#include <optional>
#include <utility>

namespace cotilt::zhom {

namespace {

std::optional<std::pair<std::size_t, std::size_t>> smallest_entry(const IntMatrix& d, std::size_t t) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  for (std::size_t i = t; i < d.rows(); ++i) {
    for (std::size_t j = t; j < d.cols(); ++j) {
      if (d(i, j) == 0) continue;
      if (!best || abs(d(i, j)) < abs(d(best->first, best->second))) best = std::pair{i, j};
    }
  }
  return best;
}

/// q with |a - q b| ≤ |b| / 2.
Integer nearest_quotient(const Integer& a, const Integer& b) {
  Integer q = a / b;
  const Integer r = a - q * b;
  if (2 * abs(r) > abs(b)) q += sgn(r) * sgn(b);
  return q;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
  SmithForm f{IntMatrix::identity(a.rows()), a, IntMatrix::identity(a.cols())};
  IntMatrix& d = f.diagonal;
  const std::size_t limit = std::min(a.rows(), a.cols());

  auto swap_rows = [&](std::size_t x, std::size_t y) {
    d.swap_rows(x, y);
    f.left.swap_rows(x, y);
  };
  auto swap_cols = [&](std::size_t x, std::size_t y) {
    d.swap_cols(x, y);
    f.right.swap_cols(x, y);
  };
  auto add_rows = [&](std::size_t dst, std::size_t src, const Integer& k) {
    d.add_row_multiple(dst, src, k);
    f.left.add_row_multiple(dst, src, k);
  };
  auto add_cols = [&](std::size_t dst, std::size_t src, const Integer& k) {
    d.add_col_multiple(dst, src, k);
    f.right.add_col_multiple(dst, src, k);
  };

  for (std::size_t t = 0; t < limit; ++t) {
    for (;;) {
      // Re-picking the smallest entry each pass keeps coefficients from growing.
      const auto pivot = smallest_entry(d, t);
      if (!pivot) break;
      swap_rows(t, pivot->first);
      swap_cols(t, pivot->second);
      bool clear = true;
      for (std::size_t i = t + 1; i < d.rows(); ++i) {
        if (d(i, t) == 0) continue;
        add_rows(i, t, -nearest_quotient(d(i, t), d(t, t)));
        clear = clear && d(i, t) == 0;
      }
      for (std::size_t j = t + 1; j < d.cols(); ++j) {
        if (d(t, j) == 0) continue;
        add_cols(j, t, -nearest_quotient(d(t, j), d(t, t)));
        clear = clear && d(t, j) == 0;
      }
      if (!clear) continue;
      // Row and column are clear; the pivot must also divide the rest.
      std::optional<std::size_t> offending;
      for (std::size_t i = t + 1; i < d.rows() && !offending; ++i) {
        for (std::size_t j = t + 1; j < d.cols(); ++j) {
          if (d(i, j) % d(t, t) != 0) {
            offending = i;
            break;
          }
        }
      }
      if (!offending) break;
      add_rows(t, *offending, 1);
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      f.left.negate_row(t);
    }
  }
  return f;
}

std::vector<Integer> smith_diagonal(const IntMatrix& a) {
  const IntMatrix d = smith_normal_form(a).diagonal;
  std::vector<Integer> out;
  for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i) out.push_back(d(i, i));
  return out;
}

ColumnEchelon column_echelon(const IntMatrix& a) {
  ColumnEchelon e{a, IntMatrix::identity(a.cols()), 0, {}};
  IntMatrix& m = e.echelon;
  auto swap_cols = [&](std::size_t x, std::size_t y) {
    m.swap_cols(x, y);
    e.transform.swap_cols(x, y);
  };
  auto add_cols = [&](std::size_t dst, std::size_t src, const Integer& k) {
    m.add_col_multiple(dst, src, k);
    e.transform.add_col_multiple(dst, src, k);
  };

  std::size_t col = 0;
  for (std::size_t r = 0; r < m.rows() && col < m.cols(); ++r) {
    // Euclid across row r until only column `col` is nonzero there.
    for (;;) {
      std::optional<std::size_t> pivot;
      for (std::size_t j = col; j < m.cols(); ++j) {
        if (m(r, j) != 0 && (!pivot || abs(m(r, j)) < abs(m(r, *pivot)))) pivot = j;
      }
      if (!pivot) break;
      swap_cols(col, *pivot);
      bool remaining = false;
      for (std::size_t j = col + 1; j < m.cols(); ++j) {
        if (m(r, j) == 0) continue;
        add_cols(j, col, -nearest_quotient(m(r, j), m(r, col)));
        if (m(r, j) != 0) remaining = true;
      }
      if (!remaining) break;
    }
    if (m(r, col) == 0) continue;
    if (m(r, col) < 0) {
      m.negate_col(col);
      e.transform.negate_col(col);
    }
    e.pivot_rows.push_back(r);
    ++col;
  }
  e.rank = col;
  return e;
}

IntMatrix integer_kernel(const IntMatrix& a) {
  const ColumnEchelon e = column_echelon(a);
  IntMatrix k(a.cols(), a.cols() - e.rank);
  for (std::size_t i = 0; i < a.cols(); ++i) {
    for (std::size_t j = e.rank; j < a.cols(); ++j) k(i, j - e.rank) = e.transform(i, j);
  }
  return k;
}

}  // namespace cotilt::zhom
