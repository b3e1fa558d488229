#include "hradon/linsolve.hpp"

namespace hradon {

namespace {

// Row-reduces in place; returns pivot column per pivot row.
std::vector<std::size_t> row_reduce(RatMat& a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
    std::size_t sel = row;
    while (sel < a.size() && a[sel][col].is_zero()) ++sel;
    if (sel == a.size()) continue;
    std::swap(a[row], a[sel]);
    if (a[row][col] != Rational(1)) {
      Rational inv = Rational(1) / a[row][col];
      for (std::size_t c = col; c < cols; ++c)
        if (!a[row][c].is_zero()) a[row][c] *= inv;
    }
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || a[r][col].is_zero()) continue;
      Rational f = a[r][col];
      for (std::size_t c = col; c < cols; ++c) {
        if (a[row][c].is_zero()) continue;
        a[r][c] -= f * a[row][c];
      }
    }
    pivots.push_back(col);
    ++row;
  }
  a.resize(row);
  return pivots;
}

}  // namespace

std::vector<RatVec> kernel_basis(RatMat a, std::size_t cols) {
  std::vector<std::size_t> pivots = row_reduce(a, cols);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<RatVec> basis;
  for (std::size_t free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    RatVec v(cols, Rational(0));
    v[free_col] = Rational(1);
    for (std::size_t prow = 0; prow < pivots.size(); ++prow)
      v[pivots[prow]] = -a[prow][free_col];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t matrix_rank(RatMat a) {
  if (a.empty()) return 0;
  return row_reduce(a, a[0].size()).size();
}

}  // namespace hradon
