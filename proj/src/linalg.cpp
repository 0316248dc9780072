#include "vinberg/linalg.hpp"

#include <utility>

namespace vinberg {

std::vector<std::size_t> RowEchelon::free_columns() const {
  std::vector<std::size_t> out;
  std::size_t p = 0;
  for (std::size_t c = 0; c < columns; ++c) {
    if (p < pivots.size() && pivots[p] == c)
      ++p;
    else
      out.push_back(c);
  }
  return out;
}

RowEchelon row_reduce(RationalMatrix m, std::size_t columns) {
  for (const auto& row : m)
    if (row.size() != columns)
      throw DimensionError("ragged matrix in row reduction");
  RowEchelon out;
  out.columns = columns;
  std::size_t row = 0;
  for (std::size_t col = 0; col < columns && row < m.size(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.size() && m[pivot][col] == 0)
      ++pivot;
    if (pivot == m.size())
      continue;
    std::swap(m[row], m[pivot]);
    Rational inv = 1 / m[row][col];
    for (auto& x : m[row])
      x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0)
        continue;
      Rational f = m[r][col];
      for (std::size_t c = col; c < columns; ++c)
        m[r][c] -= f * m[row][c];
    }
    out.pivots.push_back(col);
    ++row;
  }
  m.resize(row);
  out.reduced = std::move(m);
  return out;
}

RationalMatrix nullspace(const RowEchelon& echelon) {
  RationalMatrix basis;
  for (std::size_t free : echelon.free_columns()) {
    RationalVector v(echelon.columns, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < echelon.pivots.size(); ++r)
      v[echelon.pivots[r]] = -echelon.reduced[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

BigInt determinant(const IntMatrix& input) {
  const std::size_t n = input.size();
  if (n == 0)
    return 1;
  std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (input[i].size() != n)
      throw DimensionError("determinant of a non-square matrix");
    for (std::size_t j = 0; j < n; ++j)
      a[i][j] = input[i][j];
  }
  BigInt sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a[swap][k] == 0)
        ++swap;
      if (swap == n)
        return 0;
      std::swap(a[k], a[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

std::vector<BigInt> characteristic_polynomial(const IntMatrix& m) {
  // Berkowitz: builds the coefficient vector of det(x I - M) from the
  // Toeplitz products of successively larger leading blocks.
  const std::size_t n = m.size();
  std::vector<BigInt> poly{1}; // char poly of the empty matrix, highest degree first
  for (std::size_t r = 0; r < n; ++r) {
    // Block A_r = m[0..r-1][0..r-1], column C = m[0..r-1][r], row R = m[r][0..r-1].
    std::vector<BigInt> toeplitz_col(r + 2);
    toeplitz_col[0] = 1;
    toeplitz_col[1] = -m[r][r];
    std::vector<BigInt> vec(r); // A^k C
    for (std::size_t i = 0; i < r; ++i)
      vec[i] = m[i][r];
    for (std::size_t k = 2; k < r + 2; ++k) {
      BigInt dot = 0;
      for (std::size_t i = 0; i < r; ++i)
        dot += BigInt(m[r][i]) * vec[i];
      toeplitz_col[k] = -dot;
      std::vector<BigInt> next(r, 0);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
          next[i] += BigInt(m[i][j]) * vec[j];
      vec = std::move(next);
    }
    std::vector<BigInt> out(r + 2, 0);
    for (std::size_t i = 0; i < r + 2; ++i)
      for (std::size_t j = 0; j <= i && j < poly.size(); ++j)
        out[i] += toeplitz_col[i - j] * poly[j];
    poly = std::move(out);
  }
  // Reverse to lowest-degree-first.
  return std::vector<BigInt>(poly.rbegin(), poly.rend());
}

namespace {

std::size_t sign_changes(const std::vector<BigInt>& coeffs) {
  std::size_t changes = 0;
  int last = 0;
  for (const auto& c : coeffs) {
    int s = c.sign();
    if (s == 0)
      continue;
    if (last != 0 && s != last)
      ++changes;
    last = s;
  }
  return changes;
}

} // namespace

Inertia inertia(const IntMatrix& symmetric) {
  auto poly = characteristic_polynomial(symmetric);
  Inertia out;
  std::size_t lowest = 0;
  while (lowest < poly.size() && poly[lowest] == 0)
    ++lowest;
  out.zero = lowest;
  std::vector<BigInt> shifted(poly.begin() + static_cast<std::ptrdiff_t>(lowest), poly.end());
  out.positive = sign_changes(shifted);
  for (std::size_t i = 1; i < shifted.size(); i += 2)
    shifted[i] = -shifted[i];
  out.negative = sign_changes(shifted);
  return out;
}

IntMatrix principal_submatrix(const IntMatrix& m, const std::vector<std::size_t>& rows) {
  IntMatrix out(rows.size(), std::vector<Coord>(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j)
      out[i][j] = m[rows[i]][rows[j]];
  return out;
}

} // namespace vinberg
