#ifndef VINBERG_LINALG_HPP_
#define VINBERG_LINALG_HPP_

// Exact linear algebra over Z and Q.  Nothing here rounds.

#include <cstddef>
#include <vector>

#include "vinberg/lattice.hpp"
#include "vinberg/rational.hpp"

namespace vinberg {

using RationalMatrix = std::vector<RationalVector>;
using IntMatrix = std::vector<std::vector<Coord>>;

struct RowEchelon {
  RationalMatrix reduced; // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;
  std::size_t columns = 0;

  std::size_t rank() const { return pivots.size(); }
  std::vector<std::size_t> free_columns() const;
};

RowEchelon row_reduce(RationalMatrix m, std::size_t columns);

// One basis vector per free column of the reduced form, with that free
// variable set to 1 and the other free variables set to 0.
RationalMatrix nullspace(const RowEchelon& echelon);

// Fraction-free (Bareiss) determinant.
BigInt determinant(const IntMatrix& m);

// Counts of positive, zero and negative eigenvalues of a symmetric matrix.
struct Inertia {
  std::size_t positive = 0, zero = 0, negative = 0;
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

// Uses the characteristic polynomial (Berkowitz, division free) and
// Descartes' rule of signs, which is exact for real-rooted polynomials.
Inertia inertia(const IntMatrix& symmetric);

// Coefficients c_0..c_m of det(x I - M), c_m = 1.
std::vector<BigInt> characteristic_polynomial(const IntMatrix& m);

IntMatrix principal_submatrix(const IntMatrix& m, const std::vector<std::size_t>& rows);

} // namespace vinberg

#endif
