#ifndef VINBERG_LATTICE_HPP_
#define VINBERG_LATTICE_HPP_

// Exact arithmetic in the lattice Z^{n+1} equipped with the diagonal form
//   (x, y) = -phi * x0 * y0 + x1 * y1 + ... + xn * yn.
//
// Coordinates are 64-bit integers.  Every product and sum goes through a
// checked path, so a result is either exact or an OverflowError is thrown.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "vinberg/errors.hpp"
#include "vinberg/rational.hpp"

namespace vinberg {

using Coord = std::int64_t;

class QuadraticForm {
public:
  // Throws ConfigError unless phi >= 1 and n >= 2.
  QuadraticForm(Coord phi, int n);

  Coord phi() const { return phi_; }
  int dim() const { return n_; }
  // Number of coordinates, n + 1.
  std::size_t size() const { return static_cast<std::size_t>(n_) + 1; }

  friend bool operator==(const QuadraticForm&, const QuadraticForm&) = default;

private:
  Coord phi_;
  int n_;
};

class LatticeVector {
public:
  LatticeVector() = default;
  explicit LatticeVector(std::vector<Coord> coords) : coords_(std::move(coords)) {}
  LatticeVector(std::initializer_list<Coord> coords) : coords_(coords) {}

  // Zero vector with `size` coordinates.
  static LatticeVector zero(std::size_t size) { return LatticeVector(std::vector<Coord>(size, 0)); }

  std::size_t size() const { return coords_.size(); }
  Coord operator[](std::size_t i) const { return coords_[i]; }
  Coord& operator[](std::size_t i) { return coords_[i]; }
  std::span<const Coord> coords() const { return coords_; }
  bool is_zero() const;

  friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
  friend auto operator<=>(const LatticeVector&, const LatticeVector&) = default;

private:
  std::vector<Coord> coords_;
};

// "(k0, k1, ..., kn)"
std::string to_string(const LatticeVector& v);

Coord inner_product(const QuadraticForm& form, const LatticeVector& x, const LatticeVector& y);
Coord norm(const QuadraticForm& form, const LatticeVector& x);

// Rational extension of the bilinear form, used for reflected vectors.
Rational inner_product(const QuadraticForm& form, const RationalVector& x, const RationalVector& y);

// gcd of the absolute coordinates is 1.  Throws ZeroVectorError on 0.
bool is_primitive(const LatticeVector& x);

// A lattice vector of positive norm together with that norm.  Construction
// through `make` checks primitivity, positivity and the crystallographic
// condition; the unchecked constructor is for callers that already did.
struct Root {
  LatticeVector vector;
  Coord norm = 0;

  static Root make(const QuadraticForm& form, LatticeVector v);

  std::size_t size() const { return vector.size(); }
  Coord operator[](std::size_t i) const { return vector[i]; }

  friend bool operator==(const Root&, const Root&) = default;
};

// The reflection x - 2 (x, e) / (e, e) e.  Coordinates are rational in
// general; they are integral whenever crystallographic_ok(form, root).
RationalVector reflect(const QuadraticForm& form, const Root& root, const LatticeVector& x);
RationalVector reflect(const QuadraticForm& form, const Root& root, const RationalVector& x);

// (e, e) divides 2 k_j for j >= 1 and 2 phi k_0: the reflection in e maps
// Z^{n+1} to itself.
bool crystallographic_ok(const QuadraticForm& form, const Root& root);

// Divisors of 2 phi in increasing order.  Every root norm lies in this set;
// crystallographic_ok stays the authoritative per-root filter.
std::vector<Coord> admissible_norms(const QuadraticForm& form);

RationalVector to_rational(const LatticeVector& v);

namespace checked {
Coord mul(Coord a, Coord b);
Coord add(Coord a, Coord b);
} // namespace checked

} // namespace vinberg

#endif
