#include <doctest.h>

#include <numeric>
#include <random>

#include "vinberg/lattice.hpp"

using namespace vinberg;

namespace {

LatticeVector basis(std::size_t size, std::size_t i, Coord value = 1) {
  LatticeVector v = LatticeVector::zero(size);
  v[i] = value;
  return v;
}

// Norms d for which some primitive crystallographic vector can exist:
// d | 2 phi k0 and d | 2 k_j with gcd(k) = 1 force d | 2 phi.
std::vector<Coord> divisor_oracle(Coord phi) {
  std::vector<Coord> out;
  for (Coord d = 1; d <= 2 * phi; ++d)
    if ((2 * phi) % d == 0)
      out.push_back(d);
  return out;
}

} // namespace

TEST_CASE("inner products of the diagonal form") {
  const QuadraticForm f(3, 3);
  CHECK(inner_product(f, basis(4, 0), basis(4, 0)) == -3);
  CHECK(norm(f, LatticeVector{1, 3, 0, 0}) == 6);
  CHECK(inner_product(f, LatticeVector{1, 3, 0, 0}, LatticeVector{0, -1, 1, 0}) == -3);
  CHECK(norm(f, LatticeVector{0, 0, 0, -1}) == 1);

  const QuadraticForm f13(3, 13);
  CHECK(norm(f13, LatticeVector{1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0}) == 2);
  CHECK(norm(f13, LatticeVector{2, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0, 0}) == 2);
}

TEST_CASE("mismatched sizes are rejected") {
  const QuadraticForm f(3, 3);
  CHECK_THROWS_AS(inner_product(f, LatticeVector{1, 0, 0}, LatticeVector{1, 0, 0, 0}), DimensionError);
  CHECK_THROWS_AS(norm(f, LatticeVector{1, 0, 0}), DimensionError);
}

TEST_CASE("invalid forms are rejected") {
  CHECK_THROWS_AS(QuadraticForm(0, 3), ConfigError);
  CHECK_THROWS_AS(QuadraticForm(3, 1), ConfigError);
}

TEST_CASE("primitivity") {
  CHECK(is_primitive(LatticeVector{1, 3, 0, 0}));
  CHECK_FALSE(is_primitive(LatticeVector{2, 6, 0, 0}));
  CHECK(is_primitive(LatticeVector{5, 3, 3, 3, 3, 3, 3, 3, 3, 3, 0}));
  CHECK(is_primitive(LatticeVector{0, -1, 0}));
  CHECK_THROWS_AS(is_primitive(LatticeVector{0, 0, 0}), ZeroVectorError);
}

TEST_CASE("reflections") {
  const QuadraticForm f(3, 3);
  const Root e = Root::make(f, LatticeVector{1, 3, 0, 0});
  CHECK(e.norm == 6);

  RationalVector minus_e;
  for (Coord c : e.vector.coords())
    minus_e.push_back(Rational(-c));
  CHECK(reflect(f, e, e.vector) == minus_e);

  const RationalVector r = reflect(f, e, basis(4, 1));
  CHECK(r == to_rational(LatticeVector{-1, -2, 0, 0}));

  std::mt19937_64 rng(7);
  std::uniform_int_distribution<Coord> coord(-30, 30);
  for (int t = 0; t < 200; ++t) {
    LatticeVector x = LatticeVector::zero(4);
    for (std::size_t i = 0; i < 4; ++i)
      x[i] = coord(rng);
    CHECK(reflect(f, e, reflect(f, e, x)) == to_rational(x));
  }
}

TEST_CASE("crystallographic condition") {
  const QuadraticForm f(3, 5);
  CHECK(crystallographic_ok(f, Root{LatticeVector{1, 3, 0, 0, 0, 0}, 6}));
  CHECK(crystallographic_ok(f, Root{LatticeVector{1, 1, 1, 1, 1, 1}, 2}));
  CHECK(crystallographic_ok(f, Root{LatticeVector{1, 1, 1, 1, 0, 0}, 1}));
  CHECK_FALSE(crystallographic_ok(f, Root{LatticeVector{1, 2, 1, 1, 1, 0}, 4}));
  // Norm 6 with a coordinate not divisible by 3.
  CHECK_FALSE(crystallographic_ok(f, Root{LatticeVector{1, 2, 1, 1, 1, 1}, 5}));
}

TEST_CASE("Root::make validates its input") {
  const QuadraticForm f(3, 3);
  CHECK_THROWS_AS(Root::make(f, LatticeVector{0, 0, 0, 0}), ZeroVectorError);
  CHECK_THROWS_AS(Root::make(f, LatticeVector{2, 6, 0, 0}), ConfigError);
  CHECK_THROWS_AS(Root::make(f, LatticeVector{1, 0, 0, 0}), ConfigError);
  CHECK_THROWS_AS(Root::make(f, LatticeVector{0, 1, 1}), DimensionError);
}

TEST_CASE("admissible norms match a divisor enumeration") {
  CHECK(admissible_norms(QuadraticForm(3, 4)) == std::vector<Coord>{1, 2, 3, 6});
  CHECK(admissible_norms(QuadraticForm(1, 4)) == std::vector<Coord>{1, 2});
  CHECK(admissible_norms(QuadraticForm(2, 4)) == std::vector<Coord>{1, 2, 4});
  for (Coord phi = 1; phi <= 60; ++phi)
    CHECK(admissible_norms(QuadraticForm(phi, 3)) == divisor_oracle(phi));
}

TEST_CASE("checked arithmetic reports overflow") {
  const Coord big = std::numeric_limits<Coord>::max();
  CHECK_THROWS_AS(checked::mul(big, 2), OverflowError);
  CHECK_THROWS_AS(checked::add(big, 1), OverflowError);
  CHECK(checked::mul(-3, 7) == -21);
  const QuadraticForm f(3, 2);
  CHECK_THROWS_AS(norm(f, LatticeVector{0, big / 2, big / 2}), OverflowError);
}

TEST_CASE("rational strings") {
  CHECK(to_string(make_rational(6, 4)) == "3/2");
  CHECK(to_string(make_rational(-4, 2)) == "-2");
  CHECK(parse_rational("-3/4") == make_rational(-3, 4));
  CHECK(parse_rational("17") == make_rational(17));
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("x"));
}
