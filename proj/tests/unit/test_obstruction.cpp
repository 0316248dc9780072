#include <doctest.h>

#include <random>

#include "support/reference_roots.hpp"
#include "vinberg/obstruction.hpp"

using namespace vinberg;

namespace {

LatticeVector combine(const std::vector<LatticeVector>& basis, const std::vector<Coord>& coeffs) {
  LatticeVector out = LatticeVector::zero(basis[0].size());
  for (std::size_t b = 0; b < basis.size(); ++b)
    for (std::size_t i = 0; i < out.size(); ++i)
      out[i] += coeffs[b] * basis[b][i];
  return out;
}

const ComponentType kE6{'E', 6, true};

} // namespace

TEST_CASE("certificates for n = 14, 15, 16 and 20") {
  struct Expect {
    int n;
    const char* tag;
    std::optional<ComponentType> forced;
    Coord forced_norm;
  };
  for (const Expect& x : {Expect{14, "n=14", std::nullopt, 0}, Expect{15, "n=15", ComponentType{'A', 1, true}, 1},
                          Expect{16, "n=16", ComponentType{'C', 2, true}, 2},
                          Expect{20, "n>=17", ComponentType{'B', 6, true}, 2}}) {
    CAPTURE(x.n);
    const QuadraticForm f(3, x.n);
    const ObstructionCertificate c = certify_nonreflective(f);
    CHECK(c.n == x.n);
    CHECK(c.case_tag == x.tag);
    CHECK(c.gamma_p.rank == 12);
    CHECK(c.gamma_p.components == std::vector<ComponentType>{kE6, kE6});
    CHECK(c.gamma_p.subset.size() == 14);
    CHECK(c.norm_identity == "3(p-2q)^2 + sum_{i>=15} k_i^2");
    CHECK(c.forced_component == x.forced);
    if (x.forced) {
      REQUIRE(c.forced_root);
      CHECK(c.forced_root->norm == x.forced_norm);
      CHECK(c.extended_rank == 12 + x.forced->rank());
      CHECK(c.extended_rank < x.n - 1);
    }
    CHECK(c.norm_checks.size() == 4);
    for (const auto& k : c.norm_checks)
      CHECK_FALSE(k.solvable);

    const auto four = testing::first_four_roots(x.n);
    REQUIRE(c.interim_roots.size() == static_cast<std::size_t>(x.n) + 4);
    for (std::size_t i = 0; i < 4; ++i)
      CHECK(c.interim_roots[x.n + i].vector == four[i].vector);

    // Every family vector is orthogonal to all of Gamma_p.
    for (const auto& b : c.family_basis)
      c.gamma_p.subset.for_each([&](std::size_t v) { CHECK(inner_product(f, b, c.interim_roots[v].vector) == 0); });
  }
}

TEST_CASE("norm identity on random family members") {
  for (int n : {14, 15, 17, 20}) {
    const QuadraticForm f(3, n);
    const ObstructionCertificate c = certify_nonreflective(f);
    REQUIRE(c.family_basis.size() == static_cast<std::size_t>(n) - 12);
    std::mt19937_64 rng(static_cast<std::uint64_t>(n));
    std::uniform_int_distribution<Coord> coord(-40, 40);
    for (int t = 0; t < 500; ++t) {
      std::vector<Coord> coeffs(c.family_basis.size());
      for (auto& x : coeffs)
        x = coord(rng);
      const Coord p = coeffs[0], q = coeffs[1];
      Coord expected = 3 * (p - 2 * q) * (p - 2 * q);
      for (std::size_t i = 2; i < coeffs.size(); ++i)
        expected += coeffs[i] * coeffs[i];
      CHECK(norm(f, combine(c.family_basis, coeffs)) == expected);
    }
  }
}

TEST_CASE("no root of the n = 14 family is admissible") {
  // Independent sweep: a wall completing the polyhedron would be a
  // primitive crystallographic root of norm 1, 2, 3 or 6 in the family.
  const QuadraticForm f(3, 14);
  const ObstructionCertificate c = certify_nonreflective(f);
  for (Coord p = -30; p <= 30; ++p)
    for (Coord q = -30; q <= 30; ++q) {
      if (p == 0 && q == 0)
        continue;
      const LatticeVector e = combine(c.family_basis, {p, q});
      const Coord d = norm(f, e);
      if (d <= 0 || !is_primitive(e))
        continue;
      CHECK_FALSE(crystallographic_ok(f, Root{e, d}));
    }
}

TEST_CASE("the final n = 13 diagram has no obstruction") {
  const RunReport r = run(QuadraticForm(3, 13));
  CHECK(obstructing_parabolics(r.diagram, r.gram, 13).empty());
  CHECK_FALSE(find_obstructing_parabolic(r.diagram, r.gram, 13));
}

TEST_CASE("the n = 14 interim diagram is obstructed by two ~E6") {
  const RunReport r = run(QuadraticForm(3, 14), Budget{18});
  const auto gp = find_obstructing_parabolic(r.diagram, r.gram, 14, std::vector<ComponentType>{kE6, kE6});
  REQUIRE(gp);
  CHECK(gp->rank == 12);
  const auto all = obstructing_parabolics(r.diagram, r.gram, 14);
  CHECK_FALSE(all.empty());
  for (std::size_t i = 1; i < all.size(); ++i)
    CHECK(all[i - 1].rank >= all[i].rank);
}

TEST_CASE("orthogonal constraints") {
  const QuadraticForm f(3, 4);
  const auto roots = initial_roots(f);
  const OrthogonalFamily none = orthogonal_constraints(f, roots, VertexSet{});
  CHECK(none.basis.size() == 5);
  const OrthogonalFamily all = orthogonal_constraints(f, roots, VertexSet::range(4));
  CHECK(all.basis.size() == 1);
  CHECK(all.basis[0][1] == 0);
  CHECK(all.basis[0][0] != 0);
}

TEST_CASE("certification preconditions") {
  CHECK_THROWS_AS(certify_nonreflective(QuadraticForm(3, 13)), ConfigError);
  CHECK_THROWS_AS(certify_nonreflective(QuadraticForm(2, 14)), ConfigError);
}
