#include <doctest.h>

#include "support/reference_roots.hpp"
#include "vinberg/engine.hpp"

using namespace vinberg;
using vinberg::testing::runs;

namespace {

std::vector<LatticeVector> vectors(const std::vector<Root>& roots, std::size_t from = 0) {
  std::vector<LatticeVector> out;
  for (std::size_t i = from; i < roots.size(); ++i)
    out.push_back(roots[i].vector);
  return out;
}

} // namespace

TEST_CASE("initial roots") {
  CHECK(vectors(initial_roots(QuadraticForm(3, 2))) == std::vector<LatticeVector>{{0, -1, 1}, {0, 0, -1}});
  CHECK(vectors(initial_roots(QuadraticForm(3, 3))) ==
        std::vector<LatticeVector>{{0, -1, 1, 0}, {0, 0, -1, 1}, {0, 0, 0, -1}});
  for (const Root& r : initial_roots(QuadraticForm(5, 6)))
    CHECK(r.norm == (r.vector[6] == -1 && r.vector[5] == 0 ? 1 : 2));
}

TEST_CASE("Diophantine solutions") {
  const QuadraticForm f(3, 6);
  CHECK(vectors(solve_diophantine(f, 1, 6)) == std::vector<LatticeVector>{runs(6, {{1, 1}, {1, 3}})});
  // Against v0 + 3v1 the only norm 2 root with k0 = 1 needs five unit
  // coordinates; without it (1, 2, 1, 0, ...) is also a solution.
  const std::vector<Root> first{Root{runs(6, {{1, 1}, {1, 3}}), 6}};
  CHECK(vectors(solve_diophantine(f, 1, 2, first)) == std::vector<LatticeVector>{runs(6, {{6, 1}})});
  CHECK(vectors(solve_diophantine(f, 1, 2)) == std::vector<LatticeVector>{runs(6, {{1, 1}, {1, 2}, {1, 1}}), runs(6, {{6, 1}})});
  CHECK(solve_diophantine(QuadraticForm(3, 4), 1, 2, {Root{runs(4, {{1, 1}, {1, 3}}), 6}}).empty());
  CHECK(solve_diophantine(f, 3, 6).empty());
  for (const Root& r : solve_diophantine(QuadraticForm(2, 5), 3, 4)) {
    CHECK(norm(QuadraticForm(2, 5), r.vector) == 4);
    CHECK(is_primitive(r.vector));
    CHECK(crystallographic_ok(QuadraticForm(2, 5), r));
  }
  CHECK_THROWS_AS(solve_diophantine(f, 0, 6), ConfigError);
}

TEST_CASE("priorities") {
  CHECK(priority(Root{runs(13, {{2, 2}, {10, 1}}), 2}) == make_rational(2));
  CHECK(priority(Root{runs(13, {{1, 1}, {1, 3}}), 6}) == make_rational(1, 6));
}

TEST_CASE("the candidate stream skips 1/3 and 2/3 once v0 + 3v1 is in place") {
  const QuadraticForm f(3, 5);
  CandidateStream stream(f, 100);
  const auto first = stream.next();
  REQUIRE(first);
  CHECK(first->priority == make_rational(1, 6));
  REQUIRE(first->candidates.size() == 1);
  const std::vector<Root> accepted{first->candidates[0].root};
  std::vector<Rational> seen;
  for (int i = 0; i < 3; ++i) {
    const auto cls = stream.next(accepted);
    REQUIRE(cls);
    seen.push_back(cls->priority);
  }
  CHECK(seen == std::vector<Rational>{make_rational(1, 2), make_rational(1), make_rational(2)});
}

TEST_CASE("the unfiltered stream is strictly increasing and ordered within classes") {
  CandidateStream stream(QuadraticForm(3, 6), 12);
  Rational last(-1);
  int classes = 0;
  while (auto cls = stream.next()) {
    CHECK(cls->priority > last);
    last = cls->priority;
    for (std::size_t i = 0; i + 1 < cls->candidates.size(); ++i) {
      const Root& a = cls->candidates[i].root;
      const Root& b = cls->candidates[i + 1].root;
      CHECK((a.norm > b.norm || (a.norm == b.norm && a.vector > b.vector)));
    }
    ++classes;
  }
  CHECK(classes > 10);
}

TEST_CASE("admissibility") {
  const QuadraticForm f5(3, 5);
  CHECK_FALSE(is_admissible(f5, Root{runs(5, {{6, 1}}), 2}, {Root{runs(5, {{5, 1}}), 1}}));
  const QuadraticForm f13(3, 13);
  CHECK(is_admissible(f13, Root{runs(13, {{1, 2}, {13, 1}}), 1}, {Root{runs(13, {{2, 2}, {10, 1}}), 2}}));
  CHECK(is_admissible(f13, Root{runs(13, {{1, 2}, {13, 1}}), 1}, {}));
}

TEST_CASE("n = 3 stops after v0 + 3v1") {
  const RunReport r = run(QuadraticForm(3, 3));
  CHECK(r.verdict == Verdict::FiniteVolume);
  CHECK(r.initial_count == 3);
  CHECK(vectors(r.roots, 3) == std::vector<LatticeVector>{{1, 3, 0, 0}});
}

TEST_CASE("n = 13 reproduces the nine published roots") {
  const RunReport r = run(QuadraticForm(3, 13));
  CHECK(r.verdict == Verdict::FiniteVolume);
  CHECK(r.roots.size() == 22);
  auto got = vectors(r.roots, 13);
  std::sort(got.begin(), got.end());
  CHECK(got == testing::sorted_vectors(testing::table_roots(13)));
  CHECK(r.roots.back().vector == runs(13, {{1, 10}, {7, 6}, {6, 3}}));
}

TEST_CASE("n = 14 runs out of budget after the four published roots") {
  const RunReport r = run(QuadraticForm(3, 14), Budget{28});
  CHECK(r.verdict == Verdict::BudgetExhausted);
  REQUIRE(r.roots.size() >= 18);
  const auto expected = testing::first_four_roots(14);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(r.roots[14 + i].vector == expected[i].vector);
    CHECK(r.roots[14 + i].norm == expected[i].norm);
  }
  CHECK_FALSE(r.volume.finite);
}

TEST_CASE("budget validation") {
  CHECK_THROWS_AS(run(QuadraticForm(3, 5), Budget{3}), ConfigError);
  CHECK_THROWS_AS(run(QuadraticForm(3, 5), Budget{0, 0}), ConfigError);
  CHECK(Budget{}.roots_for(QuadraticForm(3, 7)) == 28);
}

TEST_CASE("runs are deterministic") {
  const RunReport a = run(QuadraticForm(2, 6));
  const RunReport b = run(QuadraticForm(2, 6));
  CHECK(a.roots == b.roots);
  CHECK(a.steps == b.steps);
}
