#ifndef VINBERG_TESTS_PROPERTIES_HPP_
#define VINBERG_TESTS_PROPERTIES_HPP_

// Randomized property checks shared by the unit suite and the acceptance
// binary.  Each returns the number of cases run and the first failure.

#include <cstdint>
#include <limits>
#include <random>
#include <string>

#include "vinberg/engine.hpp"
#include "vinberg/io.hpp"

namespace vinberg::testing {

struct PropertyResult {
  std::size_t cases = 0;
  std::string failure; // empty when every case held

  bool ok() const { return failure.empty(); }
};

inline Coord uniform(std::mt19937_64& rng, Coord lo, Coord hi) {
  return std::uniform_int_distribution<Coord>(lo, hi)(rng);
}

inline LatticeVector random_vector(std::mt19937_64& rng, std::size_t size, Coord bound) {
  LatticeVector v = LatticeVector::zero(size);
  for (std::size_t i = 0; i < size; ++i)
    v[i] = uniform(rng, -bound, bound);
  return v;
}

// Reflections in random positive-norm vectors are involutive isometries;
// crystallographic ones also map the standard basis into the lattice.
inline PropertyResult reflection_property(std::uint64_t seed, std::size_t cases) {
  std::mt19937_64 rng(seed);
  PropertyResult res;
  while (res.cases < cases) {
    const QuadraticForm form(uniform(rng, 1, 7), static_cast<int>(uniform(rng, 2, 9)));
    LatticeVector e = random_vector(rng, form.size(), 6);
    if (e.is_zero() || norm(form, e) <= 0)
      continue;
    const Root root{e, norm(form, e)};
    const LatticeVector x = random_vector(rng, form.size(), 20);
    const LatticeVector y = random_vector(rng, form.size(), 20);
    ++res.cases;
    const RationalVector rx = reflect(form, root, x), ry = reflect(form, root, y);
    if (reflect(form, root, rx) != to_rational(x)) {
      res.failure = "reflection is not an involution on " + to_string(x);
      return res;
    }
    if (inner_product(form, rx, ry) != Rational(inner_product(form, x, y))) {
      res.failure = "reflection in " + to_string(e) + " is not an isometry";
      return res;
    }
    if (is_primitive(e) && crystallographic_ok(form, root)) {
      for (std::size_t i = 0; i < form.size(); ++i) {
        LatticeVector b = LatticeVector::zero(form.size());
        b[i] = 1;
        for (const Rational& c : reflect(form, root, b))
          if (boost::multiprecision::denominator(c) != 1) {
            res.failure = "crystallographic root " + to_string(e) + " sends v" + std::to_string(i) + " off the lattice";
            return res;
          }
      }
    }
  }
  return res;
}

struct RunCase {
  QuadraticForm form{1, 2};
  Budget budget;
};

inline RunCase random_run_case(std::mt19937_64& rng) {
  RunCase c;
  const int n = static_cast<int>(uniform(rng, 2, 7));
  c.form = QuadraticForm(uniform(rng, 1, 8), n);
  c.budget.max_roots = static_cast<std::size_t>(n + uniform(rng, 0, 2 * n));
  c.budget.max_k0 = uniform(rng, 1, 20);
  return c;
}

inline std::string describe(const RunCase& c) {
  return "phi=" + std::to_string(c.form.phi()) + " n=" + std::to_string(c.form.dim()) +
         " max_roots=" + std::to_string(c.budget.max_roots) + " max_k0=" + std::to_string(c.budget.max_k0);
}

// Over random small runs: accepted roots pairwise non-positive, priorities
// of non-initial roots nondecreasing, every root well formed.
inline PropertyResult run_properties(std::uint64_t seed, std::size_t cases) {
  std::mt19937_64 rng(seed);
  PropertyResult res;
  RunOptions options;
  options.volume.cross_check = false;
  for (; res.cases < cases; ++res.cases) {
    const RunCase c = random_run_case(rng);
    const RunReport r = run(c.form, c.budget, options);
    for (std::size_t i = 0; i < r.roots.size(); ++i) {
      const Root& a = r.roots[i];
      if (norm(c.form, a.vector) != a.norm || !is_primitive(a.vector) || !crystallographic_ok(c.form, a)) {
        res.failure = describe(c) + ": malformed root " + to_string(a.vector);
        return res;
      }
      for (std::size_t j = i + 1; j < r.roots.size(); ++j)
        if (inner_product(c.form, a.vector, r.roots[j].vector) > 0) {
          res.failure = describe(c) + ": roots " + std::to_string(i) + " and " + std::to_string(j) + " have a positive product";
          return res;
        }
    }
    for (std::size_t i = r.initial_count + 1; i < r.roots.size(); ++i)
      if (priority(r.roots[i]) < priority(r.roots[i - 1])) {
        res.failure = describe(c) + ": priority decreases at root " + std::to_string(i);
        return res;
      }
  }
  return res;
}

// Random Gram blocks with norms in {1, 2, 6}; entries giving a non-Coxeter
// angle are zeroed.
inline GramMatrix random_gram(std::mt19937_64& rng, std::size_t m) {
  const Coord norm_choices[] = {1, 2, 6};
  std::vector<Coord> norms(m);
  for (auto& x : norms)
    x = norm_choices[uniform(rng, 0, 2)];
  IntMatrix p(m, std::vector<Coord>(m, 0));
  for (std::size_t i = 0; i < m; ++i) {
    p[i][i] = norms[i];
    for (std::size_t j = i + 1; j < m; ++j) {
      // Mostly orthogonal, so that components stay small and varied.
      Coord v = uniform(rng, 0, 9) < 6 ? 0 : -uniform(rng, 1, 6);
      const Rational c(BigInt(v) * v, BigInt(norms[i]) * norms[j]);
      try {
        if (v != 0)
          label_for(c, i, j);
      } catch (const NonCoxeterAngle&) {
        v = 0;
      }
      p[i][j] = p[j][i] = v;
    }
  }
  return GramMatrix(std::move(norms), std::move(p));
}

inline PropertyResult critical_connectivity_property(std::uint64_t seed, std::size_t cases) {
  std::mt19937_64 rng(seed);
  PropertyResult res;
  for (; res.cases < cases; ++res.cases) {
    const GramMatrix g = random_gram(rng, static_cast<std::size_t>(uniform(rng, 1, 9)));
    const CoxeterDiagram d = diagram(g);
    for (const auto& s : critical_subdiagrams(d, g))
      if (d.components(s).size() != 1) {
        res.failure = "a critical subdiagram of a random " + std::to_string(g.size()) + "-vertex diagram is disconnected";
        return res;
      }
  }
  return res;
}

inline std::int64_t big_or_small(std::mt19937_64& rng) {
  switch (uniform(rng, 0, 3)) {
  case 0:
    return uniform(rng, std::numeric_limits<std::int64_t>::min() + 1, std::numeric_limits<std::int64_t>::max());
  case 1:
    return uniform(rng, (std::int64_t{1} << 53) - 2, (std::int64_t{1} << 53) + 2) * (uniform(rng, 0, 1) ? 1 : -1);
  default:
    return uniform(rng, -50, 50);
  }
}

inline VertexSet random_set(std::mt19937_64& rng, std::size_t m) {
  VertexSet s;
  for (std::size_t v = 0; v < m; ++v)
    if (uniform(rng, 0, 2) == 0)
      s.insert(v);
  return s;
}

// Documents with random field values, including integers on both sides of
// 2^53; only the serializer is exercised, so they need not be consistent.
inline RunDocument random_document(std::mt19937_64& rng) {
  RunDocument doc;
  doc.dim = static_cast<int>(uniform(rng, 2, 20));
  if (uniform(rng, 0, 3))
    doc.phi = uniform(rng, 1, std::numeric_limits<std::int64_t>::max());
  const std::size_t m = static_cast<std::size_t>(uniform(rng, 0, 8));
  for (std::size_t i = 0; i < m; ++i) {
    LatticeVector v = LatticeVector::zero(static_cast<std::size_t>(doc.dim) + 1);
    for (std::size_t k = 0; k < v.size(); ++k)
      v[k] = big_or_small(rng);
    doc.roots.push_back(Root{v, big_or_small(rng)});
  }
  doc.initial_count = static_cast<std::size_t>(uniform(rng, 0, static_cast<Coord>(m)));
  doc.command = uniform(rng, 0, 1) ? "run" : "check";
  if (uniform(rng, 0, 1))
    doc.verdict = uniform(rng, 0, 1) ? Verdict::FiniteVolume : Verdict::BudgetExhausted;
  for (Coord i = uniform(rng, 0, 4); i > 0; --i)
    doc.steps.push_back(StepLog{Rational(BigInt(big_or_small(rng)), BigInt(uniform(rng, 1, 1'000'000'007))),
                                static_cast<std::size_t>(uniform(rng, 0, 100)), static_cast<std::size_t>(uniform(rng, 0, 5)),
                                uniform(rng, 0, 1) == 1});

  // A random, valid Gram block and its diagram.
  doc.gram = random_gram(rng, m);
  doc.diagram = diagram(doc.gram);

  doc.volume.finite = uniform(rng, 0, 1);
  doc.volume.compact = doc.volume.finite && uniform(rng, 0, 1);
  for (Coord i = uniform(rng, 0, 3); i > 0; --i)
    doc.volume.ordinary_vertices.push_back(random_set(rng, m));
  for (Coord i = uniform(rng, 0, 3); i > 0; --i)
    doc.volume.ideal_vertices.push_back(random_set(rng, m));
  if (uniform(rng, 0, 1))
    doc.volume.witness = random_set(rng, m);
  doc.volume.witness_extensions = static_cast<int>(uniform(rng, 0, 3));
  if (uniform(rng, 0, 1))
    doc.volume.sufficient_condition = uniform(rng, 0, 1) == 1;

  doc.symmetry.order = uniform(rng, 0, 1) ? std::uniform_int_distribution<std::uint64_t>()(rng) : 1;
  for (Coord i = uniform(rng, 0, 2); i > 0; --i) {
    Permutation p(m);
    for (std::size_t k = 0; k < m; ++k)
      p[k] = k;
    std::shuffle(p.begin(), p.end(), rng);
    doc.symmetry.generators.push_back(p);
  }
  for (Coord i = uniform(rng, 0, 3); i > 0; --i)
    doc.symmetry.cusp_orbits.push_back({static_cast<std::size_t>(uniform(rng, 0, 20))});

  if (uniform(rng, 0, 3) == 0) {
    ObstructionCertificate c;
    c.n = doc.dim;
    c.case_tag = "n>=17";
    c.interim_roots = doc.roots;
    c.gamma_p.subset = random_set(rng, m);
    c.gamma_p.rank = static_cast<int>(uniform(rng, 0, 20));
    c.gamma_p.components = {ComponentType{'E', 6, true}, ComponentType{'B', static_cast<int>(uniform(rng, 3, 40)), true}};
    c.gamma_p.isolated = {random_set(rng, m)};
    c.gamma_p.isolated_classes = {SubdiagramClass{SubdiagramKind::Elliptic, {ComponentType{'A', 1, false}}, 1, false}};
    c.family_basis = {LatticeVector{big_or_small(rng), 2, 3}};
    c.family_gram = {{3, -6}, {-6, big_or_small(rng)}};
    c.norm_identity = "3(p-2q)^2";
    if (uniform(rng, 0, 1)) {
      c.forced_root = Root{LatticeVector{4, 3, 3}, 2};
      c.forced_component = ComponentType{'C', 2, true};
    }
    c.extended_parabolic = random_set(rng, m);
    c.extended_rank = 13;
    c.reduced_basis = c.family_basis;
    c.norm_checks = {NormCheck{3, 3, false}, NormCheck{big_or_small(rng), 1, true}};
    c.steps = {"one", "two"};
    doc.certificate = c;
  }
  return doc;
}

inline PropertyResult roundtrip_property(std::uint64_t seed, std::size_t cases) {
  std::mt19937_64 rng(seed);
  PropertyResult res;
  for (; res.cases < cases; ++res.cases) {
    const RunDocument doc = random_document(rng);
    const std::string text = serialize(doc);
    const RunDocument back = parse_document(text);
    if (!(back == doc)) {
      res.failure = "document does not survive a round trip";
      return res;
    }
    if (serialize(back) != text) {
      res.failure = "re-serialization changed the text";
      return res;
    }
  }
  return res;
}

} // namespace vinberg::testing

#endif
