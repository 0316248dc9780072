#include "vinberg/obstruction.hpp"

#include <algorithm>
#include <numeric>

namespace vinberg {

std::vector<ObstructingParabolic> obstructing_parabolics(const CoxeterDiagram& d, const GramMatrix& g, int n) {
  VolumeOptions quick;
  quick.cross_check = false;
  if (is_finite_volume(d, g, n, quick).finite)
    return {};
  const auto all = parabolic_subsets(d, -1);
  std::vector<ObstructingParabolic> out;
  for (const auto& s : all) {
    auto cls = classify_subdiagram(d, g, s);
    if (cls.rank >= n - 1)
      continue;
    bool maximal = std::none_of(all.begin(), all.end(),
                                [&](const VertexSet& t) { return t != s && s.is_subset_of(t); });
    if (!maximal)
      continue;
    ObstructingParabolic ob{s, cls.rank, cls.components, {}, {}};
    const VertexSet kept = d.all() - d.neighbors(s);
    for (const auto& comp : d.components(kept)) {
      if (comp.is_subset_of(s))
        continue;
      ob.isolated.push_back(comp);
      ob.isolated_classes.push_back(classify_subdiagram(d, g, comp));
    }
    out.push_back(std::move(ob));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const ObstructingParabolic& a, const ObstructingParabolic& b) { return a.rank > b.rank; });
  return out;
}

std::optional<ObstructingParabolic> find_obstructing_parabolic(
    const CoxeterDiagram& d, const GramMatrix& g, int n, const std::optional<std::vector<ComponentType>>& components) {
  for (auto& ob : obstructing_parabolics(d, g, n))
    if (!components || ob.components == *components)
      return std::move(ob);
  return std::nullopt;
}

OrthogonalFamily orthogonal_constraints(const QuadraticForm& form, const std::vector<Root>& roots,
                                        const VertexSet& subset, const std::vector<Root>& extra) {
  RationalMatrix rows;
  auto add = [&](const Root& r) {
    if (r.size() != form.size())
      throw DimensionError("root has the wrong number of coordinates");
    // (e, r) = -phi e0 r0 + sum e_i r_i, as a row acting on e.
    RationalVector row(form.size());
    row[0] = Rational(-form.phi()) * r[0];
    for (std::size_t i = 1; i < r.size(); ++i)
      row[i] = r[i];
    rows.push_back(std::move(row));
  };
  subset.for_each([&](std::size_t i) {
    if (i >= roots.size())
      throw ConfigError("subset refers to a missing root");
    add(roots[i]);
  });
  for (const auto& r : extra)
    add(r);
  OrthogonalFamily out;
  out.system = row_reduce(rows, form.size());
  out.basis = nullspace(out.system);
  if (out.basis.empty())
    throw InconsistentSystem("only the zero vector is orthogonal to the given roots");
  return out;
}

namespace {

[[noreturn]] void fail(const std::string& step, const std::string& what) { throw CertificationFailed(step, what); }

LatticeVector vec(std::size_t size, std::initializer_list<std::pair<std::size_t, Coord>> runs_end_value) {
  // Each pair (end, value) sets coordinates from the previous end (exclusive) to `end` (inclusive).
  LatticeVector v = LatticeVector::zero(size);
  std::size_t start = 0;
  for (auto [end, value] : runs_end_value) {
    for (std::size_t i = start; i <= end; ++i)
      v[i] = value;
    start = end + 1;
  }
  return v;
}

RationalMatrix as_rational(const std::vector<LatticeVector>& vs) {
  RationalMatrix out;
  for (const auto& v : vs)
    out.push_back(to_rational(v));
  return out;
}

bool same_span(const RationalMatrix& a, const std::vector<LatticeVector>& b, std::size_t columns) {
  RationalMatrix both = a;
  const RationalMatrix rb = as_rational(b);
  both.insert(both.end(), rb.begin(), rb.end());
  const std::size_t ra = row_reduce(a, columns).rank();
  const std::size_t rbk = row_reduce(rb, columns).rank();
  return ra == rbk && row_reduce(both, columns).rank() == ra;
}

std::vector<NormCheck> norm_checks(const QuadraticForm& form) {
  // Remaining norm is 3 x^2 with x = p - 2q; crystallographic roots of norm
  // d have every k_j (j >= 1), so p = k_3 and q = k_9, divisible by
  // d / gcd(d, 2), hence x is too.
  std::vector<NormCheck> out;
  for (Coord d : admissible_norms(form)) {
    NormCheck c{d, d / std::gcd(d, Coord{2}), false};
    for (Coord x = 0; 3 * x * x <= d; ++x)
      if (3 * x * x == d && x % c.step == 0)
        c.solvable = true;
    out.push_back(c);
  }
  return out;
}

} // namespace

ObstructionCertificate certify_nonreflective(const QuadraticForm& form) {
  const int n = form.dim();
  if (form.phi() != 3)
    throw ConfigError("non-reflectivity certificates exist only for phi = 3");
  if (n < 14)
    throw ConfigError("non-reflectivity certificates need dimension >= 14, got " + std::to_string(n));
  const std::size_t size = form.size();
  const std::size_t un = static_cast<std::size_t>(n);
  ObstructionCertificate cert;
  cert.n = n;
  cert.case_tag = n == 14 ? "n=14" : n == 15 ? "n=15" : n == 16 ? "n=16" : "n>=17";

  // 1. The first four roots past the initial ones.
  Budget budget;
  budget.max_roots = un + 4;
  RunOptions options;
  options.volume.cross_check = false;
  const RunReport run_report = run(form, budget, options);
  const std::vector<LatticeVector> expected = {
      vec(size, {{0, 1}, {1, 3}}),
      vec(size, {{5, 1}}),
      vec(size, {{1, 2}, {11, 1}}),
      vec(size, {{0, 2}, {14, 1}}),
  };
  if (run_report.roots.size() != un + 4)
    fail("interim-roots", "the engine accepted " + std::to_string(run_report.roots.size()) + " roots");
  for (std::size_t i = 0; i < 4; ++i)
    if (run_report.roots[un + i].vector != expected[i])
      fail("interim-roots", "root " + std::to_string(un + i + 1) + " is " +
                                to_string(run_report.roots[un + i].vector) + ", expected " + to_string(expected[i]));
  cert.interim_roots = run_report.roots;
  cert.steps.push_back("interim roots: initial walls plus v0+3v1, v0+...+v5, 2(v0+v1)+v2+...+v11, 2v0+v1+...+v14");
  if (run_report.volume.finite)
    fail("interim-infinite", "the interim polyhedron already has finite volume");
  cert.steps.push_back("interim polyhedron has infinite volume");

  // 2. Two copies of ~E6.
  const ComponentType e6{'E', 6, true};
  const auto ob = find_obstructing_parabolic(run_report.diagram, run_report.gram, n,
                                             std::vector<ComponentType>{e6, e6});
  if (!ob)
    fail("parabolic", "no maximal parabolic subdiagram made of two ~E6 copies");
  VertexSet expected_gamma;
  for (std::size_t i : {0, 8, 9, 10, 11, 12, 2, 3, 4, 5, 6})
    expected_gamma.insert(i);
  for (std::size_t i : {un + 1, un + 2, un + 3})
    expected_gamma.insert(i);
  if (ob->subset != expected_gamma)
    fail("parabolic", "the two ~E6 copies are not on walls 1, 9-13, n+3 and 3-7, n+2, n+4");
  if (ob->rank != 12 || ob->components != std::vector<ComponentType>{e6, e6})
    fail("parabolic", "expected two ~E6 components of total rank 12");
  // Isolation: nothing left for n = 14, A1 at n = 15, B_{n-14} beyond.
  if (n == 14) {
    if (!ob->isolated.empty())
      fail("isolation", "expected no component besides the two ~E6");
  } else {
    if (ob->isolated.size() != 1)
      fail("isolation", "expected exactly one component besides the two ~E6");
    VertexSet chain;
    for (std::size_t i = 14; i < un; ++i)
      chain.insert(i);
    const ComponentType third = n == 15 ? ComponentType{'A', 1, false} : ComponentType{'B', n - 14, false};
    const auto& cls = ob->isolated_classes[0];
    if (ob->isolated[0] != chain || cls.kind != SubdiagramKind::Elliptic || cls.components.size() != 1 ||
        cls.components[0] != third)
      fail("isolation", "third component is not " + third.name() + " on walls 15..n");
  }
  cert.gamma_p = *ob;
  cert.steps.push_back("parabolic subdiagram of two ~E6 copies, rank 12, isolated");

  // 3. Roots orthogonal to Gamma_p.
  const OrthogonalFamily family = orthogonal_constraints(form, cert.interim_roots, ob->subset);
  std::vector<LatticeVector> basis{
      vec(size, {{0, 1}, {2, 0}, {8, 1}}),          // b_p
      vec(size, {{0, 2}, {2, 3}, {8, 0}, {14, 1}}), // b_q
  };
  for (std::size_t i = 15; i < size; ++i) {
    LatticeVector v = LatticeVector::zero(size);
    v[i] = 1;
    basis.push_back(v);
  }
  if (family.basis.size() != basis.size())
    fail("family", "orthogonal complement has dimension " + std::to_string(family.basis.size()) + ", expected " +
                       std::to_string(basis.size()));
  if (!same_span(family.basis, basis, size))
    fail("family", "orthogonal complement is not spanned by b_p, b_q and v_15..v_n");
  // Lattice points of the family are exactly the integer combinations: the
  // coordinates 3, 9, 15, ..., n of the basis form an identity matrix.
  std::vector<std::size_t> readout{3, 9};
  for (std::size_t i = 15; i < size; ++i)
    readout.push_back(i);
  for (std::size_t r = 0; r < basis.size(); ++r)
    for (std::size_t c = 0; c < readout.size(); ++c)
      if (basis[r][readout[c]] != (r == c ? 1 : 0))
        fail("family", "parameters are not read off coordinates 3, 9, 15..n");
  cert.family_basis = basis;
  cert.steps.push_back("orthogonal roots are (2q+p) v0 + 3q (v1+v2) + p (v3+...+v8) + q (v9+...+v14) + sum_{i>=15} k_i v_i");

  // 4. Norm identity.
  IntMatrix fg(basis.size(), std::vector<Coord>(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j)
      fg[i][j] = inner_product(form, basis[i], basis[j]);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) {
      Coord want = i == j ? 1 : 0;
      if (i < 2 && j < 2)
        want = (i == 0 && j == 0) ? 3 : (i == 1 && j == 1) ? 12 : -6;
      if (fg[i][j] != want)
        fail("norm-identity", "Gram matrix of the family basis differs from [[3,-6],[-6,12]] + I");
    }
  cert.family_gram = fg;
  cert.norm_identity = "3(p-2q)^2 + sum_{i>=15} k_i^2";
  cert.steps.push_back("norm on the family: " + cert.norm_identity);

  // 5. Forced extension in dimensions 15 and up.
  std::vector<LatticeVector> reduced = {basis[0], basis[1]};
  if (n >= 15) {
    LatticeVector forced = vec(size, {{0, 4}, {2, 3}, {8, 2}, {15, 1}});
    if (n >= 16)
      forced[16] = 1;
    Root e;
    try {
      e = Root::make(form, forced);
    } catch (const ConfigError& err) {
      fail("forced-root", err.what());
    }
    if (e.norm != (n == 15 ? 1 : 2))
      fail("forced-root", "forced root has norm " + std::to_string(e.norm));
    if (!is_admissible(form, e, cert.interim_roots))
      fail("forced-root", "forced root is not admissible against the interim roots");
    ob->subset.for_each([&](std::size_t i) {
      if (inner_product(form, e.vector, cert.interim_roots[i].vector) != 0)
        fail("forced-root", "forced root is not orthogonal to Gamma_p");
    });
    std::vector<Root> extended = cert.interim_roots;
    extended.push_back(e);
    const GramMatrix eg = gram(form, extended);
    const CoxeterDiagram ed = diagram(eg);
    VertexSet comp;
    for (std::size_t i = 14; i < un; ++i)
      comp.insert(i);
    comp.insert(extended.size() - 1);
    const auto type = classify_component(ed, comp);
    const ComponentType want = n == 15   ? ComponentType{'A', 1, true}
                               : n == 16 ? ComponentType{'C', 2, true}
                                         : ComponentType{'B', n - 14, true};
    if (!type || *type != want || ed.components(comp).size() != 1)
      fail("forced-component", "forced root and walls 15..n do not form " + want.name());
    const VertexSet whole = ob->subset | comp;
    const auto cls = classify_subdiagram(ed, eg, whole);
    if (cls.kind != SubdiagramKind::Parabolic || cls.rank != n - 2)
      fail("forced-component", "extended parabolic subdiagram does not have rank n-2");
    cert.forced_root = e;
    cert.forced_component = *type;
    cert.extended_parabolic = whole;
    cert.extended_rank = cls.rank;
    cert.steps.push_back("forced root of norm " + std::to_string(e.norm) + " forms " + want.name() +
                         "; extended parabolic rank " + std::to_string(cls.rank) + " < n-1");

    // New roots must also be orthogonal to the chain v_15 .. v_n.
    VertexSet with_chain = ob->subset;
    for (std::size_t i = 14; i < un; ++i)
      with_chain.insert(i);
    const OrthogonalFamily tight = orthogonal_constraints(form, cert.interim_roots, with_chain);
    if (tight.basis.size() != 2 || !same_span(tight.basis, reduced, size))
      fail("chain-constraints", "orthogonality to walls 15..n does not force k_15 = ... = k_n = 0");
    cert.steps.push_back("orthogonality to walls 15..n forces k_i = 0 for i >= 15");
  }
  cert.reduced_basis = reduced;

  // 6. No admissible norm is reachable.
  cert.norm_checks = norm_checks(form);
  for (const auto& c : cert.norm_checks)
    if (c.solvable)
      fail("insolvable", "3(p-2q)^2 = " + std::to_string(c.norm) + " has a solution");
  cert.steps.push_back("3(p-2q)^2 takes none of the admissible norms 1, 2, 3, 6 under the divisibility rule");
  return cert;
}

} // namespace vinberg
