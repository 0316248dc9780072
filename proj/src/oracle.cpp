#include "vinberg/oracle.hpp"

#include <algorithm>

namespace vinberg {

std::vector<Root> oracle_candidates(const QuadraticForm& form, Coord max_k0) {
  const auto norms = admissible_norms(form);
  const Coord top = norms.back() + form.phi() * max_k0 * max_k0;
  Coord bound = 0;
  while ((bound + 1) * (bound + 1) <= top)
    ++bound;

  const std::size_t n = static_cast<std::size_t>(form.dim());
  std::vector<Root> out;
  std::vector<Coord> k(n, -bound);
  while (true) {
    Coord squares = 0;
    for (Coord x : k)
      squares += x * x;
    for (Coord k0 = 1; k0 <= max_k0; ++k0) {
      const Coord d = squares - form.phi() * k0 * k0;
      if (!std::binary_search(norms.begin(), norms.end(), d))
        continue;
      std::vector<Coord> coords{k0};
      coords.insert(coords.end(), k.begin(), k.end());
      LatticeVector v(std::move(coords));
      if (!is_primitive(v))
        continue;
      Root r{std::move(v), d};
      if (crystallographic_ok(form, r))
        out.push_back(std::move(r));
    }
    // Odometer step.
    std::size_t i = 0;
    while (i < n && k[i] == bound)
      k[i++] = -bound;
    if (i == n)
      break;
    ++k[i];
  }
  std::sort(out.begin(), out.end(), [](const Root& a, const Root& b) {
    const Rational pa = priority(a), pb = priority(b);
    if (pa != pb)
      return pa < pb;
    if (a.norm != b.norm)
      return a.norm > b.norm;
    return a.vector > b.vector;
  });
  return out;
}

OracleReplay oracle_replay(const QuadraticForm& form, const std::vector<Root>& candidates, std::size_t max_roots) {
  OracleReplay out;
  out.roots = initial_roots(form);
  const int n = form.dim();
  auto finite = [&] {
    const GramMatrix g = gram(form, out.roots);
    VolumeOptions quick;
    quick.cross_check = false;
    return is_finite_volume(diagram(g), g, n, quick).finite;
  };
  bool done = finite();
  std::size_t i = 0;
  while (!done && i < candidates.size() && out.roots.size() < max_roots) {
    const Rational p = priority(candidates[i]);
    bool accepted = false;
    for (; i < candidates.size() && priority(candidates[i]) == p; ++i) {
      if (out.roots.size() >= max_roots)
        continue;
      const Root& c = candidates[i];
      bool ok = std::all_of(out.roots.begin(), out.roots.end(),
                            [&](const Root& a) { return inner_product(form, c.vector, a.vector) <= 0; });
      if (ok) {
        out.roots.push_back(c);
        accepted = true;
      }
    }
    if (accepted)
      done = finite();
  }
  out.verdict = done ? Verdict::FiniteVolume : Verdict::BudgetExhausted;
  return out;
}

OracleReport compare_with_oracle(const QuadraticForm& form, Coord max_k0, std::size_t max_roots) {
  if (form.dim() > kOracleMaxDim)
    throw ConfigError("the oracle handles dimension <= " + std::to_string(kOracleMaxDim) + ", got " +
                      std::to_string(form.dim()));
  if (max_k0 < 1 || max_k0 > kOracleMaxK0)
    throw ConfigError("the oracle handles 1 <= max_k0 <= " + std::to_string(kOracleMaxK0) + ", got " +
                      std::to_string(max_k0));
  OracleReport report;
  report.form = form;
  report.max_k0 = max_k0;
  Budget budget;
  budget.max_roots = max_roots;
  budget.max_k0 = max_k0;
  RunOptions options;
  options.volume.cross_check = false;
  const RunReport engine = run(form, budget, options);
  report.engine = engine.roots;
  report.engine_verdict = engine.verdict;

  const auto candidates = oracle_candidates(form, max_k0);
  report.candidates = candidates.size();
  const OracleReplay replay = oracle_replay(form, candidates, budget.roots_for(form));
  report.oracle = replay.roots;
  report.oracle_verdict = replay.verdict;

  const std::size_t common = std::min(report.engine.size(), report.oracle.size());
  for (std::size_t i = 0; i < common && !report.first_difference; ++i)
    if (report.engine[i] != report.oracle[i])
      report.first_difference = i;
  if (!report.first_difference && report.engine.size() != report.oracle.size())
    report.first_difference = common;
  return report;
}

} // namespace vinberg
