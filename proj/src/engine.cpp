#include "vinberg/engine.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace vinberg {

std::vector<Root> initial_roots(const QuadraticForm& form) {
  const int n = form.dim();
  std::vector<Root> out;
  for (int i = 1; i <= n; ++i) {
    LatticeVector v = LatticeVector::zero(form.size());
    v[static_cast<std::size_t>(i)] = -1;
    if (i < n)
      v[static_cast<std::size_t>(i) + 1] = 1;
    out.push_back(Root{v, norm(form, v)});
  }
  return out;
}

Rational priority(const Root& root) {
  BigInt k0 = root[0];
  return Rational(k0 * k0, BigInt(root.norm));
}

bool is_admissible(const QuadraticForm& form, const Root& root, const std::vector<Root>& accepted) {
  for (const auto& a : accepted)
    if (inner_product(form, root.vector, a.vector) > 0)
      return false;
  return true;
}

namespace {

Coord isqrt(Coord x) {
  if (x <= 0)
    return 0;
  Coord r = static_cast<Coord>(std::sqrt(static_cast<long double>(x)));
  while (r > 0 && r * r > x)
    --r;
  while ((r + 1) * (r + 1) <= x)
    ++r;
  return r;
}

struct Descent {
  const QuadraticForm& form;
  Coord k0;
  Coord d;
  Coord step;
  const std::vector<Root>& constraints;
  std::vector<Coord> bound;   // phi k0 a0 per constraint
  std::vector<Coord> partial; // running sum of k_i a_i per constraint
  std::vector<std::vector<Coord>> tails; // tails[c][i] = sum of constraint c from position i on
  LatticeVector current;
  std::vector<Root> out;

  // Position i (1-based), remaining sum of squares in units of step^2.
  void run(std::size_t i, Coord remaining, Coord cap) {
    const std::size_t n = current.size() - 1;
    if (i > n) {
      if (remaining == 0)
        emit();
      return;
    }
    const Coord slots = static_cast<Coord>(n - i + 1);
    Coord t = std::min(cap, isqrt(remaining));
    for (; t >= 0; --t) {
      // The remaining slots hold at most t each.
      if (t * t * slots < remaining)
        break;
      const Coord k = t * step;
      bool ok = true;
      for (std::size_t c = 0; c < constraints.size() && ok; ++c) {
        Coord next = checked::add(partial[c], checked::mul(k, constraints[c][i]));
        ok = next <= bound[c];
      }
      if (!ok)
        continue; // smaller t may still fit
      if (!completable(i, remaining - t * t, t))
        continue;
      for (std::size_t c = 0; c < constraints.size(); ++c)
        partial[c] += k * constraints[c][i];
      current[i] = k;
      run(i + 1, remaining - t * t, t);
      for (std::size_t c = 0; c < constraints.size(); ++c)
        partial[c] -= k * constraints[c][i];
    }
    current[i] = 0;
  }

  // After fixing positions 1..i with k_i = t step, can the rest still meet
  // every constraint?  The remaining k_j are nonincreasing and at most
  // t step, and so is each constraint row, so by Chebyshev's sum inequality
  //   sum k_j a_j >= (sum k_j)(sum a_j) / slots >= (R step / t)(sum a_j) / slots,
  // where R step^2 is the remaining sum of squares.
  bool completable(std::size_t i, Coord remaining, Coord t) const {
    if (remaining == 0 || t == 0)
      return remaining == 0;
    const Coord slots = static_cast<Coord>(current.size() - 1 - i);
    if (slots == 0)
      return false;
    for (std::size_t c = 0; c < constraints.size(); ++c) {
      const Coord room = bound[c] - partial[c] - t * step * constraints[c][i];
      const __int128 lhs = static_cast<__int128>(room) * t * slots;
      const __int128 rhs = static_cast<__int128>(remaining) * step * tails[c][i + 1];
      if (lhs < rhs)
        return false;
    }
    return true;
  }

  void emit() {
    if (!is_primitive(current))
      return;
    Root r{current, d};
    if (crystallographic_ok(form, r))
      out.push_back(std::move(r));
  }
};

} // namespace

std::vector<Root> solve_diophantine(const QuadraticForm& form, Coord k0, Coord d,
                                    const std::vector<Root>& constraints) {
  if (k0 < 1)
    throw ConfigError("k0 must be positive");
  if (d < 1)
    throw ConfigError("norm must be positive");
  // d | 2 phi k0 is necessary for the zeroth coordinate.
  if (checked::mul(checked::mul(2, form.phi()), k0) % d != 0)
    return {};
  for (const auto& c : constraints) {
    if (c.size() != form.size())
      throw DimensionError("constraint root has the wrong number of coordinates");
    for (std::size_t i = 1; i < c.size(); ++i)
      if (c[i] < 0)
        throw ConfigError("pruning constraints need non-negative coordinates");
  }
  // d | 2 k_j for j >= 1: every k_j is a multiple of d / gcd(d, 2).
  const Coord step = d / std::gcd(d, Coord{2});
  const Coord total = checked::add(d, checked::mul(form.phi(), checked::mul(k0, k0)));
  if (total % (step * step) != 0)
    return {};
  const Coord units = total / (step * step);
  Descent search{form, k0, d, step, constraints, {}, {}, {}, LatticeVector::zero(form.size()), {}};
  for (const auto& c : constraints) {
    search.bound.push_back(checked::mul(form.phi(), checked::mul(k0, c[0])));
    search.partial.push_back(0);
    std::vector<Coord> tail(c.size() + 1, 0);
    for (std::size_t i = c.size(); i-- > 1;)
      tail[i] = checked::add(tail[i + 1], c[i]);
    search.tails.push_back(std::move(tail));
  }
  search.current[0] = k0;
  search.run(1, units, isqrt(units));
  return std::move(search.out);
}

CandidateStream::CandidateStream(const QuadraticForm& form, Coord max_k0)
    : form_(form), max_k0_(max_k0), norms_(admissible_norms(form)), next_k0_(norms_.size(), 1) {
  if (max_k0 < 1)
    throw ConfigError("max_k0 must be positive");
}

std::optional<PriorityClass> CandidateStream::next(const std::vector<Root>& constraints) {
  while (true) {
    std::optional<Rational> best;
    for (std::size_t i = 0; i < norms_.size(); ++i) {
      if (next_k0_[i] > max_k0_)
        continue;
      Rational p(BigInt(next_k0_[i]) * next_k0_[i], BigInt(norms_[i]));
      if (!best || p < *best)
        best = p;
    }
    if (!best)
      return std::nullopt;
    PriorityClass cls{*best, {}};
    // Larger norms first.
    for (std::size_t i = norms_.size(); i-- > 0;) {
      if (next_k0_[i] > max_k0_)
        continue;
      Rational p(BigInt(next_k0_[i]) * next_k0_[i], BigInt(norms_[i]));
      if (p != *best)
        continue;
      for (auto& r : solve_diophantine(form_, next_k0_[i], norms_[i], constraints))
        cls.candidates.push_back(Candidate{std::move(r), *best});
      ++next_k0_[i];
    }
    if (!cls.candidates.empty())
      return cls;
  }
}

const char* to_string(Verdict v) {
  return v == Verdict::FiniteVolume ? "FiniteVolume" : "BudgetExhausted";
}

namespace {

void analyze(RunReport& report, const RunOptions& options, bool with_cross_check) {
  report.gram = gram(report.form, report.roots);
  report.diagram = diagram(report.gram);
  VolumeOptions vo = options.volume;
  vo.cross_check = vo.cross_check && with_cross_check;
  report.volume = is_finite_volume(report.diagram, report.gram, report.form.dim(), vo);
}

} // namespace

RunReport run(const QuadraticForm& form, const Budget& budget, const RunOptions& options) {
  const std::size_t max_roots = budget.roots_for(form);
  if (max_roots < static_cast<std::size_t>(form.dim()))
    throw ConfigError("max_roots is smaller than the number of initial roots");
  RunReport report;
  report.form = form;
  report.roots = initial_roots(form);
  report.initial_count = report.roots.size();
  std::vector<Root> extra;

  CandidateStream stream(form, budget.max_k0);
  analyze(report, options, false);
  while (!report.volume.finite && report.roots.size() < max_roots) {
    auto cls = stream.next(extra);
    if (!cls)
      break;
    StepLog step{cls->priority, cls->candidates.size(), 0, false};
    for (auto& c : cls->candidates) {
      if (report.roots.size() >= max_roots)
        break;
      if (!is_admissible(form, c.root, report.roots))
        continue;
      report.roots.push_back(c.root);
      extra.push_back(c.root);
      ++step.accepted;
    }
    if (step.accepted > 0) {
      analyze(report, options, false);
      step.finite_after = report.volume.finite;
    }
    report.steps.push_back(step);
  }
  // Final analysis with the cross-check.
  analyze(report, options, true);
  report.verdict = report.volume.finite ? Verdict::FiniteVolume : Verdict::BudgetExhausted;
  return report;
}

} // namespace vinberg
