#ifndef VINBERG_ORACLE_HPP_
#define VINBERG_ORACLE_HPP_

// Brute-force replay of the root search for small instances.  Every integer
// vector in a box is enumerated, filtered and sorted without any of the
// engine's pruning, then accepted greedily.  Agreement with the engine is
// the point; speed is not.

#include <cstddef>
#include <optional>
#include <vector>

#include "vinberg/engine.hpp"

namespace vinberg {

inline constexpr int kOracleMaxDim = 5;
inline constexpr Coord kOracleMaxK0 = 5;

// Primitive crystallographic vectors with 1 <= k0 <= max_k0, norm in
// admissible_norms and |k_i| <= floor(sqrt(d_max + phi max_k0^2)), sorted by
// priority, then norm descending, then coordinates descending.
std::vector<Root> oracle_candidates(const QuadraticForm& form, Coord max_k0);

struct OracleReplay {
  std::vector<Root> roots; // initial roots first
  Verdict verdict = Verdict::BudgetExhausted;
};

OracleReplay oracle_replay(const QuadraticForm& form, const std::vector<Root>& candidates, std::size_t max_roots);

struct OracleReport {
  QuadraticForm form{1, 2};
  Coord max_k0 = kOracleMaxK0;
  std::size_t candidates = 0;
  std::vector<Root> engine;
  std::vector<Root> oracle;
  Verdict engine_verdict = Verdict::BudgetExhausted;
  Verdict oracle_verdict = Verdict::BudgetExhausted;
  std::optional<std::size_t> first_difference;

  bool identical() const { return !first_difference && engine_verdict == oracle_verdict; }
};

// Throws ConfigError when dim > 5 or max_k0 is outside 1..5.
OracleReport compare_with_oracle(const QuadraticForm& form, Coord max_k0 = kOracleMaxK0, std::size_t max_roots = 0);

} // namespace vinberg

#endif
