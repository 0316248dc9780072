#ifndef VINBERG_ENGINE_HPP_
#define VINBERG_ENGINE_HPP_

// Vinberg's algorithm for the form -phi x0^2 + x1^2 + ... + xn^2.
//
// Starting from the walls through the basepoint v0, candidate roots are
// taken in order of increasing k0^2 / (e, e), which orders them by distance
// from v0.  A candidate is accepted when its inner product with every root
// accepted so far is non-positive.

#include <cstddef>
#include <optional>
#include <vector>

#include "vinberg/coxeter.hpp"
#include "vinberg/lattice.hpp"
#include "vinberg/rational.hpp"
#include "vinberg/volume.hpp"

namespace vinberg {

struct Budget {
  // Total number of accepted roots, initial ones included.  0 means 4 n.
  std::size_t max_roots = 0;
  Coord max_k0 = 10'000;

  std::size_t roots_for(const QuadraticForm& form) const {
    return max_roots ? max_roots : 4 * static_cast<std::size_t>(form.dim());
  }
};

struct Candidate {
  Root root;
  Rational priority; // k0^2 / (e, e)
};

// e_i = -v_i + v_{i+1} for 1 <= i < n, and e_n = -v_n.
std::vector<Root> initial_roots(const QuadraticForm& form);

// k0^2 / (e, e).
Rational priority(const Root& root);

// (root, a) <= 0 for every a in accepted.
bool is_admissible(const QuadraticForm& form, const Root& root, const std::vector<Root>& accepted);

// Roots (k0, k1, ..., kn) with k1 >= ... >= kn >= 0, sum k_i^2 = d + phi k0^2,
// primitive and crystallographic, in lexicographically descending order.
// Roots in `constraints` must have non-negative coordinates; candidates with
// a positive inner product against any of them are pruned during the search.
std::vector<Root> solve_diophantine(const QuadraticForm& form, Coord k0, Coord d,
                                    const std::vector<Root>& constraints = {});

struct PriorityClass {
  Rational priority;
  std::vector<Candidate> candidates; // norm descending, then coordinates descending
};

// Nonempty priority classes in strictly increasing order, over the cells
// (k0, d) with 1 <= k0 <= max_k0 and d dividing 2 phi.
class CandidateStream {
public:
  CandidateStream(const QuadraticForm& form, Coord max_k0);

  // The next nonempty class, filtered against `constraints` (see
  // solve_diophantine).  nullopt once every cell is used up.
  std::optional<PriorityClass> next(const std::vector<Root>& constraints = {});

private:
  QuadraticForm form_;
  Coord max_k0_;
  std::vector<Coord> norms_;
  std::vector<Coord> next_k0_; // per entry of norms_
};

enum class Verdict { FiniteVolume, BudgetExhausted };

const char* to_string(Verdict v);

struct StepLog {
  Rational priority;
  std::size_t candidates = 0; // in the class after generation-time pruning
  std::size_t accepted = 0;
  bool finite_after = false;

  friend bool operator==(const StepLog&, const StepLog&) = default;
};

struct RunReport {
  QuadraticForm form{1, 2};
  std::vector<Root> roots; // initial roots first, then in acceptance order
  std::size_t initial_count = 0;
  Verdict verdict = Verdict::BudgetExhausted;
  std::vector<StepLog> steps;
  GramMatrix gram;
  CoxeterDiagram diagram;
  VolumeReport volume;
};

struct RunOptions {
  VolumeOptions volume{};
};

RunReport run(const QuadraticForm& form, const Budget& budget = {}, const RunOptions& options = {});

} // namespace vinberg

#endif
