#ifndef VINBERG_VOLUME_HPP_
#define VINBERG_VOLUME_HPP_

// Finite volume, compactness, ideal vertices and diagram symmetries of the
// polyhedron cut out by a set of walls in hyperbolic n-space.
//
// Finite volume is decided by the vertex-link criterion: the polyhedron has
// finite volume iff it has a vertex and every elliptic subdiagram of rank
// n-1 (an edge of the polyhedron) lies in exactly two vertices, counting
// both ordinary vertices (elliptic, rank n) and ideal ones (parabolic,
// rank n-1).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vinberg/coxeter.hpp"

namespace vinberg {

struct VolumeReport {
  bool finite = false;
  bool compact = false;
  // Both lists are complete when finite; after an early failure they hold
  // whatever was seen before the witness turned up.
  std::vector<VertexSet> ordinary_vertices; // elliptic, rank n
  std::vector<VertexSet> ideal_vertices;    // parabolic, rank n-1
  // An elliptic rank n-1 subset that does not lie in exactly two vertices,
  // or the empty set when the polyhedron has no vertex at all.
  std::optional<VertexSet> witness;
  int witness_extensions = 0;
  // The diagram-level sufficient condition (parabolic subdiagrams extend to
  // rank n-1, Lanner and dashed subdiagrams are split off from elliptic
  // complements of complementary rank).  Unset when its enumeration ran
  // past the limit.
  std::optional<bool> sufficient_condition;

  friend bool operator==(const VolumeReport&, const VolumeReport&) = default;
};

struct VolumeOptions {
  EnumerationLimits limits{};
  // Separate, smaller cap for the sufficient-condition cross-check.
  EnumerationLimits cross_check_limits{200'000};
  bool cross_check = true;
};

VolumeReport is_finite_volume(const CoxeterDiagram& d, const GramMatrix& g, int n, const VolumeOptions& options = {});

bool is_compact(const CoxeterDiagram& d, const GramMatrix& g, int n, const VolumeOptions& options = {});

// Parabolic subsets of rank n-1, sorted.
std::vector<VertexSet> ideal_vertices(const CoxeterDiagram& d, int n, const EnumerationLimits& limits = {});

// Evaluates the sufficient condition on its own.  Throws
// EnumerationBudgetExceeded past the limit.
bool sufficient_finite_volume_condition(const CoxeterDiagram& d, const GramMatrix& g, int n,
                                        const EnumerationLimits& limits = {});

using Permutation = std::vector<std::size_t>;

struct SymmetryReport {
  std::uint64_t order = 1;
  std::vector<Permutation> generators;
  // Orbits of the given ideal vertices, as sorted index lists into that list.
  std::vector<std::vector<std::size_t>> cusp_orbits;

  friend bool operator==(const SymmetryReport&, const SymmetryReport&) = default;
};

// Permutations of the walls preserving norms and raw inner products.
SymmetryReport diagram_symmetries(const GramMatrix& g, const std::vector<VertexSet>& ideal = {});

bool preserves_gram(const GramMatrix& g, const Permutation& p);

} // namespace vinberg

#endif
