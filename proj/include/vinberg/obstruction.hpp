#ifndef VINBERG_OBSTRUCTION_HPP_
#define VINBERG_OBSTRUCTION_HPP_

// Non-reflectivity of -3 x0^2 + x1^2 + ... + xn^2 for n >= 14.
//
// After the first four roots beyond the initial ones, the diagram contains
// two disjoint copies of ~E6 (rank 12).  A finite-volume polyhedron would
// need a further root orthogonal to all of them; every such root lies in a
// two-parameter family (plus free coordinates k15..kn) whose norm is
// 3(p - 2q)^2 + sum k_i^2, and no admissible norm is reachable once the
// forced extension in dimensions 15 and up is taken into account.  Each
// step here is re-derived by exact linear algebra and checked; any
// disagreement raises CertificationFailed.

#include <optional>
#include <string>
#include <vector>

#include "vinberg/coxeter.hpp"
#include "vinberg/engine.hpp"
#include "vinberg/linalg.hpp"

namespace vinberg {

struct ObstructingParabolic {
  VertexSet subset;
  int rank = 0;
  std::vector<ComponentType> components;
  // Components of the diagram after deleting every neighbor of `subset`,
  // other than the components of `subset` itself.
  std::vector<VertexSet> isolated;
  std::vector<SubdiagramClass> isolated_classes;

  friend bool operator==(const ObstructingParabolic&, const ObstructingParabolic&) = default;
};

// Parabolic subdiagrams of rank < n - 1 that lie in no larger parabolic
// subdiagram, highest rank first, then by vertex list.  Empty when the
// diagram already has finite volume.
std::vector<ObstructingParabolic> obstructing_parabolics(const CoxeterDiagram& d, const GramMatrix& g, int n);

// The first entry of obstructing_parabolics, or the first whose sorted
// component types equal `components` when that is given.
std::optional<ObstructingParabolic> find_obstructing_parabolic(
    const CoxeterDiagram& d, const GramMatrix& g, int n,
    const std::optional<std::vector<ComponentType>>& components = std::nullopt);

// Rational solutions of (e, r) = 0 for r in the chosen roots.
struct OrthogonalFamily {
  RowEchelon system;
  RationalMatrix basis; // nullspace basis, one vector per free coordinate
};

// Throws InconsistentSystem when only e = 0 solves the system.
OrthogonalFamily orthogonal_constraints(const QuadraticForm& form, const std::vector<Root>& roots,
                                        const VertexSet& subset, const std::vector<Root>& extra = {});

struct NormCheck {
  Coord norm = 0;
  Coord step = 1;   // p and q must be multiples of this
  bool solvable = false;

  friend bool operator==(const NormCheck&, const NormCheck&) = default;
};

struct ObstructionCertificate {
  int n = 0;
  std::string case_tag; // "n=14", "n=15", "n=16", "n>=17"
  std::vector<Root> interim_roots;
  ObstructingParabolic gamma_p;
  // Integer basis of the orthogonal family: b_p, b_q, then v_15 .. v_n.
  std::vector<LatticeVector> family_basis;
  IntMatrix family_gram;
  std::string norm_identity;
  // Forced extension (n >= 15).
  std::optional<Root> forced_root;
  std::optional<ComponentType> forced_component;
  VertexSet extended_parabolic; // Gamma_p plus the forced component, indices into interim_roots + forced root
  int extended_rank = 0;
  // Orthogonal family once the chain v_15 .. v_n is also imposed.
  std::vector<LatticeVector> reduced_basis;
  std::vector<NormCheck> norm_checks;
  std::vector<std::string> steps; // each verified step, in order

  friend bool operator==(const ObstructionCertificate&, const ObstructionCertificate&) = default;
};

// n >= 14, phi = 3.  Throws ConfigError on other inputs and
// CertificationFailed when any re-derivation disagrees.
ObstructionCertificate certify_nonreflective(const QuadraticForm& form);

} // namespace vinberg

#endif
