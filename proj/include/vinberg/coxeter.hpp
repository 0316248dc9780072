#ifndef VINBERG_COXETER_HPP_
#define VINBERG_COXETER_HPP_

// Gram matrices of root sets, Coxeter diagrams, and classification of
// subdiagrams as elliptic (finite type), parabolic (affine type), Lanner,
// or none of these.
//
// No square roots are ever taken: the normalized Gram entry
//   g_ij = (e_i, e_j) / sqrt((e_i, e_i) (e_j, e_j))
// is stored as its square c_ij together with the sign of (e_i, e_j).
// Definiteness questions are answered on the integer matrix of raw inner
// products, which is congruent to the normalized one.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "vinberg/lattice.hpp"
#include "vinberg/linalg.hpp"
#include "vinberg/rational.hpp"
#include "vinberg/vertex_set.hpp"

namespace vinberg {

class GramMatrix {
public:
  GramMatrix() = default;
  // Raw data: norms[i] = (e_i, e_i) > 0, products symmetric with
  // products[i][i] == norms[i].  Throws ConfigError otherwise.
  GramMatrix(std::vector<Coord> norms, IntMatrix products);

  std::size_t size() const { return norms_.size(); }
  Coord norm(std::size_t i) const { return norms_[i]; }
  Coord product(std::size_t i, std::size_t j) const { return products_[i][j]; }
  const std::vector<Coord>& norms() const { return norms_; }
  const IntMatrix& products() const { return products_; }

  // (e_i, e_j)^2 / ((e_i, e_i)(e_j, e_j)), exact.
  Rational c(std::size_t i, std::size_t j) const;
  // Sign of (e_i, e_j): -1, 0 or 1.
  int sign(std::size_t i, std::size_t j) const;

  friend bool operator==(const GramMatrix&, const GramMatrix&) = default;

private:
  std::vector<Coord> norms_;
  IntMatrix products_;
};

GramMatrix gram(const QuadraticForm& form, const std::vector<Root>& roots);

enum class EdgeKind : std::uint8_t {
  None,   // orthogonal walls, angle pi/2
  Finite, // angle pi/m, m >= 3
  Heavy,  // parallel walls, angle 0
  Dashed, // divergent walls
};

struct EdgeLabel {
  EdgeKind kind = EdgeKind::None;
  int m = 2; // meaningful for Finite only

  static EdgeLabel none() { return {}; }
  static EdgeLabel finite(int m) { return {EdgeKind::Finite, m}; }
  static EdgeLabel heavy() { return {EdgeKind::Heavy, 0}; }
  static EdgeLabel dashed() { return {EdgeKind::Dashed, 0}; }

  bool present() const { return kind != EdgeKind::None; }
  friend bool operator==(const EdgeLabel&, const EdgeLabel&) = default;
};

std::string to_string(const EdgeLabel& label);

// Label for a normalized square c with a non-positive sign.  Throws
// NonCoxeterAngle(i, j, c) when 0 < c < 1 is not cos^2(pi/m) for m in
// {3, 4, 6}; other m give irrational c and cannot occur.
EdgeLabel label_for(const Rational& c, std::size_t i, std::size_t j);

class CoxeterDiagram {
public:
  CoxeterDiagram() = default;
  explicit CoxeterDiagram(std::size_t size);

  std::size_t size() const { return size_; }
  const EdgeLabel& edge(std::size_t i, std::size_t j) const { return labels_[i * size_ + j]; }
  void set_edge(std::size_t i, std::size_t j, EdgeLabel label);

  // Vertices joined to v by any edge (finite, heavy or dashed).
  const VertexSet& neighbors(std::size_t v) const { return neighbors_[v]; }
  VertexSet neighbors(const VertexSet& s) const;
  VertexSet all() const { return VertexSet::range(size_); }

  // Connected components of the subgraph induced on s.
  std::vector<VertexSet> components(const VertexSet& s) const;

  friend bool operator==(const CoxeterDiagram& a, const CoxeterDiagram& b) {
    return a.size_ == b.size_ && a.labels_ == b.labels_;
  }

private:
  std::size_t size_ = 0;
  std::vector<EdgeLabel> labels_;
  std::vector<VertexSet> neighbors_;
};

// Throws NonCoxeterAngle for a pair with a positive inner product or an
// inadmissible c.
CoxeterDiagram diagram(const GramMatrix& gram);

// Irreducible finite or affine Coxeter type.
struct ComponentType {
  char family = 'A'; // A B D E F G
  int index = 1;     // subscript; for affine types the subscript of the tilde name
  bool affine = false;

  std::size_t vertex_count() const { return static_cast<std::size_t>(index) + (affine ? 1 : 0); }
  int rank() const { return index; }
  // "A5", "E8", "~E6", "~G2".
  std::string name() const;

  friend bool operator==(const ComponentType&, const ComponentType&) = default;
  friend auto operator<=>(const ComponentType&, const ComponentType&) = default;
};

// Recognizes a connected vertex set as an elliptic or affine component.
std::optional<ComponentType> classify_component(const CoxeterDiagram& d, const VertexSet& component);

// Memoizes classify_component over one diagram.  Not thread safe; the
// diagram must outlive the cache.
class ComponentCache {
public:
  explicit ComponentCache(const CoxeterDiagram& d) : d_(&d) {}

  const std::optional<ComponentType>& component(const VertexSet& connected);
  bool elliptic_component(const VertexSet& connected);
  bool affine_component(const VertexSet& connected);
  // Every component of s is elliptic.
  bool elliptic(const VertexSet& s);
  // The component of s containing v.
  VertexSet component_of(const VertexSet& s, std::size_t v) const;

private:
  const CoxeterDiagram* d_;
  std::unordered_map<VertexSet, std::optional<ComponentType>, VertexSetHash> cache_;
};

enum class SubdiagramKind { Elliptic, Parabolic, Lanner, Indefinite };

std::string to_string(SubdiagramKind kind);

struct SubdiagramClass {
  // Indefinite covers every subset that is none of the other three,
  // including mixtures of elliptic and affine components.
  SubdiagramKind kind = SubdiagramKind::Indefinite;
  std::vector<ComponentType> components; // sorted; filled for Elliptic and Parabolic
  int rank = 0;                          // |S| for Elliptic and Lanner, |S| - #components for Parabolic
  bool broken_line = false;              // a Dashed edge lies inside the subset

  friend bool operator==(const SubdiagramClass&, const SubdiagramClass&) = default;
};

// Needs the Gram matrix to decide Lanner exactly (sign of the determinant).
SubdiagramClass classify_subdiagram(const CoxeterDiagram& d, const GramMatrix& g, const VertexSet& subset);

struct EnumerationLimits {
  std::uint64_t max_subsets = 10'000'000;
};

// All connected subsets of `within` whose induced diagram is elliptic.
std::vector<VertexSet> connected_elliptic_subsets(const CoxeterDiagram& d, const VertexSet& within,
                                                  const EnumerationLimits& limits = {});

// All connected affine subsets, deduplicated, sorted.
std::vector<VertexSet> connected_parabolic_subsets(const CoxeterDiagram& d,
                                                   const EnumerationLimits& limits = {});

// Elliptic subsets of `within` with exactly `size` vertices, through a
// depth-first search that keeps the current set elliptic.
std::vector<VertexSet> elliptic_subsets(const CoxeterDiagram& d, const VertexSet& within, std::size_t size,
                                        const EnumerationLimits& limits = {});

// Streaming form of elliptic_subsets.  Returns false when `visit` asked to
// stop by returning false.
bool for_each_elliptic_subset(const CoxeterDiagram& d, const VertexSet& within, std::size_t size,
                              const std::function<bool(const VertexSet&)>& visit,
                              const EnumerationLimits& limits = {});

// Largest elliptic subset size inside `within`.
std::size_t max_elliptic_size(const CoxeterDiagram& d, const VertexSet& within,
                              const EnumerationLimits& limits = {});

// Parabolic subsets (unions of pairwise non-adjacent affine components).
// rank < 0 returns every parabolic subset.
std::vector<VertexSet> parabolic_subsets(const CoxeterDiagram& d, int rank, const EnumerationLimits& limits = {});

// Dispatches on kind.  Lanner ignores `rank` beyond matching |S|;
// Indefinite is rejected with ConfigError.
std::vector<VertexSet> enumerate_subdiagrams(const CoxeterDiagram& d, const GramMatrix& g, SubdiagramKind kind,
                                             int rank, const EnumerationLimits& limits = {});

// Minimal non-elliptic subsets: affine components, Lanner diagrams and
// Dashed pairs.  Sorted.
std::vector<VertexSet> critical_subdiagrams(const CoxeterDiagram& d, const GramMatrix& g,
                                            const EnumerationLimits& limits = {});

} // namespace vinberg

#endif
