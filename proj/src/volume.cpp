#include "vinberg/volume.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_set>

namespace vinberg {

namespace {

// Counts the vertices of the polyhedron that contain the edge `face`,
// stopping once more than two are found.
struct FaceExtensions {
  int count = 0;
  std::vector<VertexSet> ordinary;
  std::vector<VertexSet> ideal;
};

FaceExtensions extend_face(const CoxeterDiagram& d, ComponentCache& cls, const VertexSet& face) {
  FaceExtensions out;
  const VertexSet outside = d.all() - face;

  // Ordinary vertices: one more wall keeping everything elliptic.
  outside.for_each([&](std::size_t v) {
    if (out.count > 2)
      return;
    VertexSet t = face;
    t.insert(v);
    if (cls.elliptic_component(cls.component_of(t, v))) {
      out.ordinary.push_back(t);
      ++out.count;
    }
  });
  if (out.count > 2)
    return out;

  // Ideal vertices: each component of the parabolic set is a union of
  // components of the face plus exactly one new wall.
  const auto comps = face.empty() ? std::vector<VertexSet>{} : d.components(face);
  std::vector<std::size_t> walls;
  std::vector<std::uint64_t> touched;
  outside.for_each([&](std::size_t u) {
    VertexSet t = face;
    t.insert(u);
    if (!cls.affine_component(cls.component_of(t, u)))
      return;
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < comps.size(); ++i)
      if (d.neighbors(u).intersects(comps[i]))
        mask |= std::uint64_t{1} << i;
    walls.push_back(u);
    touched.push_back(mask);
  });
  if (walls.empty() || comps.size() > 64)
    return out;
  const std::uint64_t full = comps.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << comps.size()) - 1;
  std::vector<std::size_t> chosen;
  auto cover = [&](auto&& self, std::uint64_t covered) -> void {
    if (out.count > 2)
      return;
    if (covered == full) {
      VertexSet p = face;
      for (std::size_t i : chosen)
        p.insert(walls[i]);
      out.ideal.push_back(p);
      ++out.count;
      return;
    }
    const std::uint64_t next = ~covered & full & (~(~covered & full) + 1); // lowest uncovered component
    for (std::size_t i = 0; i < walls.size(); ++i) {
      if (!(touched[i] & next) || (touched[i] & covered))
        continue;
      bool adjacent = false;
      for (std::size_t j : chosen)
        adjacent = adjacent || d.neighbors(walls[i]).contains(walls[j]);
      if (adjacent)
        continue;
      chosen.push_back(i);
      self(self, covered | touched[i]);
      chosen.pop_back();
    }
  };
  cover(cover, 0);
  return out;
}

} // namespace

VolumeReport is_finite_volume(const CoxeterDiagram& d, const GramMatrix& g, int n, const VolumeOptions& options) {
  if (n < 2)
    throw ConfigError("dimension must be at least 2");
  VolumeReport report;
  ComponentCache cls(d);
  std::unordered_set<VertexSet, VertexSetHash> ordinary, ideal;
  bool any_face = false;
  const bool complete = for_each_elliptic_subset(
      d, d.all(), static_cast<std::size_t>(n - 1),
      [&](const VertexSet& face) {
        any_face = true;
        FaceExtensions ext = extend_face(d, cls, face);
        ordinary.insert(ext.ordinary.begin(), ext.ordinary.end());
        ideal.insert(ext.ideal.begin(), ext.ideal.end());
        if (ext.count != 2) {
          report.witness = face;
          report.witness_extensions = ext.count;
          return false;
        }
        return true;
      },
      options.limits);
  report.finite = complete && any_face;
  if (!any_face)
    report.witness = VertexSet{};
  report.ordinary_vertices.assign(ordinary.begin(), ordinary.end());
  report.ideal_vertices.assign(ideal.begin(), ideal.end());
  std::sort(report.ordinary_vertices.begin(), report.ordinary_vertices.end());
  std::sort(report.ideal_vertices.begin(), report.ideal_vertices.end());
  report.compact = report.finite && report.ideal_vertices.empty();
  if (options.cross_check) {
    try {
      report.sufficient_condition = sufficient_finite_volume_condition(d, g, n, options.cross_check_limits);
    } catch (const EnumerationBudgetExceeded&) {
      report.sufficient_condition.reset();
    }
  }
  return report;
}

bool is_compact(const CoxeterDiagram& d, const GramMatrix& g, int n, const VolumeOptions& options) {
  VolumeOptions quick = options;
  quick.cross_check = false;
  return is_finite_volume(d, g, n, quick).compact;
}

std::vector<VertexSet> ideal_vertices(const CoxeterDiagram& d, int n, const EnumerationLimits& limits) {
  return parabolic_subsets(d, n - 1, limits);
}

bool sufficient_finite_volume_condition(const CoxeterDiagram& d, const GramMatrix& g, int n,
                                        const EnumerationLimits& limits) {
  const auto ideal = parabolic_subsets(d, n - 1, limits);
  for (const auto& c : connected_parabolic_subsets(d, limits)) {
    const VertexSet around = d.neighbors(c);
    bool extends = std::any_of(ideal.begin(), ideal.end(), [&](const VertexSet& p) {
      return c.is_subset_of(p) && !around.intersects(p);
    });
    if (!extends)
      return false;
  }
  for (const auto& s : critical_subdiagrams(d, g, limits)) {
    const auto cls = classify_subdiagram(d, g, s);
    if (cls.kind == SubdiagramKind::Parabolic)
      continue;
    int rank;
    if (cls.kind == SubdiagramKind::Lanner)
      rank = cls.rank;
    else if (s.size() == 2 && cls.broken_line)
      rank = 2;
    else
      return false;
    const int need = n + 1 - rank;
    if (need < 0)
      return false;
    const VertexSet rest = d.all() - s - d.neighbors(s);
    if (max_elliptic_size(d, rest, limits) < static_cast<std::size_t>(need))
      return false;
  }
  return true;
}

bool preserves_gram(const GramMatrix& g, const Permutation& p) {
  if (p.size() != g.size())
    return false;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j)
      if (g.product(p[i], p[j]) != g.product(i, j))
        return false;
  return true;
}

namespace {

class AutomorphismSearch {
public:
  explicit AutomorphismSearch(const GramMatrix& g) : g_(g), m_(g.size()) {
    // Vertices can only map to vertices with the same sorted row.
    std::map<std::vector<Coord>, std::size_t> classes;
    cell_.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      std::vector<Coord> row(g.products()[i]);
      std::sort(row.begin(), row.end());
      row.push_back(g.norm(i));
      cell_[i] = classes.emplace(row, classes.size()).first->second;
    }
  }

  // An automorphism fixing 0..k-1 and sending k to c, if one exists.
  std::optional<Permutation> find(std::size_t k, std::size_t c) {
    if (cell_[k] != cell_[c])
      return std::nullopt;
    image_.assign(m_, m_);
    used_.assign(m_, false);
    for (std::size_t i = 0; i < k; ++i)
      assign(i, i);
    if (!consistent(k, c))
      return std::nullopt;
    assign(k, c);
    if (extend(k + 1))
      return image_;
    return std::nullopt;
  }

private:
  void assign(std::size_t i, std::size_t v) {
    image_[i] = v;
    used_[v] = true;
  }

  bool consistent(std::size_t i, std::size_t v) const {
    if (used_[v] || cell_[i] != cell_[v])
      return false;
    for (std::size_t j = 0; j < m_; ++j)
      if (image_[j] != m_ && g_.product(i, j) != g_.product(v, image_[j]))
        return false;
    return true;
  }

  bool extend(std::size_t i) {
    if (i == m_)
      return true;
    for (std::size_t v = 0; v < m_; ++v) {
      if (!consistent(i, v))
        continue;
      assign(i, v);
      if (extend(i + 1))
        return true;
      image_[i] = m_;
      used_[v] = false;
    }
    return false;
  }

  const GramMatrix& g_;
  std::size_t m_;
  std::vector<std::size_t> cell_;
  Permutation image_;
  std::vector<bool> used_;
};

std::vector<std::size_t> orbit_of(std::size_t start, const std::vector<Permutation>& gens) {
  std::vector<std::size_t> orbit{start};
  for (std::size_t i = 0; i < orbit.size(); ++i)
    for (const auto& p : gens)
      if (std::find(orbit.begin(), orbit.end(), p[orbit[i]]) == orbit.end())
        orbit.push_back(p[orbit[i]]);
  return orbit;
}

} // namespace

SymmetryReport diagram_symmetries(const GramMatrix& g, const std::vector<VertexSet>& ideal) {
  SymmetryReport report;
  const std::size_t m = g.size();
  AutomorphismSearch search(g);
  // Stabilizer chain along the base 0, 1, ..., m-1, deepest level first, so
  // that generators already found for deeper stabilizers are reused.
  for (std::size_t k = m; k-- > 0;) {
    std::vector<std::size_t> orbit = orbit_of(k, report.generators);
    for (std::size_t c = k + 1; c < m; ++c) {
      if (std::find(orbit.begin(), orbit.end(), c) != orbit.end())
        continue;
      if (auto p = search.find(k, c)) {
        report.generators.push_back(*p);
        orbit = orbit_of(k, report.generators);
      }
    }
    std::uint64_t next;
    if (__builtin_mul_overflow(report.order, static_cast<std::uint64_t>(orbit.size()), &next))
      throw OverflowError("symmetry group order exceeds 64 bits");
    report.order = next;
  }
  // Found deepest first; list them in base order.
  std::reverse(report.generators.begin(), report.generators.end());

  std::map<VertexSet, std::size_t> index;
  for (std::size_t i = 0; i < ideal.size(); ++i)
    index.emplace(ideal[i], i);
  std::vector<std::size_t> parent(ideal.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](std::size_t x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& p : report.generators)
    for (std::size_t i = 0; i < ideal.size(); ++i) {
      VertexSet image;
      ideal[i].for_each([&](std::size_t v) { image.insert(p[v]); });
      auto it = index.find(image);
      if (it != index.end())
        parent[root(i)] = root(it->second);
    }
  std::map<std::size_t, std::vector<std::size_t>> orbits;
  for (std::size_t i = 0; i < ideal.size(); ++i)
    orbits[root(i)].push_back(i);
  for (auto& [r, members] : orbits)
    report.cusp_orbits.push_back(members);
  std::sort(report.cusp_orbits.begin(), report.cusp_orbits.end());
  return report;
}

} // namespace vinberg
