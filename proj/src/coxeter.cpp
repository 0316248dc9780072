#include "vinberg/coxeter.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>
#include <unordered_set>

namespace vinberg {

GramMatrix::GramMatrix(std::vector<Coord> norms, IntMatrix products)
    : norms_(std::move(norms)), products_(std::move(products)) {
  const std::size_t n = norms_.size();
  if (n > VertexSet::kCapacity)
    throw ConfigError("at most " + std::to_string(VertexSet::kCapacity) + " walls are supported");
  if (products_.size() != n)
    throw ConfigError("gram block: products must be a square matrix matching the norms");
  for (std::size_t i = 0; i < n; ++i) {
    if (products_[i].size() != n)
      throw ConfigError("gram block: products must be a square matrix matching the norms");
    if (norms_[i] <= 0)
      throw ConfigError("gram block: norm " + std::to_string(i) + " is not positive");
    if (products_[i][i] != norms_[i])
      throw ConfigError("gram block: diagonal entry " + std::to_string(i) + " differs from its norm");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (products_[i][j] != products_[j][i])
        throw ConfigError("gram block: products are not symmetric");
}

Rational GramMatrix::c(std::size_t i, std::size_t j) const {
  BigInt p = products_[i][j];
  return Rational(p * p, BigInt(norms_[i]) * norms_[j]);
}

int GramMatrix::sign(std::size_t i, std::size_t j) const {
  Coord p = products_[i][j];
  return (p > 0) - (p < 0);
}

GramMatrix gram(const QuadraticForm& form, const std::vector<Root>& roots) {
  const std::size_t n = roots.size();
  std::vector<Coord> norms(n);
  IntMatrix products(n, std::vector<Coord>(n));
  for (std::size_t i = 0; i < n; ++i) {
    norms[i] = norm(form, roots[i].vector);
    for (std::size_t j = i; j < n; ++j)
      products[i][j] = products[j][i] = inner_product(form, roots[i].vector, roots[j].vector);
  }
  return GramMatrix(std::move(norms), std::move(products));
}

std::string to_string(const EdgeLabel& label) {
  switch (label.kind) {
  case EdgeKind::None:
    return "2";
  case EdgeKind::Finite:
    return std::to_string(label.m);
  case EdgeKind::Heavy:
    return "inf";
  case EdgeKind::Dashed:
    return "dashed";
  }
  return "?";
}

EdgeLabel label_for(const Rational& c, std::size_t i, std::size_t j) {
  if (c == 0)
    return EdgeLabel::none();
  if (c == Rational(1, 4))
    return EdgeLabel::finite(3);
  if (c == Rational(1, 2))
    return EdgeLabel::finite(4);
  if (c == Rational(3, 4))
    return EdgeLabel::finite(6);
  if (c == 1)
    return EdgeLabel::heavy();
  if (c > 1)
    return EdgeLabel::dashed();
  throw NonCoxeterAngle(i, j, to_string(c));
}

CoxeterDiagram::CoxeterDiagram(std::size_t size)
    : size_(size), labels_(size * size), neighbors_(size) {
  if (size > VertexSet::kCapacity)
    throw ConfigError("at most " + std::to_string(VertexSet::kCapacity) + " walls are supported");
}

void CoxeterDiagram::set_edge(std::size_t i, std::size_t j, EdgeLabel label) {
  labels_[i * size_ + j] = label;
  labels_[j * size_ + i] = label;
  if (label.present()) {
    neighbors_[i].insert(j);
    neighbors_[j].insert(i);
  } else {
    neighbors_[i].erase(j);
    neighbors_[j].erase(i);
  }
}

VertexSet CoxeterDiagram::neighbors(const VertexSet& s) const {
  VertexSet out;
  s.for_each([&](std::size_t v) { out |= neighbors_[v]; });
  return out - s;
}

std::vector<VertexSet> CoxeterDiagram::components(const VertexSet& s) const {
  std::vector<VertexSet> out;
  VertexSet left = s;
  while (!left.empty()) {
    VertexSet comp, frontier = VertexSet::of({left.front()});
    while (!frontier.empty()) {
      comp |= frontier;
      VertexSet next;
      frontier.for_each([&](std::size_t v) { next |= neighbors_[v]; });
      frontier = (next & s) - comp;
    }
    out.push_back(comp);
    left -= comp;
  }
  return out;
}

CoxeterDiagram diagram(const GramMatrix& g) {
  CoxeterDiagram d(g.size());
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      if (g.sign(i, j) > 0)
        throw NonCoxeterAngle(i, j, to_string(g.c(i, j)) + " (positive inner product)");
      d.set_edge(i, j, label_for(g.c(i, j), i, j));
    }
  return d;
}

std::string ComponentType::name() const {
  return std::string(affine ? "~" : "") + family + std::to_string(index);
}

namespace {

// Walks from `from` away from `prev` until a leaf; returns the labels met.
std::vector<int> walk_arm(const CoxeterDiagram& d, const VertexSet& s, std::size_t prev, std::size_t from) {
  std::vector<int> labels{d.edge(prev, from).m};
  std::size_t cur = from;
  while (true) {
    VertexSet next = d.neighbors(cur) & s;
    next.erase(prev);
    if (next.size() != 1)
      return labels; // leaf, or a branch point (callers rule that out)
    std::size_t nxt = next.front();
    labels.push_back(d.edge(cur, nxt).m);
    prev = cur;
    cur = nxt;
  }
}

std::optional<ComponentType> classify_tree(const CoxeterDiagram& d, const VertexSet& s, int k, int count4,
                                           int count6) {
  std::vector<std::size_t> branches;
  int max_degree = 0;
  s.for_each([&](std::size_t v) {
    int deg = static_cast<int>((d.neighbors(v) & s).size());
    max_degree = std::max(max_degree, deg);
    if (deg >= 3)
      branches.push_back(v);
  });

  if (count6 > 0) {
    if (count6 > 1 || count4 > 0 || max_degree > 2)
      return std::nullopt;
    if (k == 2)
      return ComponentType{'G', 2, false};
    if (k == 3)
      return ComponentType{'G', 2, true}; // 6 and 3 on a path of three
    return std::nullopt;
  }
  if (max_degree >= 5)
    return std::nullopt;
  if (max_degree == 4)
    return (k == 5 && count4 == 0) ? std::optional<ComponentType>(ComponentType{'D', 4, true}) : std::nullopt;

  if (branches.empty()) {
    // A path: read the labels from one end to the other.
    std::size_t end = 0;
    s.for_each([&](std::size_t v) {
      if ((d.neighbors(v) & s).size() == 1)
        end = v;
    });
    std::vector<int> seq = walk_arm(d, s, end, (d.neighbors(end) & s).front());
    const int last = k - 2;
    std::vector<int> fours;
    for (int i = 0; i <= last; ++i)
      if (seq[static_cast<std::size_t>(i)] == 4)
        fours.push_back(i);
    if (fours.empty())
      return ComponentType{'A', k, false};
    if (fours.size() == 1) {
      int p = fours[0];
      if (p == 0 || p == last)
        return ComponentType{'B', k, false};
      if (k == 4 && p == 1)
        return ComponentType{'F', 4, false};
      if (k == 5 && (p == 1 || p == 2))
        return ComponentType{'F', 4, true};
      return std::nullopt;
    }
    if (fours.size() == 2 && fours[0] == 0 && fours[1] == last && k >= 3)
      return ComponentType{'C', k - 1, true};
    return std::nullopt;
  }

  if (branches.size() == 1) {
    std::size_t b = branches[0];
    std::vector<std::vector<int>> arms;
    (d.neighbors(b) & s).for_each([&](std::size_t u) { arms.push_back(walk_arm(d, s, b, u)); });
    std::sort(arms.begin(), arms.end(),
              [](const auto& x, const auto& y) { return x.size() < y.size(); });
    const std::size_t a0 = arms[0].size(), a1 = arms[1].size(), a2 = arms[2].size();
    if (count4 == 0) {
      if (a0 == 1 && a1 == 1)
        return ComponentType{'D', k, false};
      if (a0 == 1 && a1 == 2 && a2 >= 2 && a2 <= 4)
        return ComponentType{'E', k, false};
      if (a0 == 2 && a1 == 2 && a2 == 2)
        return ComponentType{'E', 6, true};
      if (a0 == 1 && a1 == 3 && a2 == 3)
        return ComponentType{'E', 7, true};
      if (a0 == 1 && a1 == 2 && a2 == 5)
        return ComponentType{'E', 8, true};
      return std::nullopt;
    }
    if (count4 == 1 && a0 == 1 && a1 == 1) {
      // The 4 sits on the outer end of the longest arm.
      for (const auto& arm : arms)
        if (arm.size() == a2 && arm.back() == 4 && std::count(arm.begin(), arm.end(), 4) == 1)
          return ComponentType{'B', k - 1, true};
    }
    return std::nullopt;
  }

  if (branches.size() == 2 && count4 == 0) {
    for (std::size_t b : branches) {
      int leaves = 0;
      (d.neighbors(b) & s).for_each([&](std::size_t u) {
        if ((d.neighbors(u) & s).size() == 1)
          ++leaves;
      });
      if (leaves < 2)
        return std::nullopt;
    }
    return ComponentType{'D', k - 1, true};
  }
  return std::nullopt;
}

} // namespace

std::optional<ComponentType> classify_component(const CoxeterDiagram& d, const VertexSet& s) {
  const int k = static_cast<int>(s.size());
  if (k == 0)
    return std::nullopt;
  if (k == 1)
    return ComponentType{'A', 1, false};
  int edges = 0, count4 = 0, count6 = 0, heavy = 0;
  bool bad = false;
  s.for_each([&](std::size_t v) {
    (d.neighbors(v) & s).for_each([&](std::size_t u) {
      if (u <= v)
        return;
      const EdgeLabel& e = d.edge(u, v);
      ++edges;
      if (e.kind == EdgeKind::Dashed)
        bad = true;
      else if (e.kind == EdgeKind::Heavy)
        ++heavy;
      else if (e.m == 4)
        ++count4;
      else if (e.m == 6)
        ++count6;
      else if (e.m != 3)
        bad = true;
    });
  });
  if (bad)
    return std::nullopt;
  if (heavy > 0)
    return (k == 2) ? std::optional<ComponentType>(ComponentType{'A', 1, true}) : std::nullopt;
  if (edges == k) {
    bool cycle = count4 == 0 && count6 == 0 && k >= 3;
    s.for_each([&](std::size_t v) { cycle = cycle && (d.neighbors(v) & s).size() == 2; });
    return cycle ? std::optional<ComponentType>(ComponentType{'A', k - 1, true}) : std::nullopt;
  }
  if (edges != k - 1 || d.components(s).size() != 1)
    return std::nullopt;
  return classify_tree(d, s, k, count4, count6);
}

const std::optional<ComponentType>& ComponentCache::component(const VertexSet& comp) {
  auto it = cache_.find(comp);
  if (it != cache_.end())
    return it->second;
  return cache_.emplace(comp, classify_component(*d_, comp)).first->second;
}

bool ComponentCache::elliptic_component(const VertexSet& comp) {
  const auto& t = component(comp);
  return t && !t->affine;
}

bool ComponentCache::affine_component(const VertexSet& comp) {
  const auto& t = component(comp);
  return t && t->affine;
}

bool ComponentCache::elliptic(const VertexSet& s) {
  for (const auto& comp : d_->components(s))
    if (!elliptic_component(comp))
      return false;
  return true;
}

VertexSet ComponentCache::component_of(const VertexSet& s, std::size_t v) const {
  VertexSet comp, frontier = VertexSet::of({v});
  while (!frontier.empty()) {
    comp |= frontier;
    VertexSet next;
    frontier.for_each([&](std::size_t u) { next |= d_->neighbors(u); });
    frontier = (next & s) - comp;
  }
  return comp;
}

std::string to_string(SubdiagramKind kind) {
  switch (kind) {
  case SubdiagramKind::Elliptic:
    return "elliptic";
  case SubdiagramKind::Parabolic:
    return "parabolic";
  case SubdiagramKind::Lanner:
    return "lanner";
  case SubdiagramKind::Indefinite:
    return "indefinite";
  }
  return "?";
}

namespace {

class Counter {
public:
  explicit Counter(const EnumerationLimits& limits) : max_(limits.max_subsets) {}
  void tick() {
    if (++count_ > max_)
      throw EnumerationBudgetExceeded("subdiagram enumeration exceeded " + std::to_string(max_) + " subsets");
  }

private:
  std::uint64_t max_;
  std::uint64_t count_ = 0;
};

void esu_extend(const CoxeterDiagram& d, ComponentCache& cls, Counter& counter, const VertexSet& within,
                const VertexSet& sub, VertexSet ext, const VertexSet& closed, std::size_t root,
                std::vector<VertexSet>& out) {
  counter.tick();
  out.push_back(sub);
  while (!ext.empty()) {
    std::size_t w = ext.front();
    ext.erase(w);
    VertexSet grown = sub;
    grown.insert(w);
    if (!cls.elliptic_component(grown))
      continue;
    VertexSet fresh = (d.neighbors(w) & within) - closed;
    VertexSet next_ext = ext;
    fresh.for_each([&](std::size_t u) {
      if (u > root)
        next_ext.insert(u);
    });
    esu_extend(d, cls, counter, within, grown, next_ext, closed | d.neighbors(w) | VertexSet::of({w}), root, out);
  }
}

std::vector<VertexSet> connected_elliptic_impl(const CoxeterDiagram& d, ComponentCache& cls, const VertexSet& within,
                                               const EnumerationLimits& limits) {
  std::vector<VertexSet> out;
  Counter counter(limits);
  within.for_each([&](std::size_t r) {
    VertexSet ext;
    (d.neighbors(r) & within).for_each([&](std::size_t u) {
      if (u > r)
        ext.insert(u);
    });
    VertexSet closed = d.neighbors(r);
    closed.insert(r);
    esu_extend(d, cls, counter, within, VertexSet::of({r}), ext, closed, r, out);
  });
  return out;
}

std::vector<VertexSet> connected_parabolic_impl(const CoxeterDiagram& d, ComponentCache& cls,
                                                const EnumerationLimits& limits) {
  std::unordered_set<VertexSet, VertexSetHash> found;
  for (const auto& c : connected_elliptic_impl(d, cls, d.all(), limits)) {
    d.neighbors(c).for_each([&](std::size_t v) {
      VertexSet t = c;
      t.insert(v);
      const auto& type = cls.component(t);
      if (type && type->affine)
        found.insert(t);
    });
  }
  std::vector<VertexSet> out(found.begin(), found.end());
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace

std::vector<VertexSet> connected_elliptic_subsets(const CoxeterDiagram& d, const VertexSet& within,
                                                  const EnumerationLimits& limits) {
  ComponentCache cls(d);
  auto out = connected_elliptic_impl(d, cls, within, limits);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexSet> connected_parabolic_subsets(const CoxeterDiagram& d, const EnumerationLimits& limits) {
  ComponentCache cls(d);
  return connected_parabolic_impl(d, cls, limits);
}

namespace {

struct EllipticSearch {
  const CoxeterDiagram& d;
  ComponentCache& cls;
  Counter counter;
  std::vector<std::size_t> verts;
  std::size_t min_size, max_size;
  // Receives sets with min_size <= size <= max_size; returning false stops the search.
  std::function<bool(const VertexSet&, std::size_t)> visit;
  bool bound_by_best = false; // prune branches that cannot beat `best`
  std::size_t best = 0;
  bool stopped = false;

  void run(std::size_t idx, const VertexSet& s, std::size_t size) {
    counter.tick();
    if (size >= min_size && visit && !visit(s, size)) {
      stopped = true;
      return;
    }
    best = std::max(best, size);
    if (size == max_size)
      return;
    for (std::size_t i = idx; i < verts.size() && !stopped; ++i) {
      const std::size_t reachable = size + (verts.size() - i);
      if (reachable < min_size || (bound_by_best && reachable <= best))
        return;
      VertexSet grown = s;
      grown.insert(verts[i]);
      if (cls.elliptic_component(cls.component_of(grown, verts[i])))
        run(i + 1, grown, size + 1);
    }
  }
};

} // namespace

std::vector<VertexSet> elliptic_subsets(const CoxeterDiagram& d, const VertexSet& within, std::size_t size,
                                        const EnumerationLimits& limits) {
  std::vector<VertexSet> out;
  for_each_elliptic_subset(d, within, size, [&](const VertexSet& s) {
    out.push_back(s);
    return true;
  }, limits);
  return out;
}

bool for_each_elliptic_subset(const CoxeterDiagram& d, const VertexSet& within, std::size_t size,
                              const std::function<bool(const VertexSet&)>& visit, const EnumerationLimits& limits) {
  if (size == 0)
    return true;
  ComponentCache cls(d);
  EllipticSearch search{d, cls, Counter(limits), within.to_vector(), size, size,
                        [&](const VertexSet& s, std::size_t) { return visit(s); }};
  search.run(0, VertexSet{}, 0);
  return !search.stopped;
}

std::size_t max_elliptic_size(const CoxeterDiagram& d, const VertexSet& within, const EnumerationLimits& limits) {
  ComponentCache cls(d);
  EllipticSearch search{d, cls, Counter(limits), within.to_vector(), 0, within.size(), {}};
  search.bound_by_best = true;
  search.run(0, VertexSet{}, 0);
  return search.best;
}

std::vector<VertexSet> parabolic_subsets(const CoxeterDiagram& d, int rank, const EnumerationLimits& limits) {
  ComponentCache cls(d);
  const auto comps = connected_parabolic_impl(d, cls, limits);
  std::vector<VertexSet> blocks;
  blocks.reserve(comps.size());
  for (const auto& c : comps)
    blocks.push_back(c | d.neighbors(c));
  std::vector<VertexSet> out;
  Counter counter(limits);
  auto rec = [&](auto&& self, std::size_t start, const VertexSet& chosen, const VertexSet& blocked,
                 int chosen_rank) -> void {
    for (std::size_t i = start; i < comps.size(); ++i) {
      if (comps[i].intersects(blocked))
        continue;
      int r = chosen_rank + static_cast<int>(comps[i].size()) - 1;
      if (rank >= 0 && r > rank)
        continue;
      counter.tick();
      VertexSet next = chosen | comps[i];
      if (rank < 0 || r == rank)
        out.push_back(next);
      self(self, i + 1, next, blocked | blocks[i], r);
    }
  };
  rec(rec, 0, VertexSet{}, VertexSet{}, 0);
  std::sort(out.begin(), out.end());
  return out;
}

SubdiagramClass classify_subdiagram(const CoxeterDiagram& d, const GramMatrix& g, const VertexSet& subset) {
  SubdiagramClass out;
  const auto comps = d.components(subset);
  bool all_elliptic = true, all_affine = true, special_edge = false;
  subset.for_each([&](std::size_t v) {
    (d.neighbors(v) & subset).for_each([&](std::size_t u) {
      const auto kind = d.edge(u, v).kind;
      if (kind == EdgeKind::Dashed)
        out.broken_line = true;
      if (kind == EdgeKind::Dashed || kind == EdgeKind::Heavy)
        special_edge = true;
    });
  });
  std::vector<ComponentType> types;
  for (const auto& c : comps) {
    auto t = classify_component(d, c);
    if (!t) {
      all_elliptic = all_affine = false;
      continue;
    }
    types.push_back(*t);
    if (t->affine)
      all_elliptic = false;
    else
      all_affine = false;
  }
  std::sort(types.begin(), types.end());
  if (!subset.empty() && all_elliptic) {
    out.kind = SubdiagramKind::Elliptic;
    out.components = std::move(types);
    out.rank = static_cast<int>(subset.size());
    return out;
  }
  if (!subset.empty() && all_affine) {
    out.kind = SubdiagramKind::Parabolic;
    out.components = std::move(types);
    out.rank = static_cast<int>(subset.size() - comps.size());
    return out;
  }
  const std::size_t k = subset.size();
  if (comps.size() == 1 && !special_edge && k >= 3 && k <= 5) {
    ComponentCache cls(d);
    bool proper_elliptic = true;
    subset.for_each([&](std::size_t v) {
      VertexSet rest = subset;
      rest.erase(v);
      proper_elliptic = proper_elliptic && cls.elliptic(rest);
    });
    if (proper_elliptic && determinant(principal_submatrix(g.products(), subset.to_vector())) < 0) {
      out.kind = SubdiagramKind::Lanner;
      out.rank = static_cast<int>(k);
      return out;
    }
  }
  out.kind = SubdiagramKind::Indefinite;
  return out;
}

std::vector<VertexSet> critical_subdiagrams(const CoxeterDiagram& d, const GramMatrix& g,
                                            const EnumerationLimits& limits) {
  (void)g;
  ComponentCache cls(d);
  std::unordered_set<VertexSet, VertexSetHash> found;
  for (const auto& c : connected_elliptic_impl(d, cls, d.all(), limits)) {
    d.neighbors(c).for_each([&](std::size_t v) {
      VertexSet t = c;
      t.insert(v);
      if (found.count(t) || cls.elliptic(t))
        return;
      bool minimal = true;
      t.for_each([&](std::size_t u) {
        if (!minimal)
          return;
        VertexSet rest = t;
        rest.erase(u);
        minimal = cls.elliptic(rest);
      });
      if (minimal)
        found.insert(t);
    });
  }
  std::vector<VertexSet> out(found.begin(), found.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexSet> enumerate_subdiagrams(const CoxeterDiagram& d, const GramMatrix& g, SubdiagramKind kind,
                                             int rank, const EnumerationLimits& limits) {
  switch (kind) {
  case SubdiagramKind::Elliptic:
    if (rank < 0 || static_cast<std::size_t>(rank) > d.size())
      return {};
    if (rank == 0)
      return {};
    return elliptic_subsets(d, d.all(), static_cast<std::size_t>(rank), limits);
  case SubdiagramKind::Parabolic:
    if (rank == 0)
      return {};
    return parabolic_subsets(d, rank, limits);
  case SubdiagramKind::Lanner: {
    std::vector<VertexSet> out;
    for (const auto& s : critical_subdiagrams(d, g, limits))
      if ((rank < 0 || s.size() == static_cast<std::size_t>(rank)) &&
          classify_subdiagram(d, g, s).kind == SubdiagramKind::Lanner)
        out.push_back(s);
    return out;
  }
  case SubdiagramKind::Indefinite:
    break;
  }
  throw ConfigError("enumeration of indefinite subdiagrams is not supported");
}

} // namespace vinberg
