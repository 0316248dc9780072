#include "vinberg/io.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace vinberg {

using nlohmann::json;
using nlohmann::ordered_json;

Format parse_format(const std::string& name) {
  if (name == "json")
    return Format::Json;
  if (name == "dot")
    return Format::Dot;
  if (name == "ascii")
    return Format::Ascii;
  throw ConfigError("unknown format '" + name + "' (expected json, dot or ascii)");
}

namespace {

void attach_symmetry(RunDocument& doc) {
  std::vector<VertexSet> ideal = doc.volume.ideal_vertices;
  if (!doc.volume.finite) {
    try {
      ideal = ideal_vertices(doc.diagram, doc.dim);
    } catch (const EnumerationBudgetExceeded&) {
      ideal.clear();
    }
  }
  doc.symmetry = diagram_symmetries(doc.gram, ideal);
}

} // namespace

void analyze(RunDocument& doc) {
  doc.diagram = diagram(doc.gram);
  doc.volume = is_finite_volume(doc.diagram, doc.gram, doc.dim);
  attach_symmetry(doc);
}

RunDocument document_from_roots(const QuadraticForm& form, const std::vector<Root>& roots, std::size_t initial_count) {
  RunDocument doc;
  doc.dim = form.dim();
  doc.phi = form.phi();
  doc.roots = roots;
  doc.initial_count = initial_count;
  doc.gram = gram(form, roots);
  analyze(doc);
  return doc;
}

RunDocument document_from_run(const RunReport& report) {
  RunDocument doc;
  doc.dim = report.form.dim();
  doc.phi = report.form.phi();
  doc.roots = report.roots;
  doc.initial_count = report.initial_count;
  doc.command = "run";
  doc.verdict = report.verdict;
  doc.steps = report.steps;
  doc.gram = report.gram;
  doc.diagram = report.diagram;
  doc.volume = report.volume;
  attach_symmetry(doc);
  return doc;
}

RunDocument document_from_gram(int dim, const GramMatrix& gram) {
  if (dim < 2)
    throw ConfigError("dimension must be at least 2, got " + std::to_string(dim));
  RunDocument doc;
  doc.dim = dim;
  doc.gram = gram;
  analyze(doc);
  return doc;
}

namespace {

constexpr std::int64_t kExactDouble = std::int64_t{1} << 53;

ordered_json integer(std::int64_t x) {
  if (x > kExactDouble || x < -kExactDouble)
    return std::to_string(x);
  return x;
}

ordered_json integer(std::uint64_t x) {
  if (x > static_cast<std::uint64_t>(kExactDouble))
    return std::to_string(x);
  return x;
}

ordered_json vector_json(const LatticeVector& v) {
  ordered_json a = ordered_json::array();
  for (Coord x : v.coords())
    a.push_back(integer(x));
  return a;
}

ordered_json set_json(const VertexSet& s) {
  ordered_json a = ordered_json::array();
  s.for_each([&](std::size_t v) { a.push_back(v); });
  return a;
}

ordered_json sets_json(const std::vector<VertexSet>& sets) {
  ordered_json a = ordered_json::array();
  for (const auto& s : sets)
    a.push_back(set_json(s));
  return a;
}

ordered_json root_json(const Root& r) { return {{"vector", vector_json(r.vector)}, {"norm", integer(r.norm)}}; }

ordered_json matrix_json(const IntMatrix& m) {
  ordered_json a = ordered_json::array();
  for (const auto& row : m) {
    ordered_json r = ordered_json::array();
    for (Coord x : row)
      r.push_back(integer(x));
    a.push_back(r);
  }
  return a;
}

ordered_json components_json(const std::vector<ComponentType>& cs) {
  ordered_json a = ordered_json::array();
  for (const auto& c : cs)
    a.push_back(c.name());
  return a;
}

ordered_json class_json(const SubdiagramClass& c) {
  return {{"kind", to_string(c.kind)},
          {"components", components_json(c.components)},
          {"rank", c.rank},
          {"broken_line", c.broken_line}};
}

std::string label_text(const EdgeLabel& l) {
  switch (l.kind) {
  case EdgeKind::Finite:
    return std::to_string(l.m);
  case EdgeKind::Heavy:
    return "heavy";
  case EdgeKind::Dashed:
    return "dashed";
  case EdgeKind::None:
    break;
  }
  return "none";
}

std::string form_text(std::optional<Coord> phi, int dim) {
  std::string out = phi ? "-" + std::to_string(*phi) + " x0^2" : "-phi x0^2";
  for (int i = 1; i <= dim; ++i)
    out += " + x" + std::to_string(i) + "^2";
  return out;
}

ordered_json certificate_json(const ObstructionCertificate& c) {
  ordered_json interim = ordered_json::array();
  for (const auto& r : c.interim_roots)
    interim.push_back(root_json(r));
  ordered_json isolated_classes = ordered_json::array();
  for (const auto& k : c.gamma_p.isolated_classes)
    isolated_classes.push_back(class_json(k));
  auto basis = [](const std::vector<LatticeVector>& vs) {
    ordered_json a = ordered_json::array();
    for (const auto& v : vs)
      a.push_back(vector_json(v));
    return a;
  };
  ordered_json checks = ordered_json::array();
  for (const auto& k : c.norm_checks)
    checks.push_back({{"norm", integer(k.norm)}, {"step", integer(k.step)}, {"solvable", k.solvable}});
  ordered_json out;
  out["n"] = c.n;
  out["case"] = c.case_tag;
  out["interim_roots"] = interim;
  out["gamma_p"] = {{"subset", set_json(c.gamma_p.subset)},
                    {"rank", c.gamma_p.rank},
                    {"components", components_json(c.gamma_p.components)},
                    {"isolated", sets_json(c.gamma_p.isolated)},
                    {"isolated_classes", isolated_classes}};
  out["family_basis"] = basis(c.family_basis);
  out["family_gram"] = matrix_json(c.family_gram);
  out["norm_identity"] = c.norm_identity;
  out["forced_root"] = c.forced_root ? root_json(*c.forced_root) : ordered_json(nullptr);
  out["forced_component"] = c.forced_component ? ordered_json(c.forced_component->name()) : ordered_json(nullptr);
  out["extended_parabolic"] = set_json(c.extended_parabolic);
  out["extended_rank"] = c.extended_rank;
  out["reduced_basis"] = basis(c.reduced_basis);
  out["norm_checks"] = checks;
  out["steps"] = c.steps;
  return out;
}

} // namespace

ordered_json to_json(const RunDocument& doc) {
  ordered_json j;
  j["form"] = {{"phi", doc.phi ? integer(*doc.phi) : ordered_json(nullptr)},
               {"dim", doc.dim},
               {"text", form_text(doc.phi, doc.dim)}};

  ordered_json roots = ordered_json::array();
  for (std::size_t i = 0; i < doc.roots.size(); ++i) {
    ordered_json r = root_json(doc.roots[i]);
    r["initial"] = i < doc.initial_count;
    roots.push_back(r);
  }
  j["roots"] = roots;

  ordered_json normalized = ordered_json::array();
  for (std::size_t a = 0; a < doc.gram.size(); ++a) {
    ordered_json row = ordered_json::array();
    for (std::size_t b = 0; b < doc.gram.size(); ++b)
      row.push_back(to_string(doc.gram.sign(a, b) < 0 ? Rational(-doc.gram.c(a, b)) : doc.gram.c(a, b)));
    normalized.push_back(row);
  }
  ordered_json norms = ordered_json::array();
  for (Coord x : doc.gram.norms())
    norms.push_back(integer(x));
  j["gram"] = {{"norms", norms}, {"products", matrix_json(doc.gram.products())}, {"normalized", normalized}};

  ordered_json edges = ordered_json::array();
  for (std::size_t a = 0; a < doc.diagram.size(); ++a)
    for (std::size_t b = a + 1; b < doc.diagram.size(); ++b)
      if (doc.diagram.edge(a, b).present())
        edges.push_back({{"i", a}, {"j", b}, {"label", label_text(doc.diagram.edge(a, b))}});
  j["diagram"] = {{"vertices", doc.diagram.size()}, {"edges", edges}};

  const auto& v = doc.volume;
  j["volume"] = {{"finite", v.finite},
                 {"compact", v.compact},
                 {"cusps", v.ideal_vertices.size()},
                 {"ordinary_vertices", sets_json(v.ordinary_vertices)},
                 {"ideal_vertices", sets_json(v.ideal_vertices)},
                 {"witness", v.witness ? set_json(*v.witness) : ordered_json(nullptr)},
                 {"witness_extensions", v.witness_extensions},
                 {"sufficient_condition",
                  v.sufficient_condition ? ordered_json(*v.sufficient_condition) : ordered_json(nullptr)}};

  ordered_json gens = ordered_json::array();
  for (const auto& p : doc.symmetry.generators)
    gens.push_back(p);
  j["symmetry"] = {{"order", integer(doc.symmetry.order)}, {"generators", gens}, {"cusp_orbits", doc.symmetry.cusp_orbits}};

  j["certificate"] = doc.certificate ? certificate_json(*doc.certificate) : ordered_json(nullptr);

  ordered_json steps = ordered_json::array();
  for (const auto& s : doc.steps)
    steps.push_back({{"priority", to_string(s.priority)},
                     {"candidates", s.candidates},
                     {"accepted", s.accepted},
                     {"finite_after", s.finite_after}});
  j["meta"] = {{"schema", kSchemaVersion},
               {"version", doc.version},
               {"command", doc.command},
               {"seed_free", true},
               {"initial_count", doc.initial_count},
               {"verdict", doc.verdict ? ordered_json(to_string(*doc.verdict)) : ordered_json(nullptr)},
               {"steps", steps}};
  return j;
}

namespace {

// A JSON value together with its path, for error messages.
struct Field {
  const json& value;
  std::string path;

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(path, what); }

  bool has(const char* key) const { return value.is_object() && value.contains(key); }

  Field at(const char* key) const {
    if (!value.is_object())
      fail("expected an object");
    auto it = value.find(key);
    if (it == value.end())
      throw ParseError(path.empty() ? key : path + "." + key, "missing field");
    return {*it, path.empty() ? key : path + "." + key};
  }
  Field at(std::size_t i) const { return {value[i], path + "[" + std::to_string(i) + "]"}; }

  std::size_t size() const {
    if (!value.is_array())
      fail("expected an array");
    return value.size();
  }
  bool is_null() const { return value.is_null(); }

  std::int64_t coord() const {
    if (value.is_number_integer())
      return value.get<std::int64_t>();
    if (value.is_string()) {
      const auto& s = value.get_ref<const std::string&>();
      try {
        std::size_t used = 0;
        const long long x = std::stoll(s, &used);
        if (used == s.size())
          return x;
      } catch (const std::exception&) {
      }
      fail("'" + s + "' is not a 64-bit integer");
    }
    fail("expected an integer");
  }
  std::uint64_t unsigned_value() const {
    if (value.is_number_unsigned())
      return value.get<std::uint64_t>();
    if (value.is_string()) {
      const auto& s = value.get_ref<const std::string&>();
      try {
        std::size_t used = 0;
        const unsigned long long x = std::stoull(s, &used);
        if (used == s.size() && s[0] != '-')
          return x;
      } catch (const std::exception&) {
      }
    }
    fail("expected a non-negative integer");
  }
  std::size_t index() const { return static_cast<std::size_t>(unsigned_value()); }
  int small() const {
    const auto x = coord();
    if (x < INT32_MIN || x > INT32_MAX)
      fail("integer out of range");
    return static_cast<int>(x);
  }
  bool boolean() const {
    if (!value.is_boolean())
      fail("expected true or false");
    return value.get<bool>();
  }
  const std::string& string() const {
    if (!value.is_string())
      fail("expected a string");
    return value.get_ref<const std::string&>();
  }
};

LatticeVector read_vector(const Field& f) {
  std::vector<Coord> coords;
  for (std::size_t i = 0; i < f.size(); ++i)
    coords.push_back(f.at(i).coord());
  return LatticeVector(std::move(coords));
}

VertexSet read_set(const Field& f) {
  VertexSet s;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const std::size_t v = f.at(i).index();
    if (v >= VertexSet::kCapacity)
      f.at(i).fail("vertex index too large");
    s.insert(v);
  }
  return s;
}

std::vector<VertexSet> read_sets(const Field& f) {
  std::vector<VertexSet> out;
  for (std::size_t i = 0; i < f.size(); ++i)
    out.push_back(read_set(f.at(i)));
  return out;
}

IntMatrix read_matrix(const Field& f) {
  IntMatrix m;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const LatticeVector row = read_vector(f.at(i));
    m.emplace_back(row.coords().begin(), row.coords().end());
  }
  return m;
}

Root read_root(const Field& f) { return Root{read_vector(f.at("vector")), f.at("norm").coord()}; }

std::vector<ComponentType> read_components(const Field& f) {
  std::vector<ComponentType> out;
  for (std::size_t i = 0; i < f.size(); ++i)
    out.push_back(parse_component(f.at(i).string(), f.at(i).path));
  return out;
}

SubdiagramKind read_kind(const Field& f) {
  for (auto k : {SubdiagramKind::Elliptic, SubdiagramKind::Parabolic, SubdiagramKind::Lanner, SubdiagramKind::Indefinite})
    if (to_string(k) == f.string())
      return k;
  f.fail("unknown subdiagram kind '" + f.string() + "'");
}

EdgeLabel read_label(const Field& f) {
  const std::string& s = f.string();
  if (s == "heavy")
    return EdgeLabel::heavy();
  if (s == "dashed")
    return EdgeLabel::dashed();
  if (s == "3" || s == "4" || s == "6")
    return EdgeLabel::finite(std::stoi(s));
  f.fail("unknown edge label '" + s + "'");
}

ObstructionCertificate read_certificate(const Field& f) {
  ObstructionCertificate c;
  c.n = f.at("n").small();
  c.case_tag = f.at("case").string();
  const Field interim = f.at("interim_roots");
  for (std::size_t i = 0; i < interim.size(); ++i)
    c.interim_roots.push_back(read_root(interim.at(i)));
  const Field gp = f.at("gamma_p");
  c.gamma_p.subset = read_set(gp.at("subset"));
  c.gamma_p.rank = gp.at("rank").small();
  c.gamma_p.components = read_components(gp.at("components"));
  c.gamma_p.isolated = read_sets(gp.at("isolated"));
  const Field classes = gp.at("isolated_classes");
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const Field k = classes.at(i);
    c.gamma_p.isolated_classes.push_back(SubdiagramClass{read_kind(k.at("kind")), read_components(k.at("components")),
                                                         k.at("rank").small(), k.at("broken_line").boolean()});
  }
  auto basis = [](const Field& b) {
    std::vector<LatticeVector> out;
    for (std::size_t i = 0; i < b.size(); ++i)
      out.push_back(read_vector(b.at(i)));
    return out;
  };
  c.family_basis = basis(f.at("family_basis"));
  c.family_gram = read_matrix(f.at("family_gram"));
  c.norm_identity = f.at("norm_identity").string();
  if (!f.at("forced_root").is_null())
    c.forced_root = read_root(f.at("forced_root"));
  if (!f.at("forced_component").is_null())
    c.forced_component = parse_component(f.at("forced_component").string(), "certificate.forced_component");
  c.extended_parabolic = read_set(f.at("extended_parabolic"));
  c.extended_rank = f.at("extended_rank").small();
  c.reduced_basis = basis(f.at("reduced_basis"));
  const Field checks = f.at("norm_checks");
  for (std::size_t i = 0; i < checks.size(); ++i) {
    const Field k = checks.at(i);
    c.norm_checks.push_back(NormCheck{k.at("norm").coord(), k.at("step").coord(), k.at("solvable").boolean()});
  }
  const Field steps = f.at("steps");
  for (std::size_t i = 0; i < steps.size(); ++i)
    c.steps.push_back(steps.at(i).string());
  return c;
}

GramMatrix make_gram(const Field& where, std::vector<Coord> norms, IntMatrix products) {
  try {
    return GramMatrix(std::move(norms), std::move(products));
  } catch (const ConfigError& e) {
    where.fail(e.what());
  }
}

std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    auto [line, column] = line_column(text, e.byte);
    std::string what = e.what();
    // Drop the library's "[json.exception.parse_error.101] parse error at ...: " prefix.
    if (auto colon = what.find(": "); colon != std::string::npos)
      what = what.substr(colon + 2);
    throw ParseError("", what, line, column);
  }
}

} // namespace

RunDocument document_from_json(const json& j) {
  const Field top{j, ""};
  RunDocument doc;
  const Field form = top.at("form");
  doc.dim = form.at("dim").small();
  if (!form.at("phi").is_null())
    doc.phi = form.at("phi").coord();

  const Field roots = top.at("roots");
  for (std::size_t i = 0; i < roots.size(); ++i)
    doc.roots.push_back(read_root(roots.at(i)));

  const Field g = top.at("gram");
  const Field norms_field = g.at("norms");
  std::vector<Coord> norms;
  for (std::size_t i = 0; i < norms_field.size(); ++i)
    norms.push_back(norms_field.at(i).coord());
  doc.gram = make_gram(g, std::move(norms), read_matrix(g.at("products")));
  if (g.has("normalized")) {
    // Derived data; accept it only when it agrees.
    const Field normalized = g.at("normalized");
    if (normalized.size() != doc.gram.size())
      normalized.fail("size does not match the Gram matrix");
    for (std::size_t a = 0; a < doc.gram.size(); ++a) {
      const Field row = normalized.at(a);
      if (row.size() != doc.gram.size())
        row.fail("size does not match the Gram matrix");
      for (std::size_t b = 0; b < doc.gram.size(); ++b) {
        const Rational c = doc.gram.sign(a, b) < 0 ? Rational(-doc.gram.c(a, b)) : doc.gram.c(a, b);
        Rational given;
        try {
          given = parse_rational(row.at(b).string());
        } catch (const std::invalid_argument& e) {
          row.at(b).fail(e.what());
        }
        if (given != c)
          row.at(b).fail("disagrees with the raw products");
      }
    }
  }

  const Field dg = top.at("diagram");
  doc.diagram = CoxeterDiagram(dg.at("vertices").index());
  const Field edges = dg.at("edges");
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const Field edge = edges.at(e);
    const std::size_t a = edge.at("i").index(), b = edge.at("j").index();
    if (a >= doc.diagram.size() || b >= doc.diagram.size() || a == b)
      edge.fail("bad endpoints");
    doc.diagram.set_edge(a, b, read_label(edge.at("label")));
  }

  const Field v = top.at("volume");
  doc.volume.finite = v.at("finite").boolean();
  doc.volume.compact = v.at("compact").boolean();
  doc.volume.ordinary_vertices = read_sets(v.at("ordinary_vertices"));
  doc.volume.ideal_vertices = read_sets(v.at("ideal_vertices"));
  if (!v.at("witness").is_null())
    doc.volume.witness = read_set(v.at("witness"));
  doc.volume.witness_extensions = v.at("witness_extensions").small();
  if (!v.at("sufficient_condition").is_null())
    doc.volume.sufficient_condition = v.at("sufficient_condition").boolean();

  const Field sym = top.at("symmetry");
  doc.symmetry.order = sym.at("order").unsigned_value();
  const Field gens = sym.at("generators");
  for (std::size_t i = 0; i < gens.size(); ++i) {
    Permutation p;
    for (std::size_t k = 0; k < gens.at(i).size(); ++k)
      p.push_back(gens.at(i).at(k).index());
    doc.symmetry.generators.push_back(std::move(p));
  }
  const Field orbits = sym.at("cusp_orbits");
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    std::vector<std::size_t> orbit;
    for (std::size_t k = 0; k < orbits.at(i).size(); ++k)
      orbit.push_back(orbits.at(i).at(k).index());
    doc.symmetry.cusp_orbits.push_back(std::move(orbit));
  }

  if (!top.at("certificate").is_null())
    doc.certificate = read_certificate(top.at("certificate"));

  const Field meta = top.at("meta");
  if (meta.at("schema").coord() != kSchemaVersion)
    meta.at("schema").fail("unsupported schema version");
  doc.version = meta.at("version").string();
  doc.command = meta.at("command").string();
  doc.initial_count = meta.at("initial_count").index();
  if (!meta.at("verdict").is_null()) {
    const std::string& verdict = meta.at("verdict").string();
    if (verdict == to_string(Verdict::FiniteVolume))
      doc.verdict = Verdict::FiniteVolume;
    else if (verdict == to_string(Verdict::BudgetExhausted))
      doc.verdict = Verdict::BudgetExhausted;
    else
      meta.at("verdict").fail("unknown verdict '" + verdict + "'");
  }
  const Field steps = meta.at("steps");
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const Field s = steps.at(i);
    StepLog log;
    try {
      log.priority = parse_rational(s.at("priority").string());
    } catch (const std::invalid_argument& e) {
      s.at("priority").fail(e.what());
    }
    log.candidates = s.at("candidates").index();
    log.accepted = s.at("accepted").index();
    log.finite_after = s.at("finite_after").boolean();
    doc.steps.push_back(log);
  }
  return doc;
}

std::string serialize(const RunDocument& doc) { return to_json(doc).dump(2) + "\n"; }

RunDocument parse_document(const std::string& text) { return document_from_json(parse_json(text)); }

ComponentType parse_component(const std::string& name, const std::string& field) {
  ComponentType t;
  std::size_t pos = 0;
  if (pos < name.size() && name[pos] == '~') {
    t.affine = true;
    ++pos;
  }
  const std::string families = "ABCDEFG";
  if (pos >= name.size() || families.find(name[pos]) == std::string::npos)
    throw ParseError(field, "bad component name '" + name + "'");
  t.family = name[pos++];
  if (pos == name.size() || name.size() - pos > 4 ||
      !std::all_of(name.begin() + static_cast<std::ptrdiff_t>(pos), name.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
    throw ParseError(field, "bad component name '" + name + "'");
  t.index = std::stoi(name.substr(pos));
  return t;
}

std::string render_dot(const RunDocument& doc) {
  std::ostringstream out;
  out << "graph coxeter {\n";
  out << "  // " << form_text(doc.phi, doc.dim);
  if (doc.verdict)
    out << ", " << to_string(*doc.verdict);
  out << "\n";
  out << "  node [shape=circle, fontsize=10, width=0.35, fixedsize=true];\n";
  for (std::size_t v = 0; v < doc.diagram.size(); ++v)
    out << "  " << v + 1 << ";\n";
  for (std::size_t a = 0; a < doc.diagram.size(); ++a)
    for (std::size_t b = a + 1; b < doc.diagram.size(); ++b) {
      const EdgeLabel& l = doc.diagram.edge(a, b);
      if (!l.present())
        continue;
      out << "  " << a + 1 << " -- " << b + 1;
      if (l.kind == EdgeKind::Finite)
        out << " [label=\"" << l.m << "\"]";
      else if (l.kind == EdgeKind::Heavy)
        out << " [style=bold]";
      else
        out << " [style=dashed]";
      out << ";\n";
    }
  out << "}\n";
  return out.str();
}

std::string render_ascii(const RunDocument& doc) {
  std::ostringstream out;
  out << "form      " << form_text(doc.phi, doc.dim) << "\n";
  if (doc.verdict)
    out << "verdict   " << to_string(*doc.verdict) << "\n";
  out << "volume    " << (doc.volume.finite ? "finite" : "infinite");
  if (doc.volume.finite)
    out << (doc.volume.compact ? ", compact" : ", not compact");
  const std::size_t cusps = doc.volume.ideal_vertices.size();
  out << ", " << cusps << (cusps == 1 ? " ideal vertex\n" : " ideal vertices\n");
  out << "symmetry  order " << doc.symmetry.order << ", cusp orbits";
  for (const auto& o : doc.symmetry.cusp_orbits)
    out << " " << o.size();
  out << "\n\n";

  if (!doc.roots.empty()) {
    out << "roots\n";
    for (std::size_t i = 0; i < doc.roots.size(); ++i)
      out << std::setw(4) << i + 1 << "  " << to_string(doc.roots[i].vector) << "  norm " << doc.roots[i].norm
          << (i < doc.initial_count ? "  initial" : "") << "\n";
    out << "\n";
  }

  const std::size_t m = doc.diagram.size();
  out << "adjacency (m: angle pi/m, H: parallel, D: divergent, .: orthogonal)\n";
  out << "    ";
  for (std::size_t b = 0; b < m; ++b)
    out << std::setw(3) << b + 1;
  out << "\n";
  for (std::size_t a = 0; a < m; ++a) {
    out << std::setw(4) << a + 1;
    for (std::size_t b = 0; b < m; ++b) {
      const EdgeLabel& l = doc.diagram.edge(a, b);
      std::string cell = a == b ? "-" : ".";
      if (l.kind == EdgeKind::Finite)
        cell = std::to_string(l.m);
      else if (l.kind == EdgeKind::Heavy)
        cell = "H";
      else if (l.kind == EdgeKind::Dashed)
        cell = "D";
      out << std::setw(3) << cell;
    }
    out << "\n";
  }

  if (doc.certificate) {
    const auto& c = *doc.certificate;
    out << "\ncertificate (" << c.case_tag << ")\n";
    for (const auto& s : c.steps)
      out << "  " << s << "\n";
  }
  return out.str();
}

std::string render(const RunDocument& doc, Format format) {
  switch (format) {
  case Format::Json:
    return serialize(doc);
  case Format::Dot:
    return render_dot(doc);
  case Format::Ascii:
    return render_ascii(doc);
  }
  return {};
}

CheckInput parse_check_input(const std::string& text) {
  const json j = parse_json(text);
  const Field top{j, ""};
  if (!j.is_object())
    top.fail("expected an object");
  CheckInput in;
  if (top.has("form")) {
    const Field form = top.at("form");
    if (form.has("phi") && !form.at("phi").is_null())
      in.phi = form.at("phi").coord();
    if (form.has("dim"))
      in.dim = form.at("dim").small();
  }
  if (top.has("phi"))
    in.phi = top.at("phi").coord();
  if (top.has("dim"))
    in.dim = top.at("dim").small();

  if (top.has("roots")) {
    const Field roots = top.at("roots");
    for (std::size_t i = 0; i < roots.size(); ++i) {
      const Field r = roots.at(i);
      in.roots.push_back(read_vector(r.value.is_object() ? r.at("vector") : r));
    }
  }
  if (top.has("gram")) {
    const Field g = top.at("gram");
    if (g.value.is_array()) {
      IntMatrix m = read_matrix(g);
      std::vector<Coord> norms;
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i].size() != m.size())
          g.at(i).fail("row length differs from the number of rows");
        norms.push_back(m[i][i]);
      }
      in.gram = make_gram(g, std::move(norms), std::move(m));
    } else {
      const Field nf = g.at("norms");
      std::vector<Coord> norms;
      for (std::size_t i = 0; i < nf.size(); ++i)
        norms.push_back(nf.at(i).coord());
      in.gram = make_gram(g, std::move(norms), read_matrix(g.at("products")));
    }
  }
  if (in.roots.empty() && !in.gram)
    top.fail("expected \"roots\" or \"gram\"");
  if (!in.roots.empty() && in.gram)
    top.fail("give either \"roots\" or \"gram\", not both");
  return in;
}

} // namespace vinberg
