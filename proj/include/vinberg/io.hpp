#ifndef VINBERG_IO_HPP_
#define VINBERG_IO_HPP_

// Documents describing a set of walls and everything computed from it, in
// JSON (lossless, schema 1), Graphviz DOT and plain text.
//
// JSON conventions: vertex indices are 0-based positions in `roots`;
// integers beyond 2^53 in magnitude are written as decimal strings;
// rationals are "p/q" strings.  DOT and ASCII number walls from 1.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "vinberg/engine.hpp"
#include "vinberg/obstruction.hpp"
#include "vinberg/volume.hpp"

namespace vinberg {

inline constexpr int kSchemaVersion = 1;

enum class Format { Json, Dot, Ascii };

// "json", "dot", "ascii".  Throws ConfigError otherwise.
Format parse_format(const std::string& name);

struct RunDocument {
  int dim = 2;
  std::optional<Coord> phi; // absent when only a Gram block was given
  std::vector<Root> roots;  // empty when only a Gram block was given
  std::size_t initial_count = 0;
  std::string command;
  std::optional<Verdict> verdict;
  std::vector<StepLog> steps;
  GramMatrix gram;
  CoxeterDiagram diagram;
  VolumeReport volume;
  SymmetryReport symmetry;
  std::optional<ObstructionCertificate> certificate;
  std::string version = VINBERG_VERSION;

  friend bool operator==(const RunDocument&, const RunDocument&) = default;
};

// Diagram, volume and symmetry of a Gram block in dimension n.  The cusp
// orbits use every rank n-1 parabolic subset when the volume is infinite.
void analyze(RunDocument& doc);

RunDocument document_from_run(const RunReport& report);
RunDocument document_from_roots(const QuadraticForm& form, const std::vector<Root>& roots, std::size_t initial_count);
RunDocument document_from_gram(int dim, const GramMatrix& gram);

nlohmann::ordered_json to_json(const RunDocument& doc);
// Throws ParseError naming the offending field.
RunDocument document_from_json(const nlohmann::json& j);

std::string serialize(const RunDocument& doc);
RunDocument parse_document(const std::string& text);

std::string render_dot(const RunDocument& doc);
std::string render_ascii(const RunDocument& doc);
std::string render(const RunDocument& doc, Format format);

// Input accepted by `check`: either
//   {"form": {"phi": 3, "dim": 3}, "roots": [[k0, ..., kn], ...]}
// (roots may also be objects with a "vector" field, as in run output), or
//   {"dim": 3, "gram": [[...], ...]}
//   {"dim": 3, "gram": {"norms": [...], "products": [[...], ...]}}
// with raw integer inner products.
struct CheckInput {
  std::optional<Coord> phi;
  std::optional<int> dim;
  std::vector<LatticeVector> roots;
  std::optional<GramMatrix> gram;
};

// Throws ParseError with line and column for malformed JSON and with a
// field path for well-formed JSON of the wrong shape.
CheckInput parse_check_input(const std::string& text);

// Inverse of ComponentType::name.  Throws ParseError.
ComponentType parse_component(const std::string& name, const std::string& field = {});

} // namespace vinberg

#endif
