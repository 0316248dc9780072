#include <doctest.h>

#include "support/properties.hpp"
#include "vinberg/commands.hpp"

using namespace vinberg;

namespace {

RunDocument final_document(int n) { return document_from_run(run(QuadraticForm(3, n))); }

} // namespace

TEST_CASE("top-level JSON layout") {
  const auto j = to_json(final_document(3));
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it)
    keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"form", "roots", "gram", "diagram", "volume", "symmetry", "certificate", "meta"});
  CHECK(j["meta"]["schema"] == 1);
  CHECK(j["certificate"].is_null());
  CHECK(j["gram"]["normalized"][0][3] == "-3/4");
  CHECK(j["meta"]["verdict"] == "FiniteVolume");
}

TEST_CASE("round trip over the n = 2..13 corpus") {
  for (int n = 2; n <= 13; ++n) {
    CAPTURE(n);
    const RunDocument doc = final_document(n);
    const std::string text = serialize(doc);
    const RunDocument back = parse_document(text);
    CHECK(back == doc);
    CHECK(serialize(back) == text);
  }
}

TEST_CASE("round trip of a certificate document") {
  const CommandResult r = cmd_certify(3, 16);
  REQUIRE(r.exit_code == kExitCertified);
  CHECK(serialize(parse_document(r.output)) == r.output);
}

TEST_CASE("large integers become strings") {
  RunDocument doc = document_from_gram(3, GramMatrix({1}, {{1}}));
  doc.phi = (Coord{1} << 60) + 1;
  doc.roots = {Root{LatticeVector{Coord{1} << 54, 3, -(Coord{1} << 53) - 1, 5}, 7}};
  const auto j = to_json(doc);
  CHECK(j["form"]["phi"] == "1152921504606846977");
  CHECK(j["roots"][0]["vector"][0] == "18014398509481984");
  CHECK(j["roots"][0]["vector"][1] == 3);
  CHECK(j["roots"][0]["vector"][2] == "-9007199254740993");
  CHECK(parse_document(serialize(doc)) == doc);
}

TEST_CASE("randomized round trip") {
  const auto r = testing::roundtrip_property(11, 300);
  CHECK_MESSAGE(r.ok(), r.failure);
}

TEST_CASE("serialization is deterministic") {
  CHECK(serialize(final_document(11)) == serialize(final_document(11)));
}

TEST_CASE("DOT rendering") {
  const std::string dot = render_dot(final_document(3));
  CHECK(dot.rfind("graph coxeter {", 0) == 0);
  CHECK(dot.find("1 -- 2 [label=\"3\"];") != std::string::npos);
  CHECK(dot.find("2 -- 3 [label=\"4\"];") != std::string::npos);
  CHECK(dot.find("1 -- 4 [label=\"6\"];") != std::string::npos);
  CHECK(dot.find("1 -- 3") == std::string::npos);

  const std::string heavy = render_dot(document_from_gram(3, GramMatrix({2, 2}, {{2, -2}, {-2, 2}})));
  CHECK(heavy.find("1 -- 2 [style=bold];") != std::string::npos);
  const std::string dashed = render_dot(document_from_gram(3, GramMatrix({1, 3}, {{1, -2}, {-2, 3}})));
  CHECK(dashed.find("1 -- 2 [style=dashed];") != std::string::npos);
}

TEST_CASE("ASCII rendering lists roots and adjacency") {
  const std::string text = render_ascii(final_document(3));
  CHECK(text.find("(1, 3, 0, 0)") != std::string::npos);
  CHECK(text.find("FiniteVolume") != std::string::npos);
  CHECK(render(final_document(3), Format::Ascii) == text);
}

TEST_CASE("format names") {
  CHECK(parse_format("json") == Format::Json);
  CHECK(parse_format("dot") == Format::Dot);
  CHECK(parse_format("ascii") == Format::Ascii);
  CHECK_THROWS_AS(parse_format("svg"), ConfigError);
}

TEST_CASE("component names parse back") {
  for (const ComponentType& c : {ComponentType{'E', 6, true}, ComponentType{'A', 1, false}, ComponentType{'B', 12, true}})
    CHECK(parse_component(c.name()) == c);
  CHECK_THROWS_AS(parse_component("Q3"), ParseError);
}

TEST_CASE("parse errors carry positions and fields") {
  try {
    parse_check_input("{\n  \"dim\": 3,\n  \"gram\": [[1, 0]\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line >= 3);
    CHECK(e.column > 0);
  }
  try {
    parse_check_input(R"({"form": {"phi": 3, "dim": 3}, "roots": [[1, 3, 0, "x"]]})");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.field == "roots[0][3]");
  }
  try {
    parse_document(R"({"form": {"phi": 3}})");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK_FALSE(e.field.empty());
  }
}

TEST_CASE("tampered normalized entries are rejected") {
  std::string text = serialize(final_document(3));
  const auto pos = text.find("\"-3/4\"");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, 6, "\"-1/4\"");
  CHECK_THROWS_AS(parse_document(text), ParseError);
}

TEST_CASE("check input shapes") {
  const CheckInput a = parse_check_input(R"({"form": {"phi": 3, "dim": 2}, "roots": [[0, -1, 1], {"vector": [0, 0, -1]}]})");
  CHECK(a.phi == 3);
  CHECK(a.roots.size() == 2);
  const CheckInput b = parse_check_input(R"({"dim": 3, "gram": [[2, -1], [-1, 2]]})");
  REQUIRE(b.gram);
  CHECK(b.gram->product(0, 1) == -1);
  const CheckInput c = parse_check_input(R"({"dim": 3, "gram": {"norms": [2, 2], "products": [[2, -2], [-2, 2]]}})");
  REQUIRE(c.gram);
  CHECK(c.gram->c(0, 1) == 1);
}
