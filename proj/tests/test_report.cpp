#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "involute/errors.hpp"
#include "involute/report.hpp"

using namespace involute;

namespace {

const char* kEinsteinSpec = R"({
  "n": 4, "order": 2, "truncation": 5, "seed": 42,
  "generator": {"name": "einstein_vacuum", "metric": "minkowski"}
})";

}  // namespace

TEST_CASE("parse_spec accepts a full generator spec") {
  const SystemSpec spec = parse_spec(kEinsteinSpec);
  CHECK(spec.n == 4);
  CHECK(spec.order == 2);
  CHECK(spec.truncation == 5);
  CHECK(spec.effective_truncation() == 5);
  CHECK(spec.seed == 42);
  CHECK(spec.format == "text");
  REQUIRE(spec.generator.has_value());
  CHECK(spec.generator->name == "einstein_vacuum");
  CHECK(spec.generator->metric_name == "minkowski");
  CHECK(!spec.explicit_symbol.has_value());
}

TEST_CASE("parse_spec defaults and explicit symbols") {
  const SystemSpec spec = parse_spec(R"({
    "n": 2, "order": 1,
    "explicit": {
      "source_fiber_dim": 1, "target_fiber_dim": 1,
      "matrix": [[1, "1/2"]]
    }
  })");
  CHECK(spec.truncation == 0);
  CHECK(spec.effective_truncation() == 6);  // order + 5
  CHECK(spec.seed == 0);
  REQUIRE(spec.explicit_symbol.has_value());
  CHECK(spec.explicit_symbol->matrix(0, 1) == Rational(1, 2));
  const SymbolMap s = symbol_for_spec(spec);
  CHECK(s.order == 1);
  CHECK(s.matrix.cols() == 2);
}

TEST_CASE("parse_spec rejections") {
  CHECK_THROWS_AS(parse_spec("not json"), ParseError);
  CHECK_THROWS_AS(parse_spec("[1,2]"), ParseError);
  CHECK_THROWS_AS(parse_spec(R"({"order": 2})"), ParseError);  // missing n
  CHECK_THROWS_AS(parse_spec(R"({"n": 4, "order": 2})"), ParseError);
  CHECK_THROWS_AS(
      parse_spec(
          R"({"n": 4, "order": 2, "generator": {"name": "scalar_wave"}, "extra": 1})"),
      ParseError);
  CHECK_THROWS_AS(
      parse_spec(
          R"({"n": 4, "order": 2, "format": "xml", "generator": {"name": "scalar_wave"}})"),
      ParseError);
  // both generator and explicit
  CHECK_THROWS_AS(
      parse_spec(
          R"({"n": 2, "order": 1, "generator": {"name": "scalar_wave"},
              "explicit": {"source_fiber_dim": 1, "target_fiber_dim": 1,
                           "matrix": [[1, 2]]}})"),
      ParseError);
  // denominator zero inside a matrix entry
  CHECK_THROWS_AS(
      parse_spec(
          R"({"n": 2, "order": 1, "explicit": {"source_fiber_dim": 1,
              "target_fiber_dim": 1, "matrix": [["1/0", 2]]}})"),
      ParseError);
  // wrong column count for (n, k, fiber)
  CHECK_THROWS_AS(
      parse_spec(
          R"({"n": 2, "order": 1, "explicit": {"source_fiber_dim": 1,
              "target_fiber_dim": 1, "matrix": [[1, 2, 3]]}})"),
      ShapeError);
  // unknown generator surfaces at symbol construction
  const SystemSpec spec = parse_spec(
      R"({"n": 4, "order": 2, "generator": {"name": "nonsense"}})");
  CHECK_THROWS_AS(symbol_for_spec(spec), UnknownGenerator);
  // order mismatch for a builtin
  const SystemSpec wrong_order = parse_spec(
      R"({"n": 4, "order": 3, "generator": {"name": "einstein_vacuum"}})");
  CHECK_THROWS_AS(symbol_for_spec(wrong_order), ShapeError);
}

TEST_CASE("builtin names are sorted and resolvable") {
  const auto names = builtin_system_names();
  CHECK(names == std::vector<std::string>{"einstein_maxwell", "einstein_scalar",
                                          "einstein_vacuum",
                                          "maxwell_source_free", "scalar_wave"});
  for (const auto& name : names) {
    const SystemSpec spec = parse_spec(
        R"({"n": 4, "order": 2, "generator": {"name": ")" + name + "\"}}");
    CHECK_NOTHROW(symbol_for_spec(spec));
  }
}

TEST_CASE("explicit metric matrix") {
  const SystemSpec spec = parse_spec(R"({
    "n": 4, "order": 2, "truncation": 5,
    "generator": {"name": "einstein_vacuum",
                  "metric": [[-1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]]}
  })");
  const AnalysisReport r = analyze(spec);
  CHECK(r.g_dims == std::vector<std::size_t>{10, 40, 90, 164, 266, 400});
  // degenerate metric refused
  const SystemSpec bad = parse_spec(R"({
    "n": 2, "order": 2,
    "generator": {"name": "scalar_wave", "metric": [[1,0],[0,0]]}
  })");
  CHECK_THROWS(symbol_for_spec(bad));
}

TEST_CASE("analysis report values for the Einstein system") {
  const AnalysisReport r = analyze(parse_spec(kEinsteinSpec));
  CHECK(r.system_name == "einstein_vacuum");
  CHECK(r.g_dims == std::vector<std::size_t>{10, 40, 90, 164, 266, 400});
  CHECK(r.h == std::vector<std::size_t>{10, 10, 4, 0, 0});
  CHECK(r.cartan.characters == std::vector<std::size_t>{40, 30, 16, 4});
  CHECK(r.cartan.derived_characters == std::vector<std::size_t>{90, 50, 20, 4});
  CHECK(r.involutive);
  CHECK(!r.obstruction_note.empty());
  CHECK(r.hilbert.cumulative.str() ==
        "10 + 22 z + 89/6 z^2 + 3 z^3 + 1/6 z^4");
  CHECK(r.hilbert.dim_poly.str() == "10 + 64/3 z + 8 z^2 + 2/3 z^3");
  REQUIRE(r.checks.size() == 7);
  for (const auto& c : r.checks) CHECK(c.pass);
}

TEST_CASE("text rendering carries the exact Cartan test line") {
  const AnalysisReport r = analyze(parse_spec(kEinsteinSpec));
  const std::string text = render(r, "text");
  CHECK(text.find("Cartan test: 40 + 2·30 + 3·16 + 4·4 = 164 = dim g_3") !=
        std::string::npos);
  CHECK(text.find("h = (10, 10, 4, 0, 0)") != std::string::npos);
  CHECK(text.find("involutive: yes") != std::string::npos);
  CHECK(text.find("H^{1,1}=10") != std::string::npos);

  const std::string chars = render(r, "characters");
  CHECK(chars.find("s = (40, 30, 16, 4)") != std::string::npos);
  CHECK(chars.find("s' = (90, 50, 20, 4)") != std::string::npos);
  CHECK(chars.find("dim g_z polynomial") == std::string::npos);

  CHECK_THROWS_AS(render(r, "yaml"), ParseError);
}

TEST_CASE("json rendering is valid and complete") {
  const AnalysisReport r = analyze(parse_spec(kEinsteinSpec));
  const std::string text = render(r, "json");
  const nlohmann::json doc = nlohmann::json::parse(text);
  CHECK(doc["schema"] == "involute/1");
  CHECK(doc["system"] == "einstein_vacuum");
  CHECK(doc["n"] == 4);
  CHECK(doc["order"] == 2);
  CHECK(doc["seed"] == 42);
  CHECK(doc["dim_g"] == nlohmann::json({10, 40, 90, 164, 266, 400}));
  CHECK(doc["h"] == nlohmann::json({10, 10, 4, 0, 0}));
  CHECK(doc["characters"] == nlohmann::json({40, 30, 16, 4}));
  CHECK(doc["involutive"] == true);
  CHECK(doc["cartan_test"] == true);
  CHECK(doc["cohomology_nonzero"]["1,1"] == 10);
  CHECK(doc["cohomology_nonzero"]["1,2"] == 4);
  CHECK(doc["hilbert"]["cumulative"] ==
        nlohmann::json({"10", "22", "89/6", "3", "1/6"}));
  for (const auto& [name, pass] : doc["checks"].items()) {
    (void)name;
    CHECK(pass == true);
  }
}

TEST_CASE("rendering is byte-deterministic") {
  const SystemSpec spec = parse_spec(R"({
    "n": 4, "order": 2, "truncation": 5, "seed": 7,
    "generator": {"name": "maxwell_source_free"}
  })");
  const AnalysisReport a = analyze(spec);
  const AnalysisReport b = analyze(spec);
  CHECK(render(a, "text") == render(b, "text"));
  CHECK(render(a, "json") == render(b, "json"));
  CHECK(a.cartan.characters == std::vector<std::size_t>{16, 12, 7, 1});
}

TEST_CASE("explicit symbol analysis end to end") {
  // d'Alembert operator entered by hand: n=2, Tr_g Q with g = diag(-1, 1).
  // SymBasis(2,2) is lex-descending: x1^2, x1 x2, x2^2.
  const SystemSpec spec = parse_spec(R"({
    "n": 2, "order": 2, "truncation": 5, "seed": 3,
    "explicit": {"source_fiber_dim": 1, "target_fiber_dim": 1,
                 "matrix": [[-1, 0, 1]]}
  })");
  const AnalysisReport r = analyze(spec);
  CHECK(r.system_name == "explicit");
  for (unsigned t = 0; t <= 5; ++t) CHECK(r.g_dims[t] == (t == 0 ? 1 : 2));
  CHECK(r.involutive);
  CHECK(r.obstruction_note.empty());  // no source-level guarantee to cite
}
