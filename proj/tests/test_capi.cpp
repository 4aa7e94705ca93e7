#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstring>
#include <string>

#include "involute.h"

namespace {

const char* kEinsteinSpec = R"({
  "n": 4, "order": 2, "truncation": 5, "seed": 42, "format": "json",
  "generator": {"name": "einstein_vacuum", "metric": "minkowski"}
})";

std::string render_via_capi(const char* spec_text, const char* format) {
  involute_spec* spec = nullptr;
  REQUIRE(involute_spec_parse(spec_text, &spec) == 0);
  involute_report* report = nullptr;
  REQUIRE(involute_analyze(spec, &report) == 0);
  involute_spec_free(spec);
  char* rendered = nullptr;
  REQUIRE(involute_report_render(report, format, &rendered) == 0);
  involute_report_free(report);
  std::string out = rendered;
  involute_string_free(rendered);
  return out;
}

}  // namespace

TEST_CASE("full pipeline through the C surface") {
  const std::string text = render_via_capi(kEinsteinSpec, "json");
  const nlohmann::json doc = nlohmann::json::parse(text);
  CHECK(doc["schema"] == "involute/1");
  CHECK(doc["dim_g"] == nlohmann::json({10, 40, 90, 164, 266, 400}));
  CHECK(doc["h"] == nlohmann::json({10, 10, 4, 0, 0}));
  CHECK(doc["characters"] == nlohmann::json({40, 30, 16, 4}));
  CHECK(doc["involutive"] == true);

  const std::string plain = render_via_capi(kEinsteinSpec, "text");
  CHECK(plain.find("Cartan test: 40 + 2·30 + 3·16 + 4·4 = 164 = dim g_3") !=
        std::string::npos);
}

TEST_CASE("renders are deterministic across calls") {
  CHECK(render_via_capi(kEinsteinSpec, "json") ==
        render_via_capi(kEinsteinSpec, "json"));
}

TEST_CASE("declared format is surfaced") {
  involute_spec* spec = nullptr;
  REQUIRE(involute_spec_parse(kEinsteinSpec, &spec) == 0);
  char* format = nullptr;
  REQUIRE(involute_spec_format(spec, &format) == 0);
  CHECK(std::string(format) == "json");
  involute_string_free(format);
  involute_spec_free(spec);
}

TEST_CASE("input errors return 1 with a message") {
  involute_spec* spec = nullptr;
  CHECK(involute_spec_parse("{invalid", &spec) == 1);
  CHECK(spec == nullptr);
  CHECK(std::strlen(involute_last_error()) > 0);

  CHECK(involute_spec_parse(R"({"n": 4})", &spec) == 1);

  // unknown generator names surface when the pipeline runs
  REQUIRE(involute_spec_parse(
              R"({"n": 4, "order": 2, "generator": {"name": "nope"}})",
              &spec) == 0);
  involute_report* report = nullptr;
  CHECK(involute_analyze(spec, &report) == 1);
  CHECK(report == nullptr);
  CHECK(std::string(involute_last_error()).find("nope") != std::string::npos);
  involute_spec_free(spec);
}

TEST_CASE("bad render format is an input error") {
  involute_spec* spec = nullptr;
  REQUIRE(involute_spec_parse(
              R"({"n": 4, "order": 2, "truncation": 5,
                  "generator": {"name": "scalar_wave"}})",
              &spec) == 0);
  involute_report* report = nullptr;
  REQUIRE(involute_analyze(spec, &report) == 0);
  involute_spec_free(spec);
  char* rendered = nullptr;
  CHECK(involute_report_render(report, "yaml", &rendered) == 1);
  CHECK(rendered == nullptr);
  // "characters" is accepted as a render-only format
  REQUIRE(involute_report_render(report, "characters", &rendered) == 0);
  CHECK(std::string(rendered).find("s = (") != std::string::npos);
  involute_string_free(rendered);
  involute_report_free(report);
}

TEST_CASE("builtin system listing") {
  char* names = nullptr;
  REQUIRE(involute_builtin_systems(&names) == 0);
  const std::string text = names;
  involute_string_free(names);
  CHECK(text ==
        "einstein_maxwell\neinstein_scalar\neinstein_vacuum\n"
        "maxwell_source_free\nscalar_wave\n");
}
