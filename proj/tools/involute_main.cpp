// Command-line front end over the shared-library C API.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "involute.h"

namespace {

using nlohmann::json;

constexpr int kExitUsage = 1;
constexpr int kExitConsistency = 2;

struct Options {
  std::string spec_path;
  std::string system;
  std::string metric = "minkowski";
  std::optional<unsigned> truncation;
  std::optional<std::uint64_t> seed;
  std::string format;
  std::string out_path;
};

int fail(int code, const std::string& message) {
  std::cerr << "involute: " << message << "\n";
  return code;
}

std::string read_input(const std::string& path, bool& ok) {
  ok = true;
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin),
                       std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    ok = false;
    return {};
  }
  return std::string(std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>());
}

// Assembles the spec JSON from either --spec or --system plus flag overrides.
int build_spec_text(const Options& opt, std::string& out_text) {
  json doc;
  if (!opt.spec_path.empty()) {
    bool ok = false;
    const std::string bytes = read_input(opt.spec_path, ok);
    if (!ok) return fail(kExitUsage, "cannot read " + opt.spec_path);
    try {
      doc = json::parse(bytes);
    } catch (const json::exception& e) {
      return fail(kExitUsage, std::string("invalid spec JSON: ") + e.what());
    }
    if (!doc.is_object()) return fail(kExitUsage, "spec must be a JSON object");
  } else if (!opt.system.empty()) {
    doc = json::object();
    doc["n"] = 4;
    doc["order"] = 2;
    doc["generator"] = {{"name", opt.system}};
  } else {
    return fail(kExitUsage, "one of --spec or --system is required");
  }

  if (!opt.system.empty() && !opt.spec_path.empty())
    return fail(kExitUsage, "--spec and --system are mutually exclusive");

  if (doc.contains("generator") && !opt.metric.empty()) {
    if (opt.metric == "minkowski" || opt.metric == "euclidean") {
      doc["generator"]["metric"] = opt.metric;
    } else {
      bool ok = false;
      const std::string bytes = read_input(opt.metric, ok);
      if (!ok) return fail(kExitUsage, "cannot read metric " + opt.metric);
      try {
        doc["generator"]["metric"] = json::parse(bytes);
      } catch (const json::exception& e) {
        return fail(kExitUsage, std::string("invalid metric JSON: ") + e.what());
      }
    }
  }
  if (opt.truncation) doc["truncation"] = *opt.truncation;
  if (opt.seed) {
    doc["seed"] = *opt.seed;
  } else if (!doc.contains("seed")) {
    if (const char* env = std::getenv("INVOLUTE_SEED")) {
      try {
        doc["seed"] = std::stoull(env);
      } catch (const std::exception&) {
        return fail(kExitUsage, "INVOLUTE_SEED must be an integer");
      }
    }
  }
  if (!opt.format.empty()) doc["format"] = opt.format;
  out_text = doc.dump();
  return 0;
}

int emit(const Options& opt, const std::string& text) {
  if (opt.out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(opt.out_path, std::ios::binary);
  if (!out) return fail(kExitUsage, "cannot write " + opt.out_path);
  out << text;
  return 0;
}

int run_pipeline(const Options& opt, const std::string& render_format,
                 bool render_only_characters) {
  std::string spec_text;
  if (int rc = build_spec_text(opt, spec_text); rc != 0) return rc;

  involute_spec* spec = nullptr;
  if (int rc = involute_spec_parse(spec_text.c_str(), &spec); rc != 0)
    return fail(rc, involute_last_error());

  char* declared = nullptr;
  involute_spec_format(spec, &declared);
  std::string format = render_format.empty() ? declared : render_format;
  involute_string_free(declared);
  if (render_only_characters) format = "characters";

  involute_report* report = nullptr;
  int rc = involute_analyze(spec, &report);
  involute_spec_free(spec);
  if (rc != 0) return fail(rc, involute_last_error());

  char* rendered = nullptr;
  rc = involute_report_render(report, format.c_str(), &rendered);
  involute_report_free(report);
  if (rc != 0) return fail(rc, involute_last_error());
  const std::string text = rendered;
  involute_string_free(rendered);
  return emit(opt, text);
}

int run_check(const Options& opt) {
  std::string spec_text;
  if (int rc = build_spec_text(opt, spec_text); rc != 0) return rc;
  involute_spec* spec = nullptr;
  if (int rc = involute_spec_parse(spec_text.c_str(), &spec); rc != 0)
    return fail(rc, involute_last_error());
  involute_spec_free(spec);
  return emit(opt, "ok\n");
}

int run_list(const Options& opt) {
  char* names = nullptr;
  if (int rc = involute_builtin_systems(&names); rc != 0)
    return fail(rc, involute_last_error());
  const std::string text = names;
  involute_string_free(names);
  return emit(opt, text);
}

void add_common_flags(CLI::App* cmd, Options& opt, bool with_format) {
  cmd->add_option("--spec", opt.spec_path, "spec JSON file ('-' for stdin)");
  cmd->add_option("--system", opt.system, "built-in generator name");
  cmd->add_option("--metric", opt.metric,
                  "minkowski, euclidean, or a JSON matrix file");
  cmd->add_option("--truncation", opt.truncation, "working truncation order");
  cmd->add_option("--seed", opt.seed, "flag sampling seed");
  if (with_format)
    cmd->add_option("--format", opt.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--out", opt.out_path, "write output to a file");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact symbolic analysis of linear PDE systems"};
  app.require_subcommand(1);

  Options opt;
  CLI::App* analyze = app.add_subcommand("analyze", "run the full pipeline");
  add_common_flags(analyze, opt, true);
  CLI::App* characters =
      app.add_subcommand("characters", "report Cartan characters only");
  add_common_flags(characters, opt, false);
  CLI::App* check = app.add_subcommand("check", "validate a spec");
  add_common_flags(check, opt, false);
  CLI::App* list = app.add_subcommand("list", "list built-in generators");
  list->add_option("--out", opt.out_path, "write output to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  if (analyze->parsed()) return run_pipeline(opt, opt.format, false);
  if (characters->parsed()) return run_pipeline(opt, "", true);
  if (check->parsed()) return run_check(opt);
  if (list->parsed()) return run_list(opt);
  return kExitUsage;
}
