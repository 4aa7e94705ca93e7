#include "involute.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "involute/errors.hpp"
#include "involute/report.hpp"

struct involute_spec {
  involute::SystemSpec spec;
};

struct involute_report {
  involute::AnalysisReport report;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// 1 for bad input, 2 for consistency/internal failures.
template <typename Fn>
int guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return 0;
  } catch (const involute::ParseError& e) {
    g_last_error = e.what();
    return 1;
  } catch (const involute::ShapeError& e) {
    g_last_error = e.what();
    return 1;
  } catch (const involute::UnknownGenerator& e) {
    g_last_error = e.what();
    return 1;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return 2;
  }
}

}  // namespace

extern "C" {

int involute_spec_parse(const char* bytes, involute_spec** out) {
  if (!bytes || !out) {
    g_last_error = "null argument";
    return 1;
  }
  *out = nullptr;
  return guarded([&] {
    auto* spec = new involute_spec{involute::parse_spec(bytes)};
    *out = spec;
  });
}

void involute_spec_free(involute_spec* spec) { delete spec; }

int involute_analyze(const involute_spec* spec, involute_report** out) {
  if (!spec || !out) {
    g_last_error = "null argument";
    return 1;
  }
  *out = nullptr;
  return guarded([&] {
    auto* report = new involute_report{involute::analyze(spec->spec)};
    *out = report;
  });
}

void involute_report_free(involute_report* report) { delete report; }

int involute_report_render(const involute_report* report, const char* format,
                           char** out) {
  if (!report || !format || !out) {
    g_last_error = "null argument";
    return 1;
  }
  *out = nullptr;
  return guarded(
      [&] { *out = dup_string(involute::render(report->report, format)); });
}

int involute_spec_format(const involute_spec* spec, char** out) {
  if (!spec || !out) {
    g_last_error = "null argument";
    return 1;
  }
  *out = dup_string(spec->spec.format);
  return 0;
}

int involute_builtin_systems(char** out) {
  if (!out) {
    g_last_error = "null argument";
    return 1;
  }
  std::string joined;
  for (const auto& name : involute::builtin_system_names()) {
    joined += name;
    joined += '\n';
  }
  *out = dup_string(joined);
  return 0;
}

void involute_string_free(char* s) { std::free(s); }

const char* involute_last_error(void) { return g_last_error.c_str(); }

}  // extern "C"
