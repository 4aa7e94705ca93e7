#ifndef INVOLUTE_REPORT_HPP
#define INVOLUTE_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "involute/cartan.hpp"
#include "involute/cohomology.hpp"
#include "involute/hilbert.hpp"
#include "involute/metric.hpp"
#include "involute/symbolic_system.hpp"

namespace involute {

// Validated description of one analysis run, parsed from JSON.
struct SystemSpec {
  unsigned n = 0;
  unsigned order = 0;
  unsigned truncation = 0;  // 0 means "use the default order + 5"
  std::uint64_t seed = 0;
  std::string format = "text";

  // Exactly one of the two is present.
  struct Generator {
    std::string name;
    std::string metric_name = "minkowski";     // ignored when matrix given
    std::optional<RationalMatrix> metric;      // explicit metric entries
    std::optional<RationalMatrix> stress;      // for background-field symbols
    std::optional<Rational> lambda;
  };
  std::optional<Generator> generator;

  struct Explicit {
    unsigned source_fiber_dim = 0;
    unsigned target_fiber_dim = 0;
    RationalMatrix matrix;
  };
  std::optional<Explicit> explicit_symbol;

  unsigned effective_truncation() const {
    return truncation ? truncation : order + 5;
  }
};

SystemSpec parse_spec(const std::string& bytes);

// Names accepted by SystemSpec::Generator::name.
std::vector<std::string> builtin_system_names();

// Symbol construction for a validated spec (UnknownGenerator on bad names).
SymbolMap symbol_for_spec(const SystemSpec& spec);

struct CheckResult {
  std::string name;
  bool pass = false;
};

struct AnalysisReport {
  std::string system_name;
  unsigned n = 0, k = 0, T = 0;
  std::uint64_t seed = 0;
  std::vector<std::size_t> g_dims;
  CohomologyTable table;
  std::vector<std::size_t> h;  // (h_0, ..., h_n)
  CartanData cartan;
  bool involutive = false;
  std::string obstruction_note;
  HilbertData hilbert;
  std::vector<CheckResult> checks;
};

// Full pipeline: build, cohomology, characters, Hilbert data, cross-checks.
// Throws ConsistencyError and friends instead of reporting bad numbers.
AnalysisReport analyze(const SystemSpec& spec);

// format "text" or "json"; both byte-deterministic for a fixed spec + seed.
std::string render(const AnalysisReport& report, const std::string& format);

}  // namespace involute

#endif
