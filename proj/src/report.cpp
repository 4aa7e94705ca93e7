#include "involute/report.hpp"

#include <json.hpp>

#include <set>
#include <sstream>

#include "involute/conversions.hpp"
#include "involute/errors.hpp"
#include "involute/field_equations.hpp"
#include "involute/linalg.hpp"

namespace involute {

namespace {

using nlohmann::json;

Rational rational_from_json(const json& v, const std::string& where) {
  if (v.is_number_integer())
    return Rational(static_cast<long>(v.get<long long>()));
  if (v.is_string()) return parse_rational(v.get<std::string>());
  throw ParseError(where + ": rationals must be integers or \"num/den\" strings");
}

RationalMatrix matrix_from_json(const json& v, const std::string& where) {
  if (!v.is_array() || v.empty() || !v[0].is_array())
    throw ParseError(where + ": expected an array of rows");
  const std::size_t cols = v[0].size();
  RationalMatrix m(v.size(), cols);
  for (std::size_t r = 0; r < v.size(); ++r) {
    if (!v[r].is_array() || v[r].size() != cols)
      throw ParseError(where + ": ragged rows");
    for (std::size_t c = 0; c < cols; ++c)
      m(r, c) = rational_from_json(v[r][c], where);
  }
  return m;
}

void reject_unknown(const json& obj, const std::set<std::string>& allowed,
                    const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    (void)value;
    if (!allowed.count(key))
      throw ParseError(where + ": unknown field '" + key + "'");
  }
}

Metric metric_for(const SystemSpec& spec) {
  const auto& gen = *spec.generator;
  if (gen.metric) {
    if (gen.metric->rows() != spec.n)
      throw ShapeError("metric size does not match n");
    return make_metric(*gen.metric);
  }
  if (gen.metric_name == "minkowski") return minkowski_metric(spec.n);
  if (gen.metric_name == "euclidean") return euclidean_metric(spec.n);
  throw UnknownGenerator("unknown metric '" + gen.metric_name + "'");
}

void require_order(const SystemSpec& spec, unsigned k, const std::string& name) {
  if (spec.order != k)
    throw ShapeError("generator '" + name + "' has order " +
                     std::to_string(k));
}

}  // namespace

SystemSpec parse_spec(const std::string& bytes) {
  json doc;
  try {
    doc = json::parse(bytes);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("spec must be a JSON object");
  reject_unknown(doc,
                 {"n", "order", "truncation", "seed", "format", "generator",
                  "explicit"},
                 "spec");
  SystemSpec spec;
  if (!doc.contains("n") || !doc.contains("order"))
    throw ParseError("spec: 'n' and 'order' are required");
  spec.n = doc["n"].get<unsigned>();
  spec.order = doc["order"].get<unsigned>();
  if (spec.n == 0 || spec.order == 0)
    throw ParseError("spec: n and order must be positive");
  if (doc.contains("truncation"))
    spec.truncation = doc["truncation"].get<unsigned>();
  if (doc.contains("seed")) spec.seed = doc["seed"].get<std::uint64_t>();
  if (doc.contains("format")) {
    spec.format = doc["format"].get<std::string>();
    if (spec.format != "text" && spec.format != "json")
      throw ParseError("spec: format must be 'text' or 'json'");
  }
  if (doc.contains("generator") == doc.contains("explicit"))
    throw ParseError("spec: exactly one of 'generator'/'explicit' required");

  if (doc.contains("generator")) {
    const json& g = doc["generator"];
    if (!g.is_object()) throw ParseError("generator must be an object");
    reject_unknown(g, {"name", "metric", "stress", "lambda"}, "generator");
    SystemSpec::Generator gen;
    if (!g.contains("name")) throw ParseError("generator: 'name' required");
    gen.name = g["name"].get<std::string>();
    if (g.contains("metric")) {
      if (g["metric"].is_string())
        gen.metric_name = g["metric"].get<std::string>();
      else
        gen.metric = matrix_from_json(g["metric"], "generator.metric");
    }
    if (g.contains("stress"))
      gen.stress = matrix_from_json(g["stress"], "generator.stress");
    if (g.contains("lambda"))
      gen.lambda = rational_from_json(g["lambda"], "generator.lambda");
    spec.generator = std::move(gen);
  } else {
    const json& e = doc["explicit"];
    if (!e.is_object()) throw ParseError("explicit must be an object");
    reject_unknown(e, {"source_fiber_dim", "target_fiber_dim", "matrix"},
                   "explicit");
    SystemSpec::Explicit ex;
    if (!e.contains("source_fiber_dim") || !e.contains("target_fiber_dim") ||
        !e.contains("matrix"))
      throw ParseError("explicit: fiber dims and matrix required");
    ex.source_fiber_dim = e["source_fiber_dim"].get<unsigned>();
    ex.target_fiber_dim = e["target_fiber_dim"].get<unsigned>();
    ex.matrix = matrix_from_json(e["matrix"], "explicit.matrix");
    const std::size_t want_cols =
        SymBasis(spec.n, spec.order).size() * ex.source_fiber_dim;
    if (ex.matrix.cols() != want_cols || ex.matrix.rows() != ex.target_fiber_dim)
      throw ShapeError("explicit matrix shape does not match (n, k, fibers)");
    spec.explicit_symbol = std::move(ex);
  }
  return spec;
}

std::vector<std::string> builtin_system_names() {
  return {"einstein_maxwell", "einstein_scalar", "einstein_vacuum",
          "maxwell_source_free", "scalar_wave"};
}

SymbolMap symbol_for_spec(const SystemSpec& spec) {
  if (spec.explicit_symbol) {
    const auto& ex = *spec.explicit_symbol;
    return make_symbol_map(spec.n, spec.order, ex.source_fiber_dim,
                           ex.target_fiber_dim, ex.matrix);
  }
  const auto& gen = *spec.generator;
  const Metric metric = metric_for(spec);
  if (gen.name == "einstein_vacuum") {
    require_order(spec, 2, gen.name);
    return ricci_symbol(metric);
  }
  if (gen.name == "maxwell_source_free") {
    require_order(spec, 2, gen.name);
    return maxwell_symbol(metric);
  }
  if (gen.name == "einstein_maxwell") {
    require_order(spec, 2, gen.name);
    return einstein_maxwell_symbol(metric);
  }
  if (gen.name == "scalar_wave") {
    require_order(spec, 2, gen.name);
    return wave_symbol(metric);
  }
  if (gen.name == "einstein_scalar") {
    require_order(spec, 2, gen.name);
    const SymbolMap grav = ricci_symbol(metric);
    const SymbolMap matter = wave_symbol(metric);
    RationalMatrix zero(1, SymBasis(spec.n, 2).size() * grav.source_fiber_dim);
    const SymbolMap coupling = make_symbol_map(
        spec.n, 2, grav.source_fiber_dim, 1, std::move(zero));
    return block_triangular_symbol(grav, coupling, matter);
  }
  throw UnknownGenerator("unknown generator '" + gen.name + "'");
}

namespace {

void run_cross_checks(const SymbolMap& s, const SymbolicSystem& sys,
                      const CohomologyTable& table,
                      const AnalysisReport& report,
                      std::vector<CheckResult>& checks) {
  const unsigned k = sys.order(), n = sys.n(), m = sys.fiber_dim();
  const unsigned T = sys.truncation;

  // g_{k+1} and g_{k+2} through the annihilator-constraint route.
  for (unsigned t = k + 1; t <= std::min(T, k + 2); ++t) {
    if (prolong_by_intersection(sys, t).dim != sys.dim_g(t))
      throw ConsistencyError("cross-check: intersection prolongation at t=" +
                             std::to_string(t));
  }
  checks.push_back({"intersection_prolongation", true});

  // Integer fraction-free elimination against the rational route, both
  // column orders.
  for (unsigned l = 0; l <= 1; ++l) {
    const SymbolMap p = prolong(s, l);
    const std::size_t rank =
        SymBasis(n, k + l).size() * m - sys.dim_g(k + l);
    if (rank_fraction_free(p.matrix, false) != rank ||
        rank_fraction_free(p.matrix, true) != rank)
      throw ConsistencyError("cross-check: fraction-free rank at l=" +
                             std::to_string(l));
  }
  checks.push_back({"fraction_free_rank", true});

  // Restricted Spencer chains compose to zero (well-definedness gate).
  for (unsigned t = k + 1; t <= std::min(T, k + 3); ++t) {
    const SpencerComplexSlice slice = spencer_slice(sys, t);
    for (std::size_t i = 0; i + 1 < slice.maps.size(); ++i)
      if (!(slice.maps[i + 1] * slice.maps[i]).is_zero())
        throw ConsistencyError("cross-check: Spencer chain at t=" +
                               std::to_string(t));
  }
  checks.push_back({"spencer_chain_complex", true});

  for (unsigned t = 0; t <= T; ++t)
    if (table.euler_characteristic_direct(t) !=
        table.euler_characteristic_table(t))
      throw ConsistencyError("cross-check: Euler characteristic at t=" +
                             std::to_string(t));
  checks.push_back({"euler_characteristic", true});

  // Prop 1 / Prop 2 roundtrip on the computed data.
  const std::vector<std::size_t> schars =
      chars_from_cohomology(report.h, n, k);
  if (cohomology_from_chars(schars, n, k) != report.h)
    throw ConsistencyError("cross-check: character/cohomology roundtrip");
  checks.push_back({"character_roundtrip", true});

  // Flag characters against the closed-form conversion when involutive.
  if (report.involutive) {
    std::vector<std::size_t> via_flag(n + 1);
    via_flag[0] = report.h[0];
    for (unsigned i = 0; i < n; ++i)
      via_flag[i + 1] = report.cartan.characters[i];
    if (via_flag != schars)
      throw ConsistencyError("cross-check: flag characters vs conversion");
  }
  checks.push_back({"characters_vs_conversion", true});

  // A second accepted flag must reproduce the characters.
  const CartanData again = cartan_characters(sys, report.seed + 1);
  if (again.characters != report.cartan.characters)
    throw ConsistencyError("cross-check: flag independence");
  checks.push_back({"flag_independence", true});
}

}  // namespace

AnalysisReport analyze(const SystemSpec& spec) {
  const SymbolMap s = symbol_for_spec(spec);
  const unsigned T = spec.effective_truncation();
  SymbolicSystem sys = build_system(s, T);
  if (spec.generator) {
    sys.name = spec.generator->name;
    sys.obstruction_note = "order-k obstruction vanishing asserted by source";
  } else {
    sys.name = "explicit";
  }

  AnalysisReport report;
  report.system_name = sys.name;
  report.n = sys.n();
  report.k = sys.order();
  report.T = T;
  report.seed = spec.seed;
  for (unsigned t = 0; t <= T; ++t) report.g_dims.push_back(sys.dim_g(t));
  report.table = cohomology_table(sys, T);
  report.h = report.table.h_vector();
  const InvolutivityVerdict verdict =
      is_involutive_symbolic(sys, report.table, spec.seed);
  report.cartan = verdict.cartan;
  report.involutive = verdict.involutive;
  report.obstruction_note = report.involutive ? sys.obstruction_note : "";
  report.hilbert = hilbert_analysis(report.table);
  run_cross_checks(s, sys, report.table, report, report.checks);
  return report;
}

namespace {

std::string join_sizes(const std::vector<std::size_t>& v,
                       const char* sep = ", ") {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
  return os.str();
}

std::string cartan_test_line(const AnalysisReport& r) {
  std::ostringstream os;
  os << "Cartan test: ";
  std::size_t weighted = 0;
  for (std::size_t i = 0; i < r.cartan.characters.size(); ++i) {
    if (i) os << " + " << i + 1 << "·";
    os << r.cartan.characters[i];
    weighted += (i + 1) * r.cartan.characters[i];
  }
  os << " = " << weighted;
  const std::size_t target = r.g_dims[r.k + 1];
  if (weighted == target)
    os << " = dim g_" << r.k + 1;
  else
    os << " ≠ dim g_" << r.k + 1 << " = " << target;
  return os.str();
}

std::string render_text(const AnalysisReport& r) {
  std::ostringstream os;
  os << "system: " << r.system_name << "\n";
  os << "n: " << r.n << "  order: " << r.k << "  truncation: " << r.T
     << "  seed: " << r.seed << "\n";
  os << "dim g_t, t = 0.." << r.T << ": " << join_sizes(r.g_dims) << "\n";
  os << "nonzero cohomology:";
  bool any = false;
  for (const auto& [ij, d] : r.table.dims) {
    if (d == 0) continue;
    os << " H^{" << ij.first << "," << ij.second << "}=" << d;
    any = true;
  }
  if (!any) os << " none";
  os << "\n";
  os << "h = (" << join_sizes(r.h) << ")\n";
  os << "Cartan characters: s = (" << join_sizes(r.cartan.characters) << ")\n";
  os << "derived characters: s' = (" << join_sizes(r.cartan.derived_characters)
     << ")\n";
  os << cartan_test_line(r) << "\n";
  os << "involutive: " << (r.involutive ? "yes" : "no") << "\n";
  if (!r.obstruction_note.empty())
    os << "obstruction: " << r.obstruction_note << "\n";
  os << "dim g_z polynomial: " << r.hilbert.dim_poly.str() << "\n";
  os << "binomial-basis coefficients: ("
     << join_sizes(r.hilbert.binomial_coeffs) << ")\n";
  os << "Hilbert polynomial (cumulative): " << r.hilbert.cumulative.str()
     << "\n";
  os << "checks:";
  for (const auto& c : r.checks)
    os << " " << c.name << "=" << (c.pass ? "pass" : "FAIL");
  os << "\n";
  return os.str();
}

json poly_json(const Polynomial& p) {
  json arr = json::array();
  for (const auto& c : p.coeffs()) arr.push_back(to_string(c));
  return arr;
}

std::string render_json(const AnalysisReport& r) {
  json doc;
  doc["schema"] = "involute/1";
  doc["system"] = r.system_name;
  doc["n"] = r.n;
  doc["order"] = r.k;
  doc["truncation"] = r.T;
  doc["seed"] = r.seed;
  doc["dim_g"] = r.g_dims;
  json coh = json::object();
  for (const auto& [ij, d] : r.table.dims) {
    if (d == 0) continue;
    coh[std::to_string(ij.first) + "," + std::to_string(ij.second)] = d;
  }
  doc["cohomology_nonzero"] = coh;
  doc["h"] = r.h;
  doc["characters"] = r.cartan.characters;
  doc["derived_characters"] = r.cartan.derived_characters;
  doc["cartan_test"] = r.cartan.cartan_pass;
  doc["involutive"] = r.involutive;
  doc["obstruction"] = r.obstruction_note;
  doc["hilbert"] = {
      {"dim_poly", poly_json(r.hilbert.dim_poly)},
      {"cumulative", poly_json(r.hilbert.cumulative)},
      {"binomial_coeffs", r.hilbert.binomial_coeffs},
  };
  json checks = json::object();
  for (const auto& c : r.checks) checks[c.name] = c.pass;
  doc["checks"] = checks;
  return doc.dump(2) + "\n";
}

}  // namespace

std::string render(const AnalysisReport& report, const std::string& format) {
  if (format == "text") return render_text(report);
  if (format == "json") return render_json(report);
  if (format == "characters") {
    std::ostringstream os;
    os << "Cartan characters: s = (" << join_sizes(report.cartan.characters)
       << ")\n";
    os << "derived characters: s' = ("
       << join_sizes(report.cartan.derived_characters) << ")\n";
    os << cartan_test_line(report) << "\n";
    return os.str();
  }
  throw ParseError("render: format must be 'text' or 'json'");
}

}  // namespace involute
