#include "rigid/cli.hpp"

#include "rigid/bounds.hpp"
#include "rigid/error.hpp"
#include "rigid/io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace rigid::cli {

using nlohmann::json;

void AnalysisRequest::validate() const {
  if (family.has_value() == graph_path.has_value()) {
    throw InvalidInput("exactly one input source is required: a family spec or --graph");
  }
  if (d && *d < 1) {
    throw InvalidInput("--d must be >= 1");
  }
}

json analyze(const AnalysisRequest& request) {
  request.validate();
  const Graph g = request.family ? generate(*request.family) : io::load_graph(*request.graph_path);
  if (g.order() < 2) {
    throw InvalidInput("analyze: need at least 2 vertices");
  }
  if (!is_connected(g)) {
    throw PreconditionFailure("analyze: graph is disconnected");
  }

  json report;
  report["input"] = request.family ? request.family->to_string() : request.graph_path->string();
  report["n"] = g.order();
  report["edges"] = g.size();
  report["connected"] = true;
  report["kappa"] = vertex_connectivity(g);
  report["diameter"] = diameter(g);
  const double a1 = algebraic_connectivity(g);
  report["a1"] = a1;
  report["laplacian_spectrum"] = io::to_json(spectrum(laplacian(g)));
  report["diameter_vc_bound"] = diameter_vc_bound(g);

  if (!request.d) {
    return report;
  }
  const int d = *request.d;
  const auto& cfg = request.optimizer;
  const bool rigid = is_generically_rigid(g, d, 3, cfg.seed);
  const GacEstimate est =
      request.family ? estimate_gac(*request.family, d, cfg) : estimate_gac(g, d, cfg);
  const double ratio = est.value / a1;

  report["d"] = d;
  report["generically_rigid"] = rigid;
  report["gac"] = io::to_json(est);
  report["ratio"] = ratio;
  if (request.family) {
    if (const auto known = known_gac(*request.family, d)) {
      json k;
      k["source"] = known->source;
      k["exact"] = known->exact();
      if (known->lower) k["lower"] = *known->lower;
      if (known->upper) k["upper"] = *known->upper;
      report["known_gac"] = k;
    }
  }

  json bounds = json::array();
  bounds.push_back(io::to_json(check_upper_bound(
      "ratio_bound", ratio, 1.0, {{"n", g.order()}, {"d", d}, {"a1", a1}})));
  bounds.push_back(io::to_json(diameter_bound_check(g, est.value, d)));
  bounds.push_back(io::to_json(rigid_diameter_check(g, d, rigid)));
  if (g.order() >= d + 1) {
    bounds.push_back(io::to_json(rigidity_necessity_check(g, d, 3, cfg.seed)));
  }
  report["bounds"] = std::move(bounds);
  bool all = true;
  for (const auto& b : report["bounds"]) all = all && b["satisfied"].get<bool>();
  report["all_bounds_satisfied"] = all;
  return report;
}

IntRange IntRange::parse(const std::string& text) {
  const auto dots = text.find("..");
  IntRange r;
  try {
    if (dots == std::string::npos) {
      r.first = r.last = std::stoi(text);
      return r;
    }
    r.first = std::stoi(text.substr(0, dots));
    const std::string rest = text.substr(dots + 2);
    const auto colon = rest.find(':');
    r.last = std::stoi(rest.substr(0, colon));
    if (colon != std::string::npos) r.step = std::stoi(rest.substr(colon + 1));
  } catch (const std::logic_error&) {
    throw InvalidInput("range '" + text + "': expected a..b or a..b:step");
  }
  if (r.step < 1) {
    throw InvalidInput("range '" + text + "': step must be positive");
  }
  return r;
}

std::vector<int> IntRange::values() const {
  std::vector<int> out;
  for (int v = first; v <= last; v += step) out.push_back(v);
  return out;
}

std::string Table::to_csv() const {
  std::ostringstream out;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t k = 0; k < cells.size(); ++k) out << (k ? "," : "") << cells[k];
    out << '\n';
  };
  line(header);
  for (const auto& row : rows) line(row);
  return out.str();
}

json Table::to_json() const {
  json out = json::array();
  for (const auto& row : rows) {
    json obj;
    for (std::size_t k = 0; k < header.size() && k < row.size(); ++k) {
      obj[header[k]] = json::parse(row[k], nullptr, false).is_discarded()
                           ? json(row[k])
                           : json::parse(row[k]);
    }
    out.push_back(std::move(obj));
  }
  return out;
}

namespace {

void add_optimizer_flags(CLI::App* cmd, OptimizerConfig& cfg) {
  cmd->add_option("--restarts", cfg.restarts, "Optimizer restarts")->capture_default_str();
  cmd->add_option("--iterations", cfg.iterations, "Sweeps per restart")->capture_default_str();
  cmd->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
  cmd->add_option("--step-init", cfg.step_init, "Initial perturbation size")
      ->capture_default_str();
  cmd->add_option("--step-decay", cfg.step_decay, "Per-sweep step multiplier")
      ->capture_default_str();
  cmd->add_option("--injectivity-floor", cfg.injectivity_floor,
                  "Minimum pairwise distance after normalization")
      ->capture_default_str();
}

void emit(const std::string& text, const std::optional<std::filesystem::path>& path,
          std::ostream& out) {
  if (!path) {
    out << text;
    return;
  }
  std::ofstream file(*path);
  if (!file) {
    throw InvalidInput("cannot write " + path->string());
  }
  file << text;
}

// key,value rows for scalar leaves; arrays are written as JSON text.
void flatten(const json& j, const std::string& prefix, Table& table) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), table);
    }
    return;
  }
  std::string cell = j.is_string() ? j.get<std::string>() : j.dump();
  if (j.is_array() || cell.find(',') != std::string::npos) {
    std::string quoted = "\"";
    for (char c : cell) quoted += (c == '"') ? std::string("\"\"") : std::string(1, c);
    cell = quoted + "\"";
  }
  table.rows.push_back({prefix, cell});
}

std::optional<FamilyKind> parse_kind(const std::string& name) {
  if (name.empty()) return std::nullopt;
  if (name == "complete") return FamilyKind::complete;
  if (name == "path") return FamilyKind::path;
  if (name == "cycle") return FamilyKind::cycle;
  if (name == "star") return FamilyKind::star;
  if (name == "turan") return FamilyKind::turan;
  throw InvalidInput("unknown family kind '" + name + "'");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantitative graph rigidity analysis"};
  app.require_subcommand(1);

  AnalysisRequest analysis;
  std::string source;
  std::string family_text;
  std::string graph_text;
  int analysis_d = 0;
  std::string format = "json";
  std::string out_path;

  auto* analyze_cmd = app.add_subcommand("analyze", "Invariants, spectra, GAC estimate and bounds");
  analyze_cmd->add_option("source", source, "Family spec, e.g. star:6,2");
  analyze_cmd->add_option("--family", family_text, "Family spec (complete:n, path:n,d, ...)");
  analyze_cmd->add_option("--graph", graph_text, "Graph file (JSON or edge list)");
  analyze_cmd->add_option("--d", analysis_d, "Ambient dimension (enables rigidity analysis)");
  analyze_cmd->add_option("--format", format, "json | csv")->capture_default_str();
  analyze_cmd->add_option("--out", out_path, "Output file (default: stdout)");
  add_optimizer_flags(analyze_cmd, analysis.optimizer);

  SweepRequest sweep_req;
  std::string sweep_family;
  std::string range_text;
  auto* sweep_cmd = app.add_subcommand("sweep", "Tabulate a metric over a range of n");
  sweep_cmd->add_option("kind", sweep_req.kind,
                        "asymptotic-ratio | ratio | path-cycle | path-diameter")
      ->required();
  sweep_cmd->add_option("--family", sweep_family, "Family kind for 'ratio'");
  sweep_cmd->add_option("--d", sweep_req.d, "Dimension / family parameter")->capture_default_str();
  sweep_cmd->add_option("--n", range_text, "Range a..b or a..b:step")->required();
  sweep_cmd->add_option("--format", format, "csv | json");
  sweep_cmd->add_option("--out", out_path, "Output file (default: stdout)");
  add_optimizer_flags(sweep_cmd, sweep_req.optimizer);

  std::string suite = "all";
  OptimizerConfig verify_cfg;
  auto* verify_cmd = app.add_subcommand("verify", "Run invariant checks; exit 1 on failure");
  verify_cmd->add_option("--suite", suite, "spectra | bounds | rigidity | all")
      ->capture_default_str();
  verify_cmd->add_option("--graph", graph_text, "Also check bounds on this graph file");
  add_optimizer_flags(verify_cmd, verify_cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInvalidInput;
  }

  try {
    std::optional<std::filesystem::path> out_file;
    if (!out_path.empty()) out_file = out_path;

    if (analyze_cmd->parsed()) {
      if (!source.empty() && !family_text.empty()) {
        throw InvalidInput("give the family either positionally or via --family, not both");
      }
      if (!source.empty()) family_text = source;
      if (!family_text.empty()) analysis.family = FamilySpec::parse(family_text);
      if (!graph_text.empty()) analysis.graph_path = graph_text;
      if (analyze_cmd->count("--d") > 0) analysis.d = analysis_d;
      if (format != "json" && format != "csv") throw InvalidInput("--format must be json or csv");
      analysis.format = format == "csv" ? OutputFormat::csv : OutputFormat::json;
      const json report = analyze(analysis);
      if (analysis.format == OutputFormat::json) {
        emit(report.dump(2) + "\n", out_file, out);
      } else {
        Table table{{"key", "value"}, {}};
        flatten(report, "", table);
        emit(table.to_csv(), out_file, out);
      }
      return kSuccess;
    }

    if (sweep_cmd->parsed()) {
      sweep_req.family = parse_kind(sweep_family);
      sweep_req.n = IntRange::parse(range_text);
      const Table table = sweep(sweep_req);
      if (sweep_cmd->count("--format") == 0 || format == "csv") {
        emit(table.to_csv(), out_file, out);
      } else if (format == "json") {
        emit(table.to_json().dump(2) + "\n", out_file, out);
      } else {
        throw InvalidInput("--format must be csv or json");
      }
      return kSuccess;
    }

    std::vector<CheckResult> results;
    if (!graph_text.empty()) {
      const Graph g = io::load_graph(graph_text);
      results = verify_graph(g, verify_cfg);
    }
    if (graph_text.empty() || verify_cmd->count("--suite") > 0) {
      auto more = verify(suite, verify_cfg);
      results.insert(results.end(), more.begin(), more.end());
    }
    int failures = 0;
    for (const auto& r : results) {
      out << (r.passed ? "PASS " : "FAIL ") << r.name;
      if (!r.detail.empty()) out << "  (" << r.detail << ")";
      out << '\n';
      failures += r.passed ? 0 : 1;
    }
    out << results.size() - failures << "/" << results.size() << " checks passed\n";
    if (failures > 0) {
      for (const auto& r : results) {
        if (!r.passed) err << "failed check: " << r.name << '\n';
      }
      return kVerificationFailure;
    }
    return kSuccess;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const PreconditionFailure& e) {
    err << "error: " << e.what() << '\n';
    return kPreconditionFailure;
  }
}

}  // namespace rigid::cli
