#include "rigid/io.hpp"

#include "rigid/error.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace rigid::io {

using nlohmann::json;

namespace {

int as_int(const json& j, const std::string& what) {
  if (!j.is_number_integer()) {
    throw InvalidInput(what + " must be an integer");
  }
  return j.get<int>();
}

json points_to_json(const Realization& p) {
  json pts = json::array();
  const auto& c = p.coordinates();
  for (Eigen::Index i = 0; i < c.cols(); ++i) {
    json point = json::array();
    for (Eigen::Index k = 0; k < c.rows(); ++k) point.push_back(c(k, i));
    pts.push_back(std::move(point));
  }
  return pts;
}

}  // namespace

Graph graph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges")) {
    throw InvalidInput("graph JSON needs fields \"n\" and \"edges\"");
  }
  const int n = as_int(j.at("n"), "\"n\"");
  const json& list = j.at("edges");
  if (!list.is_array()) {
    throw InvalidInput("\"edges\" must be an array");
  }
  std::vector<LabeledEdge> edges;
  edges.reserve(list.size());
  for (const json& e : list) {
    if (!e.is_array() || e.size() != 2) {
      throw InvalidInput("each edge must be a 2-element array, got " + e.dump());
    }
    edges.emplace_back(as_int(e[0], "edge endpoint"), as_int(e[1], "edge endpoint"));
  }
  return Graph::build(n, edges);
}

json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (const auto& [i, j] : g.labeled_edges()) {
    edges.push_back({i, j});
  }
  return {{"n", g.order()}, {"edges", std::move(edges)}};
}

Graph graph_from_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<int> n;
  std::vector<LabeledEdge> edges;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<long long> values;
    std::string token;
    while (fields >> token) {
      long long v = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
      if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw InvalidInput("line " + std::to_string(line_no) + ": '" + token +
                           "' is not an integer");
      }
      values.push_back(v);
    }
    if (values.empty()) continue;
    if (!n) {
      if (values.size() != 1) {
        throw InvalidInput("line " + std::to_string(line_no) + ": expected the vertex count");
      }
      n = static_cast<int>(values[0]);
    } else {
      if (values.size() != 2) {
        throw InvalidInput("line " + std::to_string(line_no) + ": expected 'i j'");
      }
      edges.emplace_back(static_cast<int>(values[0]), static_cast<int>(values[1]));
    }
  }
  if (!n) {
    throw InvalidInput("edge list is empty: missing vertex count");
  }
  return Graph::build(*n, edges);
}

std::string graph_to_text(const Graph& g) {
  std::ostringstream out;
  out << g.order() << '\n';
  for (const auto& [i, j] : g.labeled_edges()) out << i << ' ' << j << '\n';
  return out.str();
}

Graph parse_graph(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::parse_error& e) {
      throw InvalidInput(std::string("graph JSON: ") + e.what());
    }
    return graph_from_json(j);
  }
  return graph_from_text(text);
}

Graph load_graph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw InvalidInput("cannot open graph file " + path.string());
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str());
}

Framework framework_from_json(const json& j) {
  if (!j.is_object() || !j.contains("graph") || !j.contains("d") || !j.contains("points")) {
    throw InvalidInput("framework JSON needs fields \"graph\", \"d\" and \"points\"");
  }
  Graph g = graph_from_json(j.at("graph"));
  const int d = as_int(j.at("d"), "\"d\"");
  const json& pts = j.at("points");
  if (d < 1 || !pts.is_array() || static_cast<int>(pts.size()) != g.order()) {
    throw InvalidInput("\"points\" must hold one point per vertex and d must be >= 1");
  }
  Eigen::MatrixXd coords(d, g.order());
  for (int i = 0; i < g.order(); ++i) {
    const json& p = pts[static_cast<std::size_t>(i)];
    if (!p.is_array() || static_cast<int>(p.size()) != d) {
      throw InvalidInput("point " + std::to_string(i + 1) + " must have " +
                         std::to_string(d) + " coordinates");
    }
    for (int k = 0; k < d; ++k) {
      if (!p[static_cast<std::size_t>(k)].is_number()) {
        throw InvalidInput("point " + std::to_string(i + 1) + " has a non-numeric coordinate");
      }
      coords(k, i) = p[static_cast<std::size_t>(k)].get<double>();
    }
  }
  return Framework(std::move(g), Realization(std::move(coords)));
}

json framework_to_json(const Framework& f) {
  return {{"graph", graph_to_json(f.graph())},
          {"d", f.dim()},
          {"points", points_to_json(f.realization())}};
}

json to_json(const SpectralSummary& s) {
  json groups = json::array();
  for (const auto& g : s.groups) {
    groups.push_back({{"value", g.value}, {"multiplicity", g.multiplicity}});
  }
  return {{"eigenvalues", s.eigenvalues}, {"groups", std::move(groups)},
          {"tolerance", s.tolerance}};
}

json to_json(const BoundReport& r) {
  return {{"theorem", r.theorem}, {"lhs", r.lhs},           {"rhs", r.rhs},
          {"slack", r.slack},     {"satisfied", r.satisfied}, {"warning", r.warning},
          {"inputs", r.inputs}};
}

json to_json(const GacEstimate& e) {
  return {{"d", e.d},
          {"value", e.value},
          {"upper_bound", e.upper_bound},
          {"best_realization", points_to_json(e.best_realization)},
          {"restarts", e.restarts},
          {"iterations", e.iterations},
          {"seed", e.seed},
          {"best_restart", e.best_restart},
          {"restart_values", e.restart_values},
          {"evaluations", e.evaluations},
          {"rejected_noninjective", e.rejected_noninjective},
          {"converged", e.converged}};
}

json to_json(const RigidityReport& r) {
  return {{"trivial_dim", r.trivial_dim},
          {"rigidity_eigenvalue", r.rigidity_eigenvalue},
          {"max_eigenvalue", r.max_eigenvalue},
          {"stiffness_rank", r.stiffness_rank},
          {"rigidity_rank", r.rigidity_rank},
          {"is_inf_rigid", r.is_inf_rigid},
          {"kernel_is_trivial", r.kernel_is_trivial},
          {"criteria_agree", r.criteria_agree},
          {"rank_tolerance", r.rank_tolerance},
          {"coincidence_tolerance", r.coincidence_tolerance}};
}

std::string format_double(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return ec == std::errc{} ? std::string(buf, ptr) : std::string("nan");
}

}  // namespace rigid::io
