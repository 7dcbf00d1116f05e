#pragma once

#include "rigid/bounds.hpp"
#include "rigid/gac.hpp"
#include "rigid/graph.hpp"
#include "rigid/rigidity.hpp"
#include "rigid/spectral.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <string>
#include <string_view>

namespace rigid::io {

// Graph JSON: {"n": 3, "edges": [[1, 2], [2, 3]]} with 1-based labels.
Graph graph_from_json(const nlohmann::json& j);
nlohmann::json graph_to_json(const Graph& g);

// Plain text: first line "n", then one "i j" pair per line. '#' starts a comment.
Graph graph_from_text(std::string_view text);
std::string graph_to_text(const Graph& g);

/// Dispatches on the first non-blank character: '{' means JSON.
Graph parse_graph(std::string_view text);
Graph load_graph(const std::filesystem::path& path);

// Framework JSON: {"graph": {...}, "d": 2, "points": [[x, y], ...]}.
Framework framework_from_json(const nlohmann::json& j);
nlohmann::json framework_to_json(const Framework& f);

nlohmann::json to_json(const SpectralSummary& s);
nlohmann::json to_json(const BoundReport& r);
nlohmann::json to_json(const GacEstimate& e);
nlohmann::json to_json(const RigidityReport& r);

/// Shortest decimal form that parses back to the same double.
std::string format_double(double x);

}  // namespace rigid::io
