#include "rigid/families.hpp"

#include "rigid/error.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

namespace rigid {

namespace {

void require(bool ok, const FamilySpec& spec, const std::string& inequality) {
  if (!ok) {
    throw InvalidInput(spec.to_string() + ": requires " + inequality);
  }
}

int parse_int(std::string_view text, std::string_view whole) {
  int value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || text.empty()) {
    throw InvalidInput("family spec '" + std::string(whole) + "': '" + std::string(text) +
                       "' is not an integer");
  }
  return value;
}

}  // namespace

FamilySpec FamilySpec::parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw InvalidInput("family spec '" + std::string(text) + "': expected kind:params");
  }
  const std::string_view kind = text.substr(0, colon);
  const std::string_view params = text.substr(colon + 1);
  const auto comma = params.find(',');

  FamilySpec spec;
  if (kind == "complete") {
    if (comma != std::string_view::npos) {
      throw InvalidInput("family spec '" + std::string(text) + "': complete takes one parameter");
    }
    spec = complete(parse_int(params, text));
  } else {
    if (comma == std::string_view::npos) {
      throw InvalidInput("family spec '" + std::string(text) + "': expected two parameters");
    }
    const int a = parse_int(params.substr(0, comma), text);
    const int b = parse_int(params.substr(comma + 1), text);
    if (kind == "path") {
      spec = path(a, b);
    } else if (kind == "cycle") {
      spec = cycle(a, b);
    } else if (kind == "star") {
      spec = star(a, b);
    } else if (kind == "turan") {
      spec = turan(a, b);
    } else {
      throw InvalidInput("family spec '" + std::string(text) + "': unknown kind '" +
                         std::string(kind) + "'");
    }
  }
  spec.validate();
  return spec;
}

std::string FamilySpec::to_string() const {
  const std::string pair = std::to_string(first) + "," + std::to_string(second);
  switch (kind) {
    case FamilyKind::complete: return "complete:" + std::to_string(first);
    case FamilyKind::path: return "path:" + pair;
    case FamilyKind::cycle: return "cycle:" + pair;
    case FamilyKind::star: return "star:" + pair;
    case FamilyKind::turan: return "turan:" + pair;
  }
  return "unknown";
}

void FamilySpec::validate() const {
  switch (kind) {
    case FamilyKind::complete:
      require(first >= 2, *this, "n >= 2");
      break;
    case FamilyKind::path:
    case FamilyKind::cycle:
      require(second >= 1, *this, "d >= 1");
      require(first >= second + 1, *this, "n >= d + 1");
      break;
    case FamilyKind::star:
      require(second >= 2, *this, "d >= 2");
      require(first >= second + 2, *this, "n >= d + 2");
      break;
    case FamilyKind::turan:
      require(first >= 2, *this, "k >= 2");
      require(second >= 2, *this, "r >= 2");
      break;
  }
}

int FamilySpec::order() const {
  return kind == FamilyKind::turan ? first * second : first;
}

Graph generate(const FamilySpec& spec) {
  spec.validate();
  const int n = spec.order();
  std::vector<LabeledEdge> edges;
  switch (spec.kind) {
    case FamilyKind::complete:
      for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) edges.emplace_back(i, j);
      }
      break;
    case FamilyKind::path:
      for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= std::min(n, i + spec.second); ++j) edges.emplace_back(i, j);
      }
      break;
    case FamilyKind::cycle:
      // Residues +-1..+-d mod n; for n <= 2d + 1 this covers every pair.
      for (int i = 0; i < n; ++i) {
        for (int k = 1; k <= spec.second; ++k) {
          const int j = (i + k) % n;
          if (j != i) edges.emplace_back(i + 1, j + 1);
        }
      }
      break;
    case FamilyKind::star:
      for (int i = 1; i <= spec.second; ++i) {
        for (int j = i + 1; j <= n; ++j) edges.emplace_back(i, j);
      }
      break;
    case FamilyKind::turan:
      for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
          if ((j - i) % spec.second != 0) edges.emplace_back(i, j);
        }
      }
      break;
  }
  return Graph::build(n, edges);
}

SpectralSummary star_spectrum(int n, int d) {
  if (d < 1 || n < d + 2) {
    throw InvalidInput("star_spectrum(" + std::to_string(n) + ", " + std::to_string(d) +
                       "): requires d >= 1 and n >= d + 2");
  }
  return SpectralSummary::from_groups({{0.0, 1},
                                       {static_cast<double>(d), n - d - 1},
                                       {static_cast<double>(n), d}});
}

SpectralSummary turan_spectrum(int k, int r) {
  if (k < 2 || r < 2) {
    throw InvalidInput("turan_spectrum(" + std::to_string(k) + ", " + std::to_string(r) +
                       "): requires k >= 2 and r >= 2");
  }
  return SpectralSummary::from_groups({{0.0, 1},
                                       {static_cast<double>(k * (r - 1)), (k - 1) * r},
                                       {static_cast<double>(k * r), r - 1}});
}

double cycle_a1(int n, int d) {
  if (d < 1 || n < d + 1) {
    throw InvalidInput("cycle_a1(" + std::to_string(n) + ", " + std::to_string(d) +
                       "): requires d >= 1 and n >= d + 1");
  }
  if (n <= 2 * d + 1) {
    return n;
  }
  double sum = 0;
  for (int k = 1; k <= d; ++k) {
    sum += 2.0 * (1.0 - std::cos(2.0 * k * std::numbers::pi / n));
  }
  return sum;
}

CycleTestVectors cycle_test_vectors(int n) {
  if (n < 2) {
    throw InvalidInput("cycle_test_vectors: requires n >= 2");
  }
  CycleTestVectors out{Eigen::VectorXd(n), Eigen::VectorXd(n), Eigen::VectorXd(2 * n)};
  const double pi = std::numbers::pi;
  for (int i = 1; i <= n; ++i) {
    const double shifted = i - 0.5;
    out.u(i - 1) = std::sqrt(2.0 / n) * std::cos(2.0 * pi / n * shifted);
    out.v(i - 1) = std::sqrt(1.0 / n) * std::cos(pi / n * shifted);
  }
  out.w << out.v, -out.v;
  return out;
}

Graph mirrored_path(int n, int d) {
  const Graph base = path_graph(n, d);
  std::vector<LabeledEdge> edges = base.labeled_edges();
  const std::size_t m = edges.size();
  for (std::size_t k = 0; k < m; ++k) {
    edges.emplace_back(edges[k].first + n, edges[k].second + n);
  }
  return Graph::build(2 * n, edges);
}

}  // namespace rigid
