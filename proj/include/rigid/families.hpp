#pragma once

#include "rigid/graph.hpp"
#include "rigid/spectral.hpp"

#include <Eigen/Dense>

#include <string>
#include <string_view>

namespace rigid {

enum class FamilyKind { complete, path, cycle, star, turan };

/// A named graph family with its parameters.
///
///   complete:n    K_n,        n >= 2
///   path:n,d      P_{n,d},    n >= d + 1
///   cycle:n,d     C_{n,d},    n >= d + 1
///   star:n,d      S_{n,d},    d >= 2, n >= d + 2
///   turan:k,r     T_{kr,r},   k >= 2, r >= 2
struct FamilySpec {
  FamilyKind kind = FamilyKind::complete;
  int first = 2;   // n, or k for turan
  int second = 0;  // d, or r for turan; unused for complete

  static FamilySpec complete(int n) { return {FamilyKind::complete, n, 0}; }
  static FamilySpec path(int n, int d) { return {FamilyKind::path, n, d}; }
  static FamilySpec cycle(int n, int d) { return {FamilyKind::cycle, n, d}; }
  static FamilySpec star(int n, int d) { return {FamilyKind::star, n, d}; }
  static FamilySpec turan(int k, int r) { return {FamilyKind::turan, k, r}; }

  /// Parses "complete:n", "path:n,d", "cycle:n,d", "star:n,d", "turan:k,r".
  static FamilySpec parse(std::string_view text);
  std::string to_string() const;

  /// Throws InvalidInput naming the violated inequality.
  void validate() const;
  int order() const;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

Graph generate(const FamilySpec& spec);

inline Graph complete_graph(int n) { return generate(FamilySpec::complete(n)); }
inline Graph path_graph(int n, int d) { return generate(FamilySpec::path(n, d)); }
inline Graph cycle_graph(int n, int d) { return generate(FamilySpec::cycle(n, d)); }
inline Graph star_graph(int n, int d) { return generate(FamilySpec::star(n, d)); }
inline Graph turan_graph(int k, int r) { return generate(FamilySpec::turan(k, r)); }

/// Laplacian spectrum of S_{n,d}: {0^(1), d^(n-d-1), n^(d)}. Requires d >= 1, n >= d + 2.
SpectralSummary star_spectrum(int n, int d);

/// Laplacian spectrum of T_{kr,r}: {0^(1), k(r-1)^((k-1)r), kr^(r-1)}.
SpectralSummary turan_spectrum(int k, int r);

/// Algebraic connectivity of C_{n,d}: n when n <= 2d + 1, otherwise
/// sum_{k=1..d} 2(1 - cos(2 k pi / n)).
double cycle_a1(int n, int d);

struct CycleTestVectors {
  Eigen::VectorXd u;  // unit eigenvector of L(C_{n,d}) for cycle_a1(n, d)
  Eigen::VectorXd v;  // half-frequency cosine, <v, v> = 1/2, orthogonal to 1_n
  Eigen::VectorXd w;  // [v; -v], unit norm in R^{2n}
};

CycleTestVectors cycle_test_vectors(int n);

/// P_{n,d} on vertices 1..n plus a disjoint copy on n+1..2n.
Graph mirrored_path(int n, int d);

}  // namespace rigid
