#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pathhopf {

using Vertex = std::uint16_t;

/// Default absolute tolerance for scalar comparisons.
inline constexpr double kDefaultTolerance = 1e-9;

/// A simple, undirected (biorientable) graph given by a symmetric 0/1 adjacency matrix.
///
/// Construction does not validate; use validate() or parse_graph() to obtain a checked graph.
class Graph {
 public:
  Graph() = default;
  Graph(std::string name, std::vector<std::string> vertices, std::vector<std::vector<int>> adjacency);

  /// Builds the symmetric adjacency from unordered edge pairs.
  static Graph from_edges(std::string name, std::vector<std::string> vertices,
                          const std::vector<std::pair<int, int>>& edges);

  const std::string& name() const { return name_; }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<std::vector<int>>& adjacency() const { return adjacency_; }
  std::size_t vertex_count() const { return vertices_.size(); }

  bool adjacent(Vertex a, Vertex b) const { return adjacency_[a][b] != 0; }
  /// Neighbours of v in increasing index order.
  std::span<const Vertex> neighbors(Vertex v) const { return neighbors_[v]; }

 private:
  std::string name_;
  std::vector<std::string> vertices_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<std::vector<Vertex>> neighbors_;
};

struct ValidationReport {
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

/// Perron-Frobenius data: largest adjacency eigenvalue and its positive eigenvector,
/// scaled so that the smallest component is exactly 1.
struct Spectrum {
  double beta = 0.0;
  std::vector<double> mu;
  /// max_v |(M mu)_v - beta mu_v|
  double residual = 0.0;
  int iterations = 0;
};

struct CoxeterInfo {
  int coxeter_number = 0;
  int max_essential_length = 0;
};

/// Parses the JSON graph document {"name", "vertices", "edges"} and validates it.
/// Throws InputError for malformed documents and ValidationError for invalid graphs.
Graph parse_graph(std::string_view text);
Graph load_graph(const std::string& file_path);

ValidationReport validate(const Graph& g);

/// Power iteration on M + I from the all-ones vector. Throws ConvergenceError past the cap.
Spectrum perron_frobenius(const Graph& g, int max_iterations = 1'000'000);

/// Coxeter number N with beta = 2 cos(pi / N) and L = N - 2; absent when beta >= 2 - tol
/// or when no integer N matches (the graph is then not of ADE type).
std::optional<CoxeterInfo> coxeter_info(const Spectrum& s, double tol = kDefaultTolerance);

/// Human readable reason coxeter_info() returned nothing, empty if it did not.
std::string coxeter_diagnostic(const Spectrum& s, double tol = kDefaultTolerance);

}  // namespace pathhopf
