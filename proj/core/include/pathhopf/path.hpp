#pragma once

#include <complex>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pathhopf/graph.hpp"

namespace pathhopf {

using Scalar = std::complex<double>;

/// Coefficients below this magnitude are dropped after every path-space operation.
inline constexpr double kPruneThreshold = 1e-12;

/// An admissible walk (v_0, ..., v_n). Length is the number of steps.
struct Path {
  std::vector<Vertex> vertices;

  Path() = default;
  explicit Path(std::vector<Vertex> v) : vertices(std::move(v)) {}
  Path(std::initializer_list<Vertex> v) : vertices(v) {}

  int length() const { return static_cast<int>(vertices.size()) - 1; }
  Vertex source() const { return vertices.front(); }
  Vertex range() const { return vertices.back(); }

  auto operator<=>(const Path&) const = default;
  bool operator==(const Path&) const = default;
};

/// Dash separated vertex indices, e.g. "0-1-2". A literal without dashes is read one digit
/// per vertex ("012"), which is only unambiguous for graphs with at most ten vertices.
Path parse_path(std::string_view literal);
std::string to_string(const Path& p);

/// Formal linear combination of elementary paths of one fixed length.
/// Iteration order is lexicographic in the vertex sequence.
class PathVector {
 public:
  using Map = std::map<Path, Scalar>;

  PathVector() = default;
  explicit PathVector(int length) : length_(length) {}
  /// The basis vector of a single elementary path.
  PathVector(const Path& p, Scalar c = 1.0);

  int length() const { return length_; }
  const Map& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Scalar coefficient(const Path& p) const;

  /// Adds c * p. Throws std::invalid_argument on a length mismatch.
  void add(const Path& p, Scalar c);
  void add(const PathVector& other, Scalar c = 1.0);
  void prune(double threshold = kPruneThreshold);

  PathVector& operator+=(const PathVector& o);
  PathVector& operator-=(const PathVector& o);
  PathVector& operator*=(Scalar c);

  double norm() const;
  double max_abs() const;

 private:
  int length_ = 0;
  Map terms_;
};

PathVector operator+(PathVector a, const PathVector& b);
PathVector operator-(PathVector a, const PathVector& b);
PathVector operator*(Scalar c, PathVector a);

/// max |a_eta - b_eta| over the union of supports; lengths must agree unless one side is zero.
double distance(const PathVector& a, const PathVector& b);

/// Normal-ordered monomial c+_{i_l} ... c+_{i_1} with i_1 < ... < i_l, stored as (i_1, ..., i_l).
/// The empty word is the identity.
class OperatorWord {
 public:
  OperatorWord() = default;
  explicit OperatorWord(std::vector<int> indices);

  const std::vector<int>& indices() const { return indices_; }
  std::size_t size() const { return indices_.size(); }
  bool empty() const { return indices_.empty(); }

  /// Word for c+_k * (this), rewritten into increasing order with c+_i c+_j = c+_{j+2} c+_i (j >= i).
  OperatorWord prepend(int k) const;

  auto operator<=>(const OperatorWord&) const = default;
  bool operator==(const OperatorWord&) const = default;

 private:
  std::vector<int> indices_;
};

std::string to_string(const OperatorWord& w);

/// Graph together with its Perron-Frobenius data: everything the path operators need.
class PathSpace {
 public:
  explicit PathSpace(Graph g);
  PathSpace(Graph g, Spectrum s);

  const Graph& graph() const { return graph_; }
  const Spectrum& spectrum() const { return spectrum_; }
  double beta() const { return spectrum_.beta; }
  double mu(Vertex v) const { return spectrum_.mu[v]; }

  bool is_admissible(const Path& p) const;

 private:
  Graph graph_;
  Spectrum spectrum_;
};

/// All walks of length n in lexicographic order, optionally filtered by endpoints.
std::vector<Path> enumerate_paths(const Graph& g, int n, std::optional<Vertex> source = std::nullopt,
                                  std::optional<Vertex> range = std::nullopt);

/// sum conj(x_eta) y_eta; zero when the lengths differ.
Scalar inner_product(const PathVector& x, const PathVector& y);

/// Bilinear concatenation; (v_0..v_n) * (w_0..w_m) vanishes unless v_n == w_0.
PathVector concat(const PathVector& x, const PathVector& y);

/// Time inversion: reverses every path and conjugates the coefficients.
PathVector star(const PathVector& x);

/// c_i: removes the backtrack (v_i, v_{i+1}, v_i) with weight sqrt(mu_{v_{i+1}} / mu_{v_i}).
PathVector annihilate(const PathSpace& space, int i, const PathVector& x);

/// c+_i: inserts every excursion (v_i, v, v_i) with weight sqrt(mu_v / mu_{v_i}).
PathVector create(const PathSpace& space, int i, const PathVector& x);

/// Temperley-Lieb-Jones generator e_i = c+_i c_i / beta.
PathVector tlj(const PathSpace& space, int i, const PathVector& x);

/// Applies c+_{i_1} first and c+_{i_l} last.
PathVector apply_word(const PathSpace& space, const OperatorWord& w, const PathVector& x);

/// Adjoint of apply_word: c_{i_1} ... c_{i_l}, i.e. c_{i_l} applied first.
PathVector apply_word_adjoint(const PathSpace& space, const OperatorWord& w, const PathVector& x);

}  // namespace pathhopf
