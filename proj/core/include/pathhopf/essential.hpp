#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <utility>
#include <vector>

#include "pathhopf/path.hpp"

namespace pathhopf {

/// Pivot threshold of the Gram-Schmidt kernel computation.
inline constexpr double kPivotTolerance = 1e-9;

/// Default maximal path length accepted by decompose() and the algebra.
inline constexpr int kDefaultCutoff = 12;

struct BasisVector {
  PathVector vector;
  Vertex source = 0;
  Vertex range = 0;
};

/// Orthonormal basis of the essential paths of one length. Every vector lives in a single
/// (source, range) block; blocks appear in lexicographic endpoint order.
class EssentialSlice {
 public:
  EssentialSlice() = default;
  EssentialSlice(int length, std::vector<BasisVector> vectors);

  int length() const { return length_; }
  std::size_t dim() const { return vectors_.size(); }
  const std::vector<BasisVector>& vectors() const { return vectors_; }
  const BasisVector& operator[](std::size_t a) const { return vectors_[a]; }

  /// <xi_a, x> for every basis vector; x must have this slice's length.
  std::vector<Scalar> coordinates(const PathVector& x) const;
  /// sum_a coords[a] xi_a
  PathVector expand(std::span<const Scalar> coords) const;

 private:
  int length_ = 0;
  std::vector<BasisVector> vectors_;
  // elementary path -> (basis index, coefficient) for fast coordinates
  std::map<Path, std::vector<std::pair<std::size_t, Scalar>>> support_;
};

/// Computes the orthonormal basis of the intersection of ker c_i, 0 <= i <= n-2, block by
/// block. Deterministic: elementary paths are fed to modified Gram-Schmidt in lexicographic order.
EssentialSlice essential_basis(const PathSpace& space, int n);

/// Lazily filled, thread-safe cache of essential slices with a flat global index.
class EssentialBasis {
 public:
  explicit EssentialBasis(std::shared_ptr<const PathSpace> space);

  const PathSpace& space() const { return *space_; }
  const EssentialSlice& slice(int n) const;
  std::size_t dim(int n) const { return slice(n).dim(); }
  /// Offset of length n in the flat enumeration of all basis vectors of lengths 0, 1, ...
  std::size_t global_index(int n, std::size_t a) const;

 private:
  std::shared_ptr<const PathSpace> space_;
  mutable std::mutex mutex_;
  mutable std::map<int, std::unique_ptr<EssentialSlice>> slices_;
};

/// True iff ||c_i x|| < tol for every 0 <= i <= n-2.
bool is_essential(const PathSpace& space, const PathVector& x, double tol = kDefaultTolerance);

struct TridiagonalSolution {
  std::vector<double> alpha;
  double determinant = 0.0;
};

/// Determinant of the size x size tridiagonal matrix (beta on the diagonal, 1 off it),
/// by the three-term recurrence D_k = beta D_{k-1} - D_{k-2}.
double tridiagonal_determinant(double beta, int size);

/// Closed form beta^k (l+^{k+1} - l-^{k+1}) / (l+ - l-), l+- = (1 +- sqrt(1 - 4/beta^2)) / 2,
/// with the k + 1 limit at beta = 2.
double tridiagonal_determinant_closed_form(double beta, int size);

/// Solves T alpha = (1, 0, ..., 0). Throws SingularSystemError when |det T| < 1e-9.
TridiagonalSolution tridiagonal_solve(double beta, int size);

struct DecompositionTerm {
  OperatorWord word;
  PathVector essential;
};

/// x = sum over terms of apply_word(word, essential); words are normal ordered, distinct and
/// sorted by (word length, indices).
struct Decomposition {
  int length = 0;
  std::vector<DecompositionTerm> terms;
};

/// Splits x into creation-operator images of essential vectors, peeling off the largest
/// non-vanishing annihilator first. Throws CutoffError when x is longer than cutoff.
Decomposition decompose(const PathSpace& space, const PathVector& x, int cutoff = kDefaultCutoff);

/// sum apply_word(word, essential); the zero vector of d.length for an empty decomposition.
PathVector recompose(const PathSpace& space, const Decomposition& d);

/// Part of decompose(x) built from words with exactly l creation operators; the parts sum to x.
PathVector project_component(const PathSpace& space, const PathVector& x, int l,
                             int cutoff = kDefaultCutoff);

}  // namespace pathhopf
