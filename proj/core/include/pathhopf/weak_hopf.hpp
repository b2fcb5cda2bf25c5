#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "pathhopf/essential.hpp"
#include "pathhopf/path.hpp"

namespace pathhopf {

/// Matrix unit xi_left (x) xi_right of End(E_n), indices into the essential slice of length n.
struct BasisKey {
  int length = 0;
  std::size_t left = 0;
  std::size_t right = 0;

  auto operator<=>(const BasisKey&) const = default;
  bool operator==(const BasisKey&) const = default;
};

/// Element of the direct sum of E_n (x) E_n, as a sparse map over matrix units.
class AlgebraElement {
 public:
  using Map = std::map<BasisKey, Scalar>;

  AlgebraElement() = default;
  AlgebraElement(BasisKey k, Scalar c = 1.0);

  const Map& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Scalar coefficient(const BasisKey& k) const;

  void add(const BasisKey& k, Scalar c);
  void add(const AlgebraElement& o, Scalar c = 1.0);
  void prune(double threshold = kPruneThreshold);

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement& operator*=(Scalar c);

  double max_abs() const;

 private:
  Map terms_;
};

AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b);
AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b);
AlgebraElement operator*(Scalar c, AlgebraElement a);
double distance(const AlgebraElement& a, const AlgebraElement& b);

/// Element of A (x) A; coproduct values live here.
class TensorSquare {
 public:
  using Key = std::pair<BasisKey, BasisKey>;
  using Map = std::map<Key, Scalar>;

  const Map& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add(const Key& k, Scalar c);
  void add(const TensorSquare& o, Scalar c = 1.0);
  /// Adds c * (x (x) y).
  void add_product(const AlgebraElement& x, const AlgebraElement& y, Scalar c = 1.0);
  void prune(double threshold = kPruneThreshold);

 private:
  Map terms_;
};

double distance(const TensorSquare& a, const TensorSquare& b);

/// Key of C(i_1..i_n; j_n..j_1) = < xi, c_{i_1} ... c_{i_n} c+_{j_n} ... c+_{j_1} xi >:
/// j is the creation word of the left tensor factor, i the one of the right factor.
struct CoefficientKey {
  OperatorWord i;
  OperatorWord j;

  auto operator<=>(const CoefficientKey&) const = default;
  bool operator==(const CoefficientKey&) const = default;
};

/// Choice of the numerical factor in S(xi (x) w) = F(xi, w) w* (x) xi*.
enum class AntipodeFactor {
  perron_frobenius,  ///< F = sqrt(mu_s(w) mu_r(xi) / (mu_r(w) mu_s(xi)))
  unit,              ///< F = 1, only meaningful as a negative control
};

/// Elementary-path coordinates of a tensor: (eta, eta') -> coefficient.
using ElementaryTensor = std::map<std::pair<Path, Path>, Scalar>;

/// The weak *-Hopf algebra on graded endomorphisms of essential paths of one graph.
///
/// Immutable apart from internal memo tables (essential slices, structure constants,
/// projector coefficients), which are guarded by mutexes; all members are safe to call
/// from several threads.
class WeakHopfAlgebra {
 public:
  explicit WeakHopfAlgebra(std::shared_ptr<const PathSpace> space, int cutoff = kDefaultCutoff);
  explicit WeakHopfAlgebra(Graph g, int cutoff = kDefaultCutoff);

  const PathSpace& space() const { return *space_; }
  const EssentialBasis& basis() const { return basis_; }
  const EssentialSlice& slice(int n) const { return basis_.slice(n); }
  int cutoff() const { return cutoff_; }

  /// Evaluated by direct operator application on the first basis vector of length
  /// base_length and cross-checked on a second one. Zero for words of unequal length.
  Scalar coefficient(const CoefficientKey& key, int base_length) const;

  /// The projector P on eta (x) eta' for path vectors of equal length.
  AlgebraElement project(const PathVector& left, const PathVector& right) const;

  /// Essential vectors xi, xi' expanded into matrix units (no projection applied).
  AlgebraElement element(const PathVector& left, const PathVector& right) const;

  AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) const;
  /// sum over all pairs of vertices v (x) v'
  AlgebraElement identity() const;
  AlgebraElement star(const AlgebraElement& x) const;
  TensorSquare coproduct(const AlgebraElement& x) const;
  TensorSquare multiply_tensor_square(const TensorSquare& u, const TensorSquare& v) const;
  Scalar counit(const AlgebraElement& x) const;
  AlgebraElement antipode(const AlgebraElement& x, AntipodeFactor f = AntipodeFactor::perron_frobenius) const;
  double antipode_factor(const BasisKey& k, AntipodeFactor f = AntipodeFactor::perron_frobenius) const;

  /// Product of two matrix units (memoized).
  const AlgebraElement& basis_product(const BasisKey& a, const BasisKey& b) const;

  /// All matrix units of lengths 0..max_length.
  std::vector<BasisKey> basis_elements(int max_length) const;

  ElementaryTensor to_elementary(const AlgebraElement& x) const;

 private:
  // <xi_c, xi_a*> for the essential slice of length n
  const std::vector<std::vector<Scalar>>& star_matrix(int n) const;

  std::shared_ptr<const PathSpace> space_;
  EssentialBasis basis_;
  int cutoff_;

  mutable std::mutex memo_mutex_;
  mutable std::map<std::pair<int, CoefficientKey>, Scalar> coefficients_;
  mutable std::map<std::pair<BasisKey, BasisKey>, std::unique_ptr<AlgebraElement>> products_;
  mutable std::map<int, std::unique_ptr<std::vector<std::vector<Scalar>>>> star_matrices_;
};

/// c * (x (x) y) in elementary coordinates.
ElementaryTensor elementary_tensor(const PathVector& x, const PathVector& y, Scalar c = 1.0);
ElementaryTensor operator+(ElementaryTensor a, const ElementaryTensor& b);
double distance(const ElementaryTensor& a, const ElementaryTensor& b);

}  // namespace pathhopf
