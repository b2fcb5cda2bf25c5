#include "pathhopf/essential.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "pathhopf/error.hpp"

namespace pathhopf {

// --- EssentialSlice ---------------------------------------------------------

EssentialSlice::EssentialSlice(int length, std::vector<BasisVector> vectors)
    : length_(length), vectors_(std::move(vectors)) {
  for (std::size_t a = 0; a < vectors_.size(); ++a) {
    for (const auto& [p, c] : vectors_[a].vector.terms()) support_[p].emplace_back(a, c);
  }
}

std::vector<Scalar> EssentialSlice::coordinates(const PathVector& x) const {
  std::vector<Scalar> out(vectors_.size());
  if (x.empty()) return out;
  if (x.length() != length_) throw std::invalid_argument("coordinates: vector length differs from the slice length");
  for (const auto& [p, v] : x.terms()) {
    auto it = support_.find(p);
    if (it == support_.end()) continue;
    for (const auto& [a, c] : it->second) out[a] += std::conj(c) * v;
  }
  return out;
}

PathVector EssentialSlice::expand(std::span<const Scalar> coords) const {
  PathVector out(length_);
  for (std::size_t a = 0; a < coords.size() && a < vectors_.size(); ++a) {
    if (coords[a] != Scalar{}) out.add(vectors_[a].vector, coords[a]);
  }
  return out;
}

// --- kernel computation -----------------------------------------------------

namespace {

using Dense = std::vector<double>;

double dot(const Dense& a, const Dense& b) {
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

void subtract_projections(Dense& v, const std::vector<Dense>& onto) {
  // two passes of modified Gram-Schmidt keep the result orthogonal to working precision
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& q : onto) {
      const double c = dot(q, v);
      for (std::size_t k = 0; k < v.size(); ++k) v[k] -= c * q[k];
    }
  }
}

// Appends v / |v| to basis when its component outside basis exceeds the pivot tolerance.
bool orthonormal_append(std::vector<Dense>& basis, Dense v, const std::vector<Dense>* also = nullptr) {
  if (also) subtract_projections(v, *also);
  subtract_projections(v, basis);
  const double nrm = std::sqrt(dot(v, v));
  if (nrm < kPivotTolerance) return false;
  for (auto& c : v) c /= nrm;
  basis.push_back(std::move(v));
  return true;
}

}  // namespace

EssentialSlice essential_basis(const PathSpace& space, int n) {
  if (n < 0) throw std::invalid_argument("essential_basis: negative length");
  const auto& g = space.graph();
  std::map<std::pair<Vertex, Vertex>, std::vector<Path>> blocks;
  for (auto& p : enumerate_paths(g, n)) blocks[{p.source(), p.range()}].push_back(std::move(p));

  std::vector<BasisVector> result;
  for (const auto& [ends, paths] : blocks) {
    const std::size_t dim = paths.size();
    // rows of the stacked annihilators restricted to this block
    std::map<std::pair<int, Path>, Dense> rows;
    for (int i = 0; i + 2 <= n; ++i) {
      for (std::size_t k = 0; k < dim; ++k) {
        for (const auto image = annihilate(space, i, PathVector(paths[k])); const auto& [q, c] : image.terms()) {
          auto [it, inserted] = rows.try_emplace({i, q}, Dense(dim, 0.0));
          it->second[k] += c.real();
        }
      }
    }
    std::vector<Dense> row_space;
    for (auto& [key, row] : rows) orthonormal_append(row_space, std::move(row));

    std::vector<Dense> kernel;
    for (std::size_t k = 0; k < dim && row_space.size() + kernel.size() < dim; ++k) {
      Dense e(dim, 0.0);
      e[k] = 1.0;
      orthonormal_append(kernel, std::move(e), &row_space);
    }
    for (const auto& v : kernel) {
      PathVector vec(n);
      for (std::size_t k = 0; k < dim; ++k) {
        if (std::abs(v[k]) >= kPruneThreshold) vec.add(paths[k], v[k]);
      }
      result.push_back(BasisVector{std::move(vec), ends.first, ends.second});
    }
  }
  return EssentialSlice(n, std::move(result));
}

// --- EssentialBasis cache ---------------------------------------------------

EssentialBasis::EssentialBasis(std::shared_ptr<const PathSpace> space) : space_(std::move(space)) {
  if (!space_) throw std::invalid_argument("EssentialBasis requires a path space");
}

const EssentialSlice& EssentialBasis::slice(int n) const {
  std::lock_guard lock(mutex_);
  auto it = slices_.find(n);
  if (it == slices_.end()) {
    it = slices_.emplace(n, std::make_unique<EssentialSlice>(essential_basis(*space_, n))).first;
  }
  return *it->second;
}

std::size_t EssentialBasis::global_index(int n, std::size_t a) const {
  std::size_t offset = 0;
  for (int m = 0; m < n; ++m) offset += dim(m);
  return offset + a;
}

// --- essentials -------------------------------------------------------------

bool is_essential(const PathSpace& space, const PathVector& x, double tol) {
  for (int i = 0; i + 2 <= x.length(); ++i) {
    if (annihilate(space, i, x).norm() >= tol) return false;
  }
  return true;
}

double tridiagonal_determinant(double beta, int size) {
  double prev = 1.0, cur = beta;
  if (size <= 0) return 1.0;
  for (int k = 2; k <= size; ++k) {
    const double next = beta * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double tridiagonal_determinant_closed_form(double beta, int size) {
  if (std::abs(beta - 2.0) < 1e-12) return size + 1.0;
  const std::complex<double> disc = std::sqrt(std::complex<double>(1.0 - 4.0 / (beta * beta), 0.0));
  const auto plus = (1.0 + disc) / 2.0;
  const auto minus = (1.0 - disc) / 2.0;
  const auto ratio = (std::pow(plus, size + 1) - std::pow(minus, size + 1)) / (plus - minus);
  return std::pow(beta, size) * ratio.real();
}

TridiagonalSolution tridiagonal_solve(double beta, int size) {
  if (size < 1) throw std::invalid_argument("tridiagonal_solve: size must be at least 1");
  TridiagonalSolution sol;
  sol.determinant = tridiagonal_determinant(beta, size);
  if (std::abs(sol.determinant) < 1e-9) {
    throw SingularSystemError("tridiagonal system of size " + std::to_string(size) +
                              " is singular at beta = " + std::to_string(beta));
  }
  // alpha_k = (-1)^k D_{size-1-k} / D_size (first column of the inverse)
  sol.alpha.resize(size);
  for (int k = 0; k < size; ++k) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    sol.alpha[k] = sign * tridiagonal_determinant(beta, size - 1 - k) / sol.determinant;
  }
  return sol;
}

namespace {

bool vanishes(const PathVector& v, double scale) { return v.max_abs() < 1e-10 * std::max(1.0, scale); }

// Only annihilators c_i with i <= top are probed; the caller guarantees the others vanish.
void decompose_into(const PathSpace& space, const PathVector& x, int top, std::map<OperatorWord, PathVector>& acc) {
  if (x.empty()) return;
  const int n = x.length();
  const double scale = x.max_abs();
  for (int i = std::min(top, n - 2); i >= 0; --i) {
    PathVector y = annihilate(space, i, x);
    if (vanishes(y, scale)) continue;

    const auto sol = tridiagonal_solve(space.beta(), n - 1 - i);
    std::map<OperatorWord, PathVector> inner;
    decompose_into(space, y, y.length() - 2, inner);

    PathVector rest = x;
    for (int k = i; k <= n - 2; ++k) {
      const double a = sol.alpha[k - i];
      rest.add(create(space, k, y), -a);
      for (const auto& [w, xi] : inner) {
        auto [it, inserted] = acc.try_emplace(w.prepend(k), xi.length());
        it->second.add(xi, a);
      }
    }
    decompose_into(space, rest, i - 1, acc);
    return;
  }
  auto [it, inserted] = acc.try_emplace(OperatorWord{}, n);
  it->second.add(x, 1.0);
}

}  // namespace

Decomposition decompose(const PathSpace& space, const PathVector& x, int cutoff) {
  if (x.length() > cutoff) {
    throw CutoffError("path length " + std::to_string(x.length()) + " exceeds the cutoff " + std::to_string(cutoff));
  }
  std::map<OperatorWord, PathVector> acc;
  decompose_into(space, x, x.length() - 2, acc);

  Decomposition d;
  d.length = x.length();
  for (auto& [w, xi] : acc) {
    if (!xi.empty()) d.terms.push_back({w, std::move(xi)});
  }
  std::stable_sort(d.terms.begin(), d.terms.end(), [](const auto& a, const auto& b) {
    if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
    return a.word < b.word;
  });
  return d;
}

PathVector recompose(const PathSpace& space, const Decomposition& d) {
  PathVector out(d.length);
  for (const auto& t : d.terms) out.add(apply_word(space, t.word, t.essential), 1.0);
  return out;
}

PathVector project_component(const PathSpace& space, const PathVector& x, int l, int cutoff) {
  if (l < 0 || 2 * l > x.length()) throw std::invalid_argument("project_component: level out of range");
  auto d = decompose(space, x, cutoff);
  PathVector out(x.length());
  for (const auto& t : d.terms) {
    if (static_cast<int>(t.word.size()) == l) out.add(apply_word(space, t.word, t.essential), 1.0);
  }
  return out;
}

}  // namespace pathhopf
