#include "pathhopf/weak_hopf.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pathhopf/error.hpp"

namespace pathhopf {

// --- AlgebraElement ---------------------------------------------------------

AlgebraElement::AlgebraElement(BasisKey k, Scalar c) {
  if (std::abs(c) >= kPruneThreshold) terms_.emplace(k, c);
}

Scalar AlgebraElement::coefficient(const BasisKey& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Scalar{} : it->second;
}

void AlgebraElement::add(const BasisKey& k, Scalar c) {
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) it->second += c;
}

void AlgebraElement::add(const AlgebraElement& o, Scalar c) {
  for (const auto& [k, v] : o.terms_) add(k, c * v);
  prune();
}

void AlgebraElement::prune(double threshold) {
  std::erase_if(terms_, [threshold](const auto& kv) { return std::abs(kv.second) < threshold; });
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  add(o, 1.0);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  add(o, -1.0);
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(Scalar c) {
  for (auto& [k, v] : terms_) v *= c;
  prune();
  return *this;
}

double AlgebraElement::max_abs() const {
  double m = 0.0;
  for (const auto& [k, v] : terms_) m = std::max(m, std::abs(v));
  return m;
}

AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
AlgebraElement operator*(Scalar c, AlgebraElement a) { return a *= c; }

namespace {

template <typename Map>
double map_distance(const Map& a, const Map& b) {
  double m = 0.0;
  for (const auto& [k, v] : a) {
    auto it = b.find(k);
    m = std::max(m, std::abs(v - (it == b.end() ? Scalar{} : it->second)));
  }
  for (const auto& [k, v] : b) {
    if (!a.contains(k)) m = std::max(m, std::abs(v));
  }
  return m;
}

}  // namespace

double distance(const AlgebraElement& a, const AlgebraElement& b) { return map_distance(a.terms(), b.terms()); }

// --- TensorSquare -----------------------------------------------------------

void TensorSquare::add(const Key& k, Scalar c) {
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) it->second += c;
}

void TensorSquare::add(const TensorSquare& o, Scalar c) {
  for (const auto& [k, v] : o.terms_) add(k, c * v);
  prune();
}

void TensorSquare::add_product(const AlgebraElement& x, const AlgebraElement& y, Scalar c) {
  for (const auto& [kx, vx] : x.terms()) {
    for (const auto& [ky, vy] : y.terms()) add({kx, ky}, c * vx * vy);
  }
}

void TensorSquare::prune(double threshold) {
  std::erase_if(terms_, [threshold](const auto& kv) { return std::abs(kv.second) < threshold; });
}

double distance(const TensorSquare& a, const TensorSquare& b) { return map_distance(a.terms(), b.terms()); }

// --- elementary coordinates -------------------------------------------------

ElementaryTensor elementary_tensor(const PathVector& x, const PathVector& y, Scalar c) {
  ElementaryTensor out;
  for (const auto& [p, a] : x.terms()) {
    for (const auto& [q, b] : y.terms()) out[{p, q}] += c * a * b;
  }
  return out;
}

ElementaryTensor operator+(ElementaryTensor a, const ElementaryTensor& b) {
  for (const auto& [k, v] : b) a[k] += v;
  return a;
}

double distance(const ElementaryTensor& a, const ElementaryTensor& b) { return map_distance(a, b); }

// --- WeakHopfAlgebra --------------------------------------------------------

WeakHopfAlgebra::WeakHopfAlgebra(std::shared_ptr<const PathSpace> space, int cutoff)
    : space_(std::move(space)), basis_(space_), cutoff_(cutoff) {
  if (cutoff_ < 0) throw std::invalid_argument("cutoff must be non-negative");
}

WeakHopfAlgebra::WeakHopfAlgebra(Graph g, int cutoff)
    : WeakHopfAlgebra(std::make_shared<const PathSpace>(std::move(g)), cutoff) {}

Scalar WeakHopfAlgebra::coefficient(const CoefficientKey& key, int base_length) const {
  if (key.i.size() != key.j.size()) return {};
  {
    std::lock_guard lock(memo_mutex_);
    auto it = coefficients_.find({base_length, key});
    if (it != coefficients_.end()) return it->second;
  }
  const auto& s = slice(base_length);
  if (s.dim() == 0) {
    throw Error("no essential path of length " + std::to_string(base_length) + " to evaluate the coefficient on");
  }
  auto evaluate = [&](const PathVector& xi) {
    return inner_product(apply_word(*space_, key.i, xi), apply_word(*space_, key.j, xi));
  };
  const Scalar value = evaluate(s[0].vector);
  if (s.dim() > 1 && std::abs(evaluate(s[1].vector) - value) > kDefaultTolerance) {
    throw Error("projector coefficient depends on the essential basis vector (words " + to_string(key.i) + " / " +
                to_string(key.j) + ")");
  }
  std::lock_guard lock(memo_mutex_);
  coefficients_.emplace(std::pair{base_length, key}, value);
  return value;
}

AlgebraElement WeakHopfAlgebra::project(const PathVector& left, const PathVector& right) const {
  AlgebraElement out;
  if (left.empty() || right.empty()) return out;
  if (left.length() != right.length()) throw std::invalid_argument("project: tensor factors differ in length");
  const auto dl = decompose(*space_, left, cutoff_);
  const auto dr = decompose(*space_, right, cutoff_);
  const int n = left.length();
  for (const auto& tl : dl.terms) {
    for (const auto& tr : dr.terms) {
      // terms with unequal numbers of creation operators are killed
      if (tl.word.size() != tr.word.size()) continue;
      const int m = n - 2 * static_cast<int>(tl.word.size());
      const Scalar c = coefficient({tr.word, tl.word}, m);
      if (std::abs(c) < kPruneThreshold) continue;
      const auto& s = slice(m);
      const auto cl = s.coordinates(tl.essential);
      const auto cr = s.coordinates(tr.essential);
      for (std::size_t a = 0; a < cl.size(); ++a) {
        if (std::abs(cl[a]) < kPruneThreshold) continue;
        for (std::size_t b = 0; b < cr.size(); ++b) {
          if (std::abs(cr[b]) < kPruneThreshold) continue;
          out.add(BasisKey{m, a, b}, c * cl[a] * cr[b]);
        }
      }
    }
  }
  out.prune();
  return out;
}

AlgebraElement WeakHopfAlgebra::element(const PathVector& left, const PathVector& right) const {
  AlgebraElement out;
  if (left.empty() || right.empty()) return out;
  if (left.length() != right.length()) throw std::invalid_argument("element: tensor factors differ in length");
  const int n = left.length();
  const auto& s = slice(n);
  const auto cl = s.coordinates(left);
  const auto cr = s.coordinates(right);
  for (std::size_t a = 0; a < cl.size(); ++a) {
    for (std::size_t b = 0; b < cr.size(); ++b) out.add(BasisKey{n, a, b}, cl[a] * cr[b]);
  }
  out.prune();
  return out;
}

const AlgebraElement& WeakHopfAlgebra::basis_product(const BasisKey& a, const BasisKey& b) const {
  {
    std::lock_guard lock(memo_mutex_);
    auto it = products_.find({a, b});
    if (it != products_.end()) return *it->second;
  }
  if (a.length + b.length > cutoff_) {
    throw CutoffError("product length " + std::to_string(a.length + b.length) + " exceeds the cutoff " +
                      std::to_string(cutoff_));
  }
  const auto& sa = slice(a.length);
  const auto& sb = slice(b.length);
  auto value = std::make_unique<AlgebraElement>();
  // ends must match on both sides for the concatenations to survive
  if (sa[a.left].range == sb[b.left].source && sa[a.right].range == sb[b.right].source) {
    const auto left = concat(sa[a.left].vector, sb[b.left].vector);
    const auto right = concat(sa[a.right].vector, sb[b.right].vector);
    *value = project(left, right);
  }
  std::lock_guard lock(memo_mutex_);
  auto [it, inserted] = products_.emplace(std::pair{a, b}, std::move(value));
  return *it->second;
}

AlgebraElement WeakHopfAlgebra::multiply(const AlgebraElement& x, const AlgebraElement& y) const {
  AlgebraElement out;
  for (const auto& [kx, vx] : x.terms()) {
    for (const auto& [ky, vy] : y.terms()) {
      for (const auto& [k, v] : basis_product(kx, ky).terms()) out.add(k, vx * vy * v);
    }
  }
  out.prune();
  return out;
}

AlgebraElement WeakHopfAlgebra::identity() const {
  AlgebraElement out;
  const auto d = slice(0).dim();
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) out.add(BasisKey{0, a, b}, 1.0);
  }
  return out;
}

const std::vector<std::vector<Scalar>>& WeakHopfAlgebra::star_matrix(int n) const {
  {
    std::lock_guard lock(memo_mutex_);
    auto it = star_matrices_.find(n);
    if (it != star_matrices_.end()) return *it->second;
  }
  const auto& s = slice(n);
  auto m = std::make_unique<std::vector<std::vector<Scalar>>>(s.dim(), std::vector<Scalar>(s.dim()));
  for (std::size_t a = 0; a < s.dim(); ++a) {
    const auto coords = s.coordinates(pathhopf::star(s[a].vector));
    for (std::size_t c = 0; c < s.dim(); ++c) (*m)[c][a] = coords[c];
  }
  std::lock_guard lock(memo_mutex_);
  auto [it, inserted] = star_matrices_.emplace(n, std::move(m));
  return *it->second;
}

AlgebraElement WeakHopfAlgebra::star(const AlgebraElement& x) const {
  AlgebraElement out;
  for (const auto& [k, v] : x.terms()) {
    const auto& m = star_matrix(k.length);
    for (std::size_t c = 0; c < m.size(); ++c) {
      if (std::abs(m[c][k.left]) < kPruneThreshold) continue;
      for (std::size_t d = 0; d < m.size(); ++d) {
        if (std::abs(m[d][k.right]) < kPruneThreshold) continue;
        out.add(BasisKey{k.length, c, d}, std::conj(v) * m[c][k.left] * m[d][k.right]);
      }
    }
  }
  out.prune();
  return out;
}

TensorSquare WeakHopfAlgebra::coproduct(const AlgebraElement& x) const {
  TensorSquare out;
  for (const auto& [k, v] : x.terms()) {
    const auto d = slice(k.length).dim();
    for (std::size_t c = 0; c < d; ++c) {
      out.add({BasisKey{k.length, k.left, c}, BasisKey{k.length, c, k.right}}, v);
    }
  }
  out.prune();
  return out;
}

TensorSquare WeakHopfAlgebra::multiply_tensor_square(const TensorSquare& u, const TensorSquare& v) const {
  TensorSquare out;
  for (const auto& [ku, cu] : u.terms()) {
    for (const auto& [kv, cv] : v.terms()) {
      const auto& first = basis_product(ku.first, kv.first);
      if (first.empty()) continue;
      const auto& second = basis_product(ku.second, kv.second);
      if (second.empty()) continue;
      out.add_product(first, second, cu * cv);
    }
  }
  out.prune();
  return out;
}

Scalar WeakHopfAlgebra::counit(const AlgebraElement& x) const {
  Scalar s{};
  for (const auto& [k, v] : x.terms()) {
    if (k.left == k.right) s += v;
  }
  return s;
}

double WeakHopfAlgebra::antipode_factor(const BasisKey& k, AntipodeFactor f) const {
  if (f == AntipodeFactor::unit) return 1.0;
  const auto& s = slice(k.length);
  const auto& xi = s[k.left];
  const auto& omega = s[k.right];
  const auto& sp = *space_;
  return std::sqrt(sp.mu(omega.source) * sp.mu(xi.range) / (sp.mu(omega.range) * sp.mu(xi.source)));
}

AlgebraElement WeakHopfAlgebra::antipode(const AlgebraElement& x, AntipodeFactor f) const {
  AlgebraElement out;
  for (const auto& [k, v] : x.terms()) {
    const auto& m = star_matrix(k.length);
    const double factor = antipode_factor(k, f);
    // S(xi (x) w) = F w* (x) xi*
    for (std::size_t c = 0; c < m.size(); ++c) {
      if (std::abs(m[c][k.right]) < kPruneThreshold) continue;
      for (std::size_t d = 0; d < m.size(); ++d) {
        if (std::abs(m[d][k.left]) < kPruneThreshold) continue;
        out.add(BasisKey{k.length, c, d}, v * factor * m[c][k.right] * m[d][k.left]);
      }
    }
  }
  out.prune();
  return out;
}

std::vector<BasisKey> WeakHopfAlgebra::basis_elements(int max_length) const {
  std::vector<BasisKey> out;
  for (int n = 0; n <= max_length; ++n) {
    const auto d = slice(n).dim();
    for (std::size_t a = 0; a < d; ++a) {
      for (std::size_t b = 0; b < d; ++b) out.push_back(BasisKey{n, a, b});
    }
  }
  return out;
}

ElementaryTensor WeakHopfAlgebra::to_elementary(const AlgebraElement& x) const {
  ElementaryTensor out;
  for (const auto& [k, v] : x.terms()) {
    const auto& s = slice(k.length);
    for (const auto& [p, a] : s[k.left].vector.terms()) {
      for (const auto& [q, b] : s[k.right].vector.terms()) out[{p, q}] += v * a * b;
    }
  }
  std::erase_if(out, [](const auto& kv) { return std::abs(kv.second) < kPruneThreshold; });
  return out;
}

}  // namespace pathhopf
