#include "pathhopf/path.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>

#include "pathhopf/error.hpp"

namespace pathhopf {

Path parse_path(std::string_view literal) {
  std::vector<Vertex> out;
  auto bad = [&] { return InputError("bad path literal \"" + std::string(literal) + "\""); };
  if (literal.empty()) throw bad();
  const bool dashed = literal.find('-') != std::string_view::npos;
  if (!dashed) {
    for (char c : literal) {
      if (!std::isdigit(static_cast<unsigned char>(c))) throw bad();
      out.push_back(static_cast<Vertex>(c - '0'));
    }
    return Path(std::move(out));
  }
  std::size_t start = 0;
  while (start <= literal.size()) {
    auto stop = literal.find('-', start);
    if (stop == std::string_view::npos) stop = literal.size();
    auto token = literal.substr(start, stop - start);
    if (token.empty() || token.size() > 5) throw bad();
    unsigned value = 0;
    for (char c : token) {
      if (!std::isdigit(static_cast<unsigned char>(c))) throw bad();
      value = value * 10 + static_cast<unsigned>(c - '0');
    }
    if (value > 0xFFFF) throw bad();
    out.push_back(static_cast<Vertex>(value));
    start = stop + 1;
  }
  return Path(std::move(out));
}

std::string to_string(const Path& p) {
  std::string s;
  for (std::size_t k = 0; k < p.vertices.size(); ++k) {
    if (k) s += '-';
    s += std::to_string(p.vertices[k]);
  }
  return s;
}

// --- PathVector -------------------------------------------------------------

PathVector::PathVector(const Path& p, Scalar c) : length_(p.length()) {
  if (std::abs(c) >= kPruneThreshold) terms_.emplace(p, c);
}

Scalar PathVector::coefficient(const Path& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? Scalar{} : it->second;
}

void PathVector::add(const Path& p, Scalar c) {
  if (p.length() != length_) {
    if (!terms_.empty()) throw std::invalid_argument("path length does not match vector length");
    length_ = p.length();
  }
  auto [it, inserted] = terms_.try_emplace(p, c);
  if (!inserted) it->second += c;
}

void PathVector::add(const PathVector& other, Scalar c) {
  if (other.terms_.empty()) return;
  if (terms_.empty()) length_ = other.length_;
  if (other.length_ != length_) throw std::invalid_argument("adding path vectors of different lengths");
  for (const auto& [p, v] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(p, c * v);
    if (!inserted) it->second += c * v;
  }
  prune();
}

void PathVector::prune(double threshold) {
  std::erase_if(terms_, [threshold](const auto& kv) { return std::abs(kv.second) < threshold; });
}

PathVector& PathVector::operator+=(const PathVector& o) {
  add(o, 1.0);
  return *this;
}

PathVector& PathVector::operator-=(const PathVector& o) {
  add(o, -1.0);
  return *this;
}

PathVector& PathVector::operator*=(Scalar c) {
  for (auto& [p, v] : terms_) v *= c;
  prune();
  return *this;
}

double PathVector::norm() const {
  double s = 0.0;
  for (const auto& [p, v] : terms_) s += std::norm(v);
  return std::sqrt(s);
}

double PathVector::max_abs() const {
  double m = 0.0;
  for (const auto& [p, v] : terms_) m = std::max(m, std::abs(v));
  return m;
}

PathVector operator+(PathVector a, const PathVector& b) { return a += b; }
PathVector operator-(PathVector a, const PathVector& b) { return a -= b; }
PathVector operator*(Scalar c, PathVector a) { return a *= c; }

double distance(const PathVector& a, const PathVector& b) {
  double m = 0.0;
  for (const auto& [p, v] : a.terms()) m = std::max(m, std::abs(v - b.coefficient(p)));
  for (const auto& [p, v] : b.terms()) {
    if (!a.terms().contains(p)) m = std::max(m, std::abs(v));
  }
  return m;
}

// --- OperatorWord -----------------------------------------------------------

OperatorWord::OperatorWord(std::vector<int> indices) : indices_(std::move(indices)) {
  for (std::size_t k = 0; k < indices_.size(); ++k) {
    if (indices_[k] < 0 || (k > 0 && indices_[k] <= indices_[k - 1])) {
      throw std::invalid_argument("operator word indices must be non-negative and strictly increasing");
    }
  }
}

OperatorWord OperatorWord::prepend(int k) const {
  // c+_k moves right past every c+_j with j >= k, raising each such j by two.
  std::vector<int> out;
  out.reserve(indices_.size() + 1);
  for (int i : indices_) {
    if (i < k) out.push_back(i);
  }
  out.push_back(k);
  for (int i : indices_) {
    if (i >= k) out.push_back(i + 2);
  }
  return OperatorWord(std::move(out));
}

std::string to_string(const OperatorWord& w) {
  std::string s = "(";
  for (std::size_t k = 0; k < w.indices().size(); ++k) {
    if (k) s += ",";
    s += std::to_string(w.indices()[k]);
  }
  return s + ")";
}

// --- PathSpace --------------------------------------------------------------

PathSpace::PathSpace(Graph g) : graph_(std::move(g)), spectrum_(perron_frobenius(graph_)) {}

PathSpace::PathSpace(Graph g, Spectrum s) : graph_(std::move(g)), spectrum_(std::move(s)) {
  if (spectrum_.mu.size() != graph_.vertex_count()) {
    throw std::invalid_argument("spectrum does not match the graph");
  }
}

bool PathSpace::is_admissible(const Path& p) const {
  if (p.vertices.empty()) return false;
  for (Vertex v : p.vertices) {
    if (v >= graph_.vertex_count()) return false;
  }
  for (std::size_t k = 1; k < p.vertices.size(); ++k) {
    if (!graph_.adjacent(p.vertices[k - 1], p.vertices[k])) return false;
  }
  return true;
}

// --- operators --------------------------------------------------------------

std::vector<Path> enumerate_paths(const Graph& g, int n, std::optional<Vertex> source, std::optional<Vertex> range) {
  std::vector<Path> out;
  if (n < 0) return out;
  std::vector<Vertex> stack;
  auto extend = [&](auto&& self) -> void {
    if (static_cast<int>(stack.size()) == n + 1) {
      if (!range || stack.back() == *range) out.emplace_back(stack);
      return;
    }
    for (Vertex w : g.neighbors(stack.back())) {
      stack.push_back(w);
      self(self);
      stack.pop_back();
    }
  };
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (source && v != *source) continue;
    stack.assign(1, static_cast<Vertex>(v));
    extend(extend);
  }
  return out;
}

Scalar inner_product(const PathVector& x, const PathVector& y) {
  if (x.length() != y.length() || x.empty() || y.empty()) return {};
  const auto& small = x.size() <= y.size() ? x.terms() : y.terms();
  const auto& large = x.size() <= y.size() ? y.terms() : x.terms();
  const bool x_small = x.size() <= y.size();
  Scalar s{};
  for (const auto& [p, v] : small) {
    auto it = large.find(p);
    if (it == large.end()) continue;
    s += x_small ? std::conj(v) * it->second : std::conj(it->second) * v;
  }
  return s;
}

PathVector concat(const PathVector& x, const PathVector& y) {
  PathVector out(x.length() + y.length());
  for (const auto& [p, a] : x.terms()) {
    for (const auto& [q, b] : y.terms()) {
      if (p.range() != q.source()) continue;
      std::vector<Vertex> joined = p.vertices;
      joined.insert(joined.end(), q.vertices.begin() + 1, q.vertices.end());
      out.add(Path(std::move(joined)), a * b);
    }
  }
  out.prune();
  return out;
}

PathVector star(const PathVector& x) {
  PathVector out(x.length());
  for (const auto& [p, v] : x.terms()) {
    std::vector<Vertex> reversed(p.vertices.rbegin(), p.vertices.rend());
    out.add(Path(std::move(reversed)), std::conj(v));
  }
  return out;
}

PathVector annihilate(const PathSpace& space, int i, const PathVector& x) {
  const int n = x.length();
  PathVector out(n - 2);
  if (i < 0 || i > n - 2) return out;
  for (const auto& [p, v] : x.terms()) {
    const auto& vs = p.vertices;
    if (vs[i] != vs[i + 2]) continue;
    std::vector<Vertex> shorter;
    shorter.reserve(vs.size() - 2);
    shorter.insert(shorter.end(), vs.begin(), vs.begin() + i + 1);
    shorter.insert(shorter.end(), vs.begin() + i + 3, vs.end());
    out.add(Path(std::move(shorter)), v * std::sqrt(space.mu(vs[i + 1]) / space.mu(vs[i])));
  }
  out.prune();
  return out;
}

PathVector create(const PathSpace& space, int i, const PathVector& x) {
  const int n = x.length();
  PathVector out(n + 2);
  if (i < 0 || i > n) return out;
  for (const auto& [p, v] : x.terms()) {
    const auto& vs = p.vertices;
    const Vertex at = vs[i];
    for (Vertex w : space.graph().neighbors(at)) {
      std::vector<Vertex> longer;
      longer.reserve(vs.size() + 2);
      longer.insert(longer.end(), vs.begin(), vs.begin() + i + 1);
      longer.push_back(w);
      longer.push_back(at);
      longer.insert(longer.end(), vs.begin() + i + 1, vs.end());
      out.add(Path(std::move(longer)), v * std::sqrt(space.mu(w) / space.mu(at)));
    }
  }
  out.prune();
  return out;
}

PathVector tlj(const PathSpace& space, int i, const PathVector& x) {
  auto out = create(space, i, annihilate(space, i, x));
  out *= 1.0 / space.beta();
  return out;
}

PathVector apply_word(const PathSpace& space, const OperatorWord& w, const PathVector& x) {
  PathVector out = x;
  for (int i : w.indices()) out = create(space, i, out);
  return out;
}

PathVector apply_word_adjoint(const PathSpace& space, const OperatorWord& w, const PathVector& x) {
  PathVector out = x;
  for (auto it = w.indices().rbegin(); it != w.indices().rend(); ++it) out = annihilate(space, *it, out);
  return out;
}

}  // namespace pathhopf
