#include "pathhopf/graph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <queue>
#include <set>
#include <sstream>

#include <json.hpp>

#include "pathhopf/error.hpp"

namespace pathhopf {

Graph::Graph(std::string name, std::vector<std::string> vertices, std::vector<std::vector<int>> adjacency)
    : name_(std::move(name)), vertices_(std::move(vertices)), adjacency_(std::move(adjacency)) {
  neighbors_.resize(adjacency_.size());
  for (std::size_t i = 0; i < adjacency_.size(); ++i) {
    for (std::size_t j = 0; j < adjacency_[i].size(); ++j) {
      if (adjacency_[i][j] != 0) neighbors_[i].push_back(static_cast<Vertex>(j));
    }
  }
}

Graph Graph::from_edges(std::string name, std::vector<std::string> vertices,
                        const std::vector<std::pair<int, int>>& edges) {
  const auto n = vertices.size();
  std::vector<std::vector<int>> adj(n, std::vector<int>(n, 0));
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= n || static_cast<std::size_t>(b) >= n) {
      throw InputError("edge [" + std::to_string(a) + "," + std::to_string(b) + "] references a vertex out of range");
    }
    adj[a][b] = 1;
    adj[b][a] = 1;
  }
  return Graph(std::move(name), std::move(vertices), std::move(adj));
}

Graph parse_graph(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed graph document: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges")) {
    throw InputError("graph document must be an object with \"vertices\" and \"edges\"");
  }
  std::string name = doc.value("name", std::string{});
  std::vector<std::string> vertices;
  std::vector<std::pair<int, int>> edges;
  try {
    for (const auto& v : doc.at("vertices")) vertices.push_back(v.get<std::string>());
    for (const auto& e : doc.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw InputError("every edge must be a pair of vertex indices");
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed graph document: ") + e.what());
  }
  std::set<std::string> seen;
  for (const auto& v : vertices) {
    if (!seen.insert(v).second) throw InputError("duplicate vertex label \"" + v + "\"");
  }
  if (vertices.size() > 0xFFFF) throw InputError("too many vertices");

  Graph g = Graph::from_edges(std::move(name), std::move(vertices), edges);
  auto report = validate(g);
  if (!report.ok()) {
    std::string msg = "invalid graph:";
    for (const auto& v : report.violations) msg += " " + v + ";";
    throw ValidationError(msg);
  }
  return g;
}

Graph load_graph(const std::string& file_path) {
  std::ifstream in(file_path);
  if (!in) throw InputError("cannot open graph file " + file_path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

ValidationReport validate(const Graph& g) {
  ValidationReport report;
  const auto& m = g.adjacency();
  const auto n = g.vertex_count();
  if (n == 0) {
    report.violations.emplace_back("graph has no vertices");
    return report;
  }
  bool shape_ok = m.size() == n && std::all_of(m.begin(), m.end(), [n](const auto& row) { return row.size() == n; });
  if (!shape_ok) {
    report.violations.emplace_back("adjacency is not square of vertex-count size");
    return report;
  }
  bool binary = true, symmetric = true, loopless = true, any_edge = false;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (m[i][j] != 0 && m[i][j] != 1) binary = false;
      if (m[i][j] != m[j][i]) symmetric = false;
      if (m[i][j] != 0) any_edge = true;
    }
    if (m[i][i] != 0) loopless = false;
  }
  if (!binary) report.violations.emplace_back("adjacency entries are not 0/1");
  if (!symmetric) report.violations.emplace_back("adjacency is not symmetric");
  if (!loopless) report.violations.emplace_back("adjacency has a nonzero diagonal (loops)");
  if (!any_edge) report.violations.emplace_back("graph has no edges (degenerate)");

  // breadth-first reachability from vertex 0, following edges in either direction
  std::vector<bool> reached(n, false);
  std::queue<std::size_t> frontier;
  reached[0] = true;
  frontier.push(0);
  while (!frontier.empty()) {
    auto v = frontier.front();
    frontier.pop();
    for (std::size_t w = 0; w < n; ++w) {
      if ((m[v][w] != 0 || m[w][v] != 0) && !reached[w]) {
        reached[w] = true;
        frontier.push(w);
      }
    }
  }
  if (std::find(reached.begin(), reached.end(), false) != reached.end()) {
    report.violations.emplace_back("graph is disconnected");
  }
  return report;
}

namespace {

std::vector<double> multiply_adjacency(const Graph& g, const std::vector<double>& x) {
  std::vector<double> y(x.size(), 0.0);
  for (std::size_t v = 0; v < x.size(); ++v) {
    for (Vertex w : g.neighbors(static_cast<Vertex>(v))) y[v] += x[w];
  }
  return y;
}

double residual_of(const Graph& g, const std::vector<double>& x, double lambda) {
  auto mx = multiply_adjacency(g, x);
  double r = 0.0;
  for (std::size_t v = 0; v < x.size(); ++v) r = std::max(r, std::abs(mx[v] - lambda * x[v]));
  return r;
}

double rayleigh(const Graph& g, const std::vector<double>& x) {
  auto mx = multiply_adjacency(g, x);
  double num = 0.0, den = 0.0;
  for (std::size_t v = 0; v < x.size(); ++v) {
    num += x[v] * mx[v];
    den += x[v] * x[v];
  }
  return num / den;
}

}  // namespace

Spectrum perron_frobenius(const Graph& g, int max_iterations) {
  const auto n = g.vertex_count();
  if (n == 0) throw ValidationError("empty graph has no Perron-Frobenius data");
  // Iterate with M + I: the shift keeps bipartite graphs (eigenvalue -beta) from oscillating.
  std::vector<double> x(n, 1.0);
  double previous = 0.0;
  int it = 0;
  for (; it < max_iterations; ++it) {
    auto y = multiply_adjacency(g, x);
    double top = 0.0;
    for (std::size_t v = 0; v < n; ++v) {
      y[v] += x[v];
      top = std::max(top, y[v]);
    }
    if (top <= 0.0) throw ConvergenceError("power iteration collapsed to zero");
    for (auto& c : y) c /= top;
    x = std::move(y);
    double rq = rayleigh(g, x);
    // the final rescaling divides by the smallest component, so demand the residual there
    const double smallest = *std::min_element(x.begin(), x.end());
    if (std::abs(rq - previous) < 1e-13 && residual_of(g, x, rq) < 1e-13 * smallest) break;
    previous = rq;
  }
  if (it == max_iterations) {
    throw ConvergenceError("power iteration did not converge within " + std::to_string(max_iterations) + " iterations");
  }
  double smallest = *std::min_element(x.begin(), x.end());
  if (smallest <= 0.0) throw ConvergenceError("Perron-Frobenius vector is not strictly positive");
  for (auto& c : x) c /= smallest;

  Spectrum s;
  s.beta = rayleigh(g, x);
  s.mu = std::move(x);
  s.residual = residual_of(g, s.mu, s.beta);
  s.iterations = it + 1;
  if (s.residual >= 1e-12) {
    throw ConvergenceError("Perron-Frobenius residual " + std::to_string(s.residual) + " exceeds 1e-12");
  }
  return s;
}

std::optional<CoxeterInfo> coxeter_info(const Spectrum& s, double tol) {
  if (s.beta >= 2.0 - tol || s.beta <= 0.0) return std::nullopt;
  const int n = static_cast<int>(std::lround(std::numbers::pi / std::acos(s.beta / 2.0)));
  if (n < 3 || std::abs(s.beta - 2.0 * std::cos(std::numbers::pi / n)) >= tol) return std::nullopt;
  return CoxeterInfo{n, n - 2};
}

std::string coxeter_diagnostic(const Spectrum& s, double tol) {
  if (coxeter_info(s, tol)) return {};
  if (s.beta >= 2.0 - tol) return "beta >= 2: essential paths of every length exist";
  std::ostringstream os;
  os.precision(12);
  os << "beta = " << s.beta << " < 2 but is not 2cos(pi/N) for an integer N (not an ADE graph)";
  return os.str();
}

}  // namespace pathhopf
