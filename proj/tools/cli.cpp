#include "cli.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pathhopf/error.hpp"
#include "pathhopf/graph.hpp"
#include "pathhopf/serialize.hpp"

namespace pathhopf::cli {

using nlohmann::json;

namespace {

struct Options {
  std::string graph;
  double tol = kDefaultTolerance;
  int cutoff = kDefaultCutoff;
  std::uint64_t seed = 1;
  int samples = 100;
  std::string format = "text";
  std::string out_file;

  int length = 0;
  int max = 3;
  int max_length = -1;
  std::string path;
  std::string left;
  std::string right;
  std::string a;
  std::string b;
  std::string antipode_factor = "perron-frobenius";

  bool json() const { return format == "json"; }
};

constexpr const char* kLiteralHelp =
    "Path literals are vertex indices joined by '-' (\"0-1-0\"); on graphs with at most ten\n"
    "vertices the dashes may be dropped (\"010\"). An algebra literal \"(p|q)\" is the tensor\n"
    "of elementary paths p and q and is always sent through the projector P, so it lands in\n"
    "the essential algebra; terms may be scaled and summed: \"0.5*(0-1|1-2) + (1|1)\".";

// rounds to the printed precision so JSON output matches the text output
double rounded(double x) {
  const double r = std::round(x * 1e9) / 1e9;
  return r == 0.0 ? 0.0 : r;
}

json number_json(double x) { return rounded(x); }
json scalar_json(Scalar c) { return json::array({rounded(c.real()), rounded(c.imag())}); }

std::string format_scientific(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9e", x);
  return buf;
}

std::string format_vector(const PathVector& v) {
  if (v.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [p, c] : v.terms()) {
    if (!first) s += " + ";
    s += format_scalar(c) + " (" + to_string(p) + ")";
    first = false;
  }
  return s;
}

json vector_json(const PathVector& v) {
  json out = json::array();
  for (const auto& [p, c] : v.terms()) out.push_back({{"path", to_string(p)}, {"coeff", scalar_json(c)}});
  return out;
}

Path checked_path(const PathSpace& space, const std::string& literal) {
  Path p;
  try {
    p = parse_path(literal);
  } catch (const std::exception& e) {
    throw InputError("bad path literal \"" + literal + "\": " + e.what());
  }
  if (!space.is_admissible(p)) {
    throw InputError("\"" + literal + "\" is not a path of graph " + space.graph().name());
  }
  return p;
}

void check_length(const Options& o, int n, const char* what) {
  if (n < 0) throw InputError(std::string(what) + " must be non-negative");
  if (n > o.cutoff) {
    throw CutoffError(std::string(what) + " " + std::to_string(n) + " exceeds the cutoff " + std::to_string(o.cutoff));
  }
}

std::shared_ptr<const PathSpace> load_space(const Options& o) {
  return std::make_shared<const PathSpace>(load_graph(o.graph));
}

void write_element(std::ostream& out, const WeakHopfAlgebra& alg, const AlgebraElement& x) {
  const auto el = alg.to_elementary(x);
  if (el.empty()) {
    out << "  0\n";
    return;
  }
  for (const auto& [k, c] : el) {
    out << "  " << format_scalar(c) << " (" << to_string(k.first) << "|" << to_string(k.second) << ")\n";
  }
}

json element_json(const WeakHopfAlgebra& alg, const AlgebraElement& x) {
  json el = json::array();
  for (const auto& [k, c] : alg.to_elementary(x)) {
    el.push_back({{"left", to_string(k.first)}, {"right", to_string(k.second)}, {"coeff", scalar_json(c)}});
  }
  json basis = json::array();
  for (const auto& [k, c] : x.terms()) {
    basis.push_back({{"length", k.length}, {"left", k.left}, {"right", k.right}, {"coeff", scalar_json(c)}});
  }
  return {{"elementary", el}, {"basis", basis}};
}

// --- subcommands ------------------------------------------------------------

int cmd_spectrum(const Options& o, std::ostream& out) {
  const auto space = load_space(o);
  const auto& g = space->graph();
  const auto& s = space->spectrum();
  const auto cox = coxeter_info(s, o.tol);
  if (o.json()) {
    json mu = json::object();
    for (std::size_t v = 0; v < g.vertex_count(); ++v) mu[g.vertices()[v]] = number_json(s.mu[v]);
    json j = {{"graph", g.name()}, {"beta", number_json(s.beta)}, {"mu", mu},
              {"residual", format_scientific(s.residual)}, {"iterations", s.iterations}};
    if (cox) {
      j["coxeter_number"] = cox->coxeter_number;
      j["max_essential_length"] = cox->max_essential_length;
    } else {
      j["coxeter_number"] = nullptr;
      j["coxeter_diagnostic"] = coxeter_diagnostic(s, o.tol);
    }
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << "graph: " << g.name() << "\n";
  out << "beta: " << format_number(s.beta) << "\n";
  out << "mu:";
  for (std::size_t v = 0; v < g.vertex_count(); ++v) out << " " << g.vertices()[v] << "=" << format_number(s.mu[v]);
  out << "\n";
  out << "residual: " << format_scientific(s.residual) << "\n";
  out << "iterations: " << s.iterations << "\n";
  if (cox) {
    out << "coxeter number: " << cox->coxeter_number << "\n";
    out << "max essential length: " << cox->max_essential_length << "\n";
  } else {
    out << "coxeter number: none (" << coxeter_diagnostic(s, o.tol) << ")\n";
  }
  return kOk;
}

int cmd_dims(const Options& o, std::ostream& out) {
  check_length(o, o.max, "--max");
  const EssentialBasis basis(load_space(o));
  std::vector<std::size_t> dims;
  std::size_t total = 0;
  for (int n = 0; n <= o.max; ++n) {
    dims.push_back(basis.dim(n));
    total += dims.back();
  }
  if (o.json()) {
    out << json{{"graph", basis.space().graph().name()}, {"dims", dims}, {"total", total}}.dump(2) << "\n";
    return kOk;
  }
  out << "n  dim E_n\n";
  for (std::size_t n = 0; n < dims.size(); ++n) out << n << "  " << dims[n] << "\n";
  out << "total: " << total << "\n";
  return kOk;
}

int cmd_essentials(const Options& o, std::ostream& out) {
  check_length(o, o.length, "--length");
  const auto space = load_space(o);
  const auto slice = essential_basis(*space, o.length);
  if (o.json()) {
    json vs = json::array();
    for (const auto& b : slice.vectors()) {
      vs.push_back({{"source", b.source}, {"range", b.range}, {"terms", vector_json(b.vector)}});
    }
    out << json{{"graph", space->graph().name()}, {"length", o.length}, {"dim", slice.dim()}, {"vectors", vs}}.dump(2)
        << "\n";
    return kOk;
  }
  out << "length " << o.length << ": dim " << slice.dim() << "\n";
  for (std::size_t a = 0; a < slice.dim(); ++a) {
    const auto& b = slice[a];
    out << "xi[" << a << "] " << b.source << "->" << b.range << ": " << format_vector(b.vector) << "\n";
  }
  return kOk;
}

int cmd_decompose(const Options& o, std::ostream& out) {
  const auto space = load_space(o);
  const Path p = checked_path(*space, o.path);
  check_length(o, p.length(), "path length");
  const PathVector x(p);
  const auto d = decompose(*space, x, o.cutoff);
  const double error = distance(recompose(*space, d), x);
  if (o.json()) {
    json terms = json::array();
    for (const auto& t : d.terms) {
      terms.push_back({{"word", t.word.indices()}, {"essential", vector_json(t.essential)}});
    }
    out << json{{"path", to_string(p)}, {"terms", terms}, {"recompose_error", format_scientific(error)}}.dump(2)
        << "\n";
    return kOk;
  }
  out << "path: " << to_string(p) << "\n";
  for (const auto& t : d.terms) {
    out << "word " << to_string(t.word) << ": " << format_vector(t.essential) << "\n";
  }
  out << "recompose error: " << format_scientific(error) << "\n";
  return kOk;
}

int cmd_project(const Options& o, std::ostream& out) {
  const WeakHopfAlgebra alg(load_space(o), o.cutoff);
  const Path l = checked_path(alg.space(), o.left);
  const Path r = checked_path(alg.space(), o.right);
  if (l.length() != r.length()) throw InputError("--left and --right must have the same length");
  check_length(o, l.length(), "path length");
  const auto x = alg.project(PathVector(l), PathVector(r));
  if (o.json()) {
    json j = element_json(alg, x);
    j["left"] = to_string(l);
    j["right"] = to_string(r);
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << "P(" << to_string(l) << " (x) " << to_string(r) << ") =\n";
  write_element(out, alg, x);
  return kOk;
}

int cmd_multiply(const Options& o, std::ostream& out) {
  const WeakHopfAlgebra alg(load_space(o), o.cutoff);
  const auto x = parse_element(alg, o.a);
  const auto y = parse_element(alg, o.b);
  const auto z = alg.multiply(x, y);
  if (o.json()) {
    out << json{{"a", element_json(alg, x)}, {"b", element_json(alg, y)}, {"product", element_json(alg, z)}}.dump(2)
        << "\n";
    return kOk;
  }
  out << "a =\n";
  write_element(out, alg, x);
  out << "b =\n";
  write_element(out, alg, y);
  out << "a.b =\n";
  write_element(out, alg, z);
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out, bool tol_given) {
  const WeakHopfAlgebra alg(load_space(o), o.cutoff);
  VerifyOptions vo;
  vo.max_length = o.max_length < 0 ? 2 : o.max_length;
  vo.samples = o.samples;
  vo.seed = o.seed;
  if (tol_given) vo.tolerance = o.tol;
  vo.antipode_factor = o.antipode_factor == "unit" ? AntipodeFactor::unit : AntipodeFactor::perron_frobenius;
  const auto report = verify_axioms(alg, vo);
  out << format_report(report, o.json() ? Format::json : Format::text);
  return report.passed() ? kOk : kAxiomViolation;
}

int cmd_export(const Options& o, std::ostream& out) {
  const WeakHopfAlgebra alg(load_space(o), o.cutoff);
  const auto& g = alg.space().graph();
  const auto& s = alg.space().spectrum();
  const auto cox = coxeter_info(s, o.tol);
  int max_length = o.max_length;
  if (max_length < 0) max_length = cox ? cox->max_essential_length : 1;
  check_length(o, 2 * max_length, "product length");

  json edges = json::array();
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    for (std::size_t k = i + 1; k < g.vertex_count(); ++k) {
      if (g.adjacency()[i][k]) edges.push_back({i, k});
    }
  }
  json mu = json::array();
  for (double m : s.mu) mu.push_back(number_json(m));

  json bases = json::array();
  for (int n = 0; n <= max_length; ++n) {
    json vs = json::array();
    for (const auto& b : alg.slice(n).vectors()) {
      vs.push_back({{"source", b.source}, {"range", b.range}, {"terms", vector_json(b.vector)}});
    }
    bases.push_back({{"length", n}, {"vectors", vs}});
  }

  json products = json::array();
  const auto keys = alg.basis_elements(max_length);
  auto key_json = [](const BasisKey& k) { return json::array({k.length, k.left, k.right}); };
  for (const auto& ka : keys) {
    for (const auto& kb : keys) {
      const auto& p = alg.basis_product(ka, kb);
      if (p.empty()) continue;
      json terms = json::array();
      for (const auto& [k, c] : p.terms()) terms.push_back({{"key", key_json(k)}, {"coeff", scalar_json(c)}});
      products.push_back({{"a", key_json(ka)}, {"b", key_json(kb)}, {"product", terms}});
    }
  }

  json doc = {
      {"graph", {{"name", g.name()}, {"vertices", g.vertices()}, {"edges", edges}}},
      {"spectrum", {{"beta", number_json(s.beta)}, {"mu", mu}, {"residual", format_scientific(s.residual)}}},
      {"coxeter", cox ? json{{"coxeter_number", cox->coxeter_number},
                             {"max_essential_length", cox->max_essential_length}}
                      : json(nullptr)},
      {"max_length", max_length},
      {"bases", bases},
      {"identity", element_json(alg, alg.identity())["basis"]},
      {"products", products},
  };
  out << doc.dump(2) << "\n";
  return kOk;
}

// --- element literals -------------------------------------------------------

class LiteralParser {
 public:
  LiteralParser(const WeakHopfAlgebra& alg, std::string text) : alg_(alg), text_(std::move(text)) {}

  AlgebraElement parse() {
    AlgebraElement out;
    skip_space();
    if (pos_ == text_.size()) fail("empty literal");
    while (true) {
      out += term();
      skip_space();
      if (pos_ == text_.size()) break;
      if (text_[pos_] != '+') fail("expected '+'");
      ++pos_;
    }
    return out;
  }

 private:
  AlgebraElement term() {
    skip_space();
    double coeff = 1.0;
    if (pos_ < text_.size() && text_[pos_] != '(') {
      const auto star = text_.find('*', pos_);
      if (star == std::string::npos) fail("expected '(' or a coefficient followed by '*'");
      const std::string number = text_.substr(pos_, star - pos_);
      std::size_t used = 0;
      try {
        coeff = std::stod(number, &used);
      } catch (const std::exception&) {
        fail("bad coefficient \"" + number + "\"");
      }
      if (number.find_first_not_of(" \t", used) != std::string::npos) fail("bad coefficient \"" + number + "\"");
      pos_ = star + 1;
      skip_space();
    }
    if (pos_ >= text_.size() || text_[pos_] != '(') fail("expected '('");
    const auto bar = text_.find('|', pos_);
    const auto close = text_.find(')', pos_);
    if (bar == std::string::npos || close == std::string::npos || bar > close) fail("expected \"(p|q)\"");
    const Path l = path(text_.substr(pos_ + 1, bar - pos_ - 1));
    const Path r = path(text_.substr(bar + 1, close - bar - 1));
    pos_ = close + 1;
    if (l.length() != r.length()) fail("the two paths of a tensor must have the same length");
    if (l.length() > alg_.cutoff()) throw CutoffError("literal path length exceeds the cutoff");
    auto x = alg_.project(PathVector(l), PathVector(r));
    x *= coeff;
    return x;
  }

  Path path(std::string s) {
    std::erase_if(s, [](unsigned char ch) { return std::isspace(ch); });
    return checked_path(alg_.space(), s);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw InputError("bad algebra literal \"" + text_ + "\" at position " + std::to_string(pos_) + ": " + why);
  }

  const WeakHopfAlgebra& alg_;
  std::string text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string format_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9f", rounded(x));
  return buf;
}

std::string format_scalar(Scalar c) {
  if (rounded(c.imag()) == 0.0) return format_number(c.real());
  char buf[96];
  std::snprintf(buf, sizeof buf, "(%.9f%+.9fi)", rounded(c.real()), rounded(c.imag()));
  return buf;
}

AlgebraElement parse_element(const WeakHopfAlgebra& alg, const std::string& literal) {
  return LiteralParser(alg, literal).parse();
}

std::string format_report(const VerificationReport& report, Format format) {
  if (format == Format::json) {
    json axioms = json::array();
    for (const auto& a : report.axioms) {
      axioms.push_back({{"name", a.name},
                        {"max_residual", format_scientific(a.max_residual)},
                        {"tolerance", format_scientific(a.tolerance)},
                        {"checks", a.checks},
                        {"passed", a.passed()}});
    }
    return json{{"graph", report.graph},
                {"max_length", report.max_length},
                {"samples", report.samples},
                {"seed", report.seed},
                {"passed", report.passed()},
                {"axioms", axioms}}
               .dump(2) +
           "\n";
  }
  std::ostringstream out;
  out << "graph: " << report.graph << "  max_length: " << report.max_length << "  samples: " << report.samples
      << "  seed: " << report.seed << "\n";
  for (const auto& a : report.axioms) {
    char line[256];
    std::snprintf(line, sizeof line, "%-28s residual %s  tol %s  checks %zu  %s\n", a.name.c_str(),
                  format_scientific(a.max_residual).c_str(), format_scientific(a.tolerance).c_str(), a.checks,
                  a.passed() ? "PASS" : "FAIL");
    out << line;
  }
  return out.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Essential paths on graphs and their weak *-Hopf algebra.", "pathhopf"};
  app.footer(kLiteralHelp);
  app.require_subcommand(1);

  CLI::Option* tol_opt = app.add_option("--tol", o.tol, "tolerance (Coxeter detection; verify uses 1e-8 unless set)")
                             ->check(CLI::PositiveNumber);
  app.add_option("--cutoff", o.cutoff, "maximum path length")
      ->envname("PATHHOPF_CUTOFF")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--seed", o.seed, "seed of the random samples");
  app.add_option("--samples", o.samples, "number of random samples")->check(CLI::NonNegativeNumber);
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", o.out_file, "write the output to FILE");

  auto sub = [&](const char* name, const char* description) {
    CLI::App* s = app.add_subcommand(name, description);
    s->fallthrough();
    s->add_option("graph", o.graph, "graph JSON file")->required();
    return s;
  };
  auto* spectrum = sub("spectrum", "Perron-Frobenius data and Coxeter number");
  auto* essentials = sub("essentials", "orthonormal basis of essential paths of one length");
  essentials->add_option("--length", o.length, "path length")->required();
  auto* dims = sub("dims", "dimensions of the essential spaces");
  dims->add_option("--max", o.max, "largest length")->capture_default_str();
  auto* decompose_cmd = sub("decompose", "decompose a path into creation words on essential paths");
  decompose_cmd->add_option("--path", o.path, "path literal")->required();
  auto* project_cmd = sub("project", "apply the projector P to a tensor of two paths");
  project_cmd->add_option("--left", o.left, "left path literal")->required();
  project_cmd->add_option("--right", o.right, "right path literal")->required();
  auto* multiply = sub("multiply", "product of two algebra literals");
  multiply->add_option("--a", o.a, "left factor, e.g. \"(2-1|1-2)\"")->required();
  multiply->add_option("--b", o.b, "right factor")->required();
  auto* verify = sub("verify", "check the weak *-Hopf axioms (exit 2 on a violation)");
  verify->add_option("--max-length", o.max_length, "largest length of the basis elements (default 2)");
  verify->add_option("--antipode-factor", o.antipode_factor, "perron-frobenius, or unit as a negative control")
      ->check(CLI::IsMember({"perron-frobenius", "unit"}));
  auto* export_cmd = sub("export", "JSON dump of spectrum, bases, identity and product table");
  export_cmd->add_option("--max-length", o.max_length, "largest basis length (default: max essential length, or 1)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  std::ostringstream buffer;
  int code = kOk;
  try {
    if (spectrum->parsed()) code = cmd_spectrum(o, buffer);
    else if (essentials->parsed()) code = cmd_essentials(o, buffer);
    else if (dims->parsed()) code = cmd_dims(o, buffer);
    else if (decompose_cmd->parsed()) code = cmd_decompose(o, buffer);
    else if (project_cmd->parsed()) code = cmd_project(o, buffer);
    else if (multiply->parsed()) code = cmd_multiply(o, buffer);
    else if (verify->parsed()) code = cmd_verify(o, buffer, tol_opt->count() > 0);
    else if (export_cmd->parsed()) code = cmd_export(o, buffer);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  if (o.out_file.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(o.out_file);
    if (!file || !(file << buffer.str())) {
      err << "error: cannot write " << o.out_file << "\n";
      return kInputError;
    }
  }
  return code;
}

}  // namespace pathhopf::cli
