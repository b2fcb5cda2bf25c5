#include "pathhopf/serialize.hpp"

#include <json.hpp>

#include "pathhopf/error.hpp"

namespace pathhopf {

using nlohmann::json;

namespace {

json scalar_json(Scalar c) { return json::array({c.real(), c.imag()}); }

json vector_json(const PathVector& v) {
  json out = json::array();
  for (const auto& [p, c] : v.terms()) out.push_back({{"path", to_string(p)}, {"coeff", scalar_json(c)}});
  return out;
}

Scalar read_scalar(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw InputError("coefficient must be a [re, im] pair");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

PathVector read_vector(const PathSpace& space, const json& j, int length) {
  if (!j.is_array()) throw InputError("tensor factor must be a list of {path, coeff}");
  PathVector v;
  for (const auto& t : j) {
    if (!t.is_object() || !t.contains("path") || !t.contains("coeff") || !t["path"].is_string()) {
      throw InputError("tensor factor entries need \"path\" and \"coeff\"");
    }
    Path p;
    try {
      p = parse_path(t["path"].get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw InputError(std::string("bad path literal: ") + e.what());
    }
    if (!space.is_admissible(p)) throw InputError("path " + to_string(p) + " is not a path of the graph");
    if (p.length() != length) throw InputError("path " + to_string(p) + " does not have the declared length");
    v.add(p, read_scalar(t["coeff"]));
  }
  return v;
}

}  // namespace

std::string element_to_json(const WeakHopfAlgebra& alg, const AlgebraElement& x, int indent) {
  json out = json::array();
  for (const auto& [k, c] : x.terms()) {
    const auto& s = alg.slice(k.length);
    out.push_back({{"length", k.length},
                   {"left", vector_json(s[k.left].vector)},
                   {"right", vector_json(s[k.right].vector)},
                   {"coeff", scalar_json(c)}});
  }
  return out.dump(indent);
}

AlgebraElement element_from_json(const WeakHopfAlgebra& alg, const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_array()) throw InputError("algebra element must be a JSON list");
  AlgebraElement out;
  for (const auto& t : doc) {
    if (!t.is_object() || !t.contains("length") || !t["length"].is_number_integer()) {
      throw InputError("term needs an integer \"length\"");
    }
    const int n = t["length"].get<int>();
    if (n < 0) throw InputError("negative length");
    const auto left = read_vector(alg.space(), t.value("left", json::array()), n);
    const auto right = read_vector(alg.space(), t.value("right", json::array()), n);
    out.add(alg.element(left, right), t.contains("coeff") ? read_scalar(t["coeff"]) : Scalar{1.0});
  }
  out.prune();
  return out;
}

}  // namespace pathhopf
