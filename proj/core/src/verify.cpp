#include "pathhopf/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <tuple>

#include "pathhopf/error.hpp"

namespace pathhopf {

bool VerificationReport::passed() const {
  return std::all_of(axioms.begin(), axioms.end(), [](const AxiomResult& r) { return r.passed(); });
}

const AxiomResult* VerificationReport::find(const std::string& name) const {
  for (const auto& r : axioms) {
    if (r.name == name) return &r;
  }
  return nullptr;
}

double uniform_symmetric(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53 * 2.0 - 1.0;
}

AlgebraElement random_element(const WeakHopfAlgebra& alg, int max_length, std::mt19937_64& rng, int terms) {
  const auto keys = alg.basis_elements(max_length);
  AlgebraElement x;
  if (keys.empty()) return x;
  for (int t = 0; t < terms; ++t) {
    const auto& k = keys[rng() % keys.size()];
    const double re = uniform_symmetric(rng);
    const double im = uniform_symmetric(rng);
    x.add(k, Scalar{re, im});
  }
  x.prune();
  return x;
}

namespace {

class Recorder {
 public:
  Recorder(std::string name, double tol) : result_{std::move(name), 0.0, tol, 0} {}

  void record(double residual) {
    // NaN must fail, so compare via the negation
    if (!(residual <= result_.max_residual)) result_.max_residual = residual;
    ++result_.checks;
  }

  AxiomResult result() const { return result_; }

 private:
  AxiomResult result_;
};

// (f (x) g) applied slotwise to a tensor square
template <typename F, typename G>
TensorSquare apply_slotwise(const TensorSquare& t, F&& f, G&& g, bool swap = false) {
  TensorSquare out;
  for (const auto& [k, v] : t.terms()) {
    const auto& first = swap ? k.second : k.first;
    const auto& second = swap ? k.first : k.second;
    out.add_product(f(AlgebraElement(first)), g(AlgebraElement(second)), v);
  }
  out.prune();
  return out;
}

}  // namespace

VerificationReport verify_axioms(const WeakHopfAlgebra& alg, const VerifyOptions& o) {
  if (o.max_length < 0) throw InputError("max_length must be non-negative");
  if (3 * o.max_length > alg.cutoff()) {
    throw CutoffError("verification at max_length " + std::to_string(o.max_length) +
                      " needs triple products up to length " + std::to_string(3 * o.max_length) +
                      ", above the cutoff " + std::to_string(alg.cutoff()));
  }

  VerificationReport report;
  report.graph = alg.space().graph().name();
  report.max_length = o.max_length;
  report.samples = o.samples;
  report.seed = o.seed;

  const double tol = o.tolerance;
  const auto keys = alg.basis_elements(o.max_length);
  std::vector<AlgebraElement> basis;
  basis.reserve(keys.size());
  for (const auto& k : keys) basis.emplace_back(k);

  const AlgebraElement one = alg.identity();
  const TensorSquare delta_one = alg.coproduct(one);
  auto S = [&](const AlgebraElement& x) { return alg.antipode(x, o.antipode_factor); };
  auto star = [&](const AlgebraElement& x) { return alg.star(x); };

  std::mt19937_64 rng(o.seed);
  std::vector<AlgebraElement> samples;
  samples.reserve(static_cast<std::size_t>(std::max(0, 3 * o.samples)));
  for (int s = 0; s < 3 * o.samples; ++s) samples.push_back(random_element(alg, o.max_length, rng));

  {
    Recorder r("product_associativity", tol);
    for (int s = 0; s < o.samples; ++s) {
      const auto& x = samples[3 * s];
      const auto& y = samples[3 * s + 1];
      const auto& z = samples[3 * s + 2];
      r.record(distance(alg.multiply(alg.multiply(x, y), z), alg.multiply(x, alg.multiply(y, z))));
    }
    report.axioms.push_back(r.result());
  }
  {
    Recorder r("unit", tol);
    for (const auto& a : basis) {
      r.record(distance(alg.multiply(one, a), a));
      r.record(distance(alg.multiply(a, one), a));
    }
    report.axioms.push_back(r.result());
  }
  {
    Recorder r("star_involution", tol);
    for (const auto& a : basis) r.record(distance(alg.star(alg.star(a)), a));
    report.axioms.push_back(r.result());
  }
  {
    Recorder r("star_antihomomorphism", tol);
    for (const auto& a : basis) {
      for (const auto& b : basis) {
        r.record(distance(alg.star(alg.multiply(a, b)), alg.multiply(alg.star(b), alg.star(a))));
      }
    }
    report.axioms.push_back(r.result());
  }
  {
    Recorder r("coproduct_multiplicativity", tol);
    std::vector<TensorSquare> deltas;
    deltas.reserve(basis.size());
    for (const auto& a : basis) deltas.push_back(alg.coproduct(a));
    for (std::size_t i = 0; i < basis.size(); ++i) {
      for (std::size_t j = 0; j < basis.size(); ++j) {
        r.record(distance(alg.coproduct(alg.multiply(basis[i], basis[j])),
                          alg.multiply_tensor_square(deltas[i], deltas[j])));
      }
    }
    report.axioms.push_back(r.result());
  }
  {
    Recorder r("coproduct_star", tol);
    for (const auto& a : basis) {
      r.record(distance(alg.coproduct(alg.star(a)), apply_slotwise(alg.coproduct(a), star, star)));
    }
    report.axioms.push_back(r.result());
  }
  {
    Recorder r("coassociativity", tol);
    for (const auto& a : basis) {
      // compare both iterated coproducts as maps over triples of matrix units
      std::map<std::tuple<BasisKey, BasisKey, BasisKey>, Scalar> lhs, rhs;
      for (const auto outer = alg.coproduct(a); const auto& [k, v] : outer.terms()) {
        for (const auto inner = alg.coproduct(AlgebraElement(k.first)); const auto& [k1, v1] : inner.terms()) {
          lhs[{k1.first, k1.second, k.second}] += v * v1;
        }
        for (const auto inner = alg.coproduct(AlgebraElement(k.second)); const auto& [k2, v2] : inner.terms()) {
          rhs[{k.first, k2.first, k2.second}] += v * v2;
        }
      }
      double m = 0.0;
      for (const auto& [k, v] : lhs) {
        auto it = rhs.find(k);
        m = std::max(m, std::abs(v - (it == rhs.end() ? Scalar{} : it->second)));
      }
      for (const auto& [k, v] : rhs) {
        if (!lhs.contains(k)) m = std::max(m, std::abs(v));
      }
      r.record(m);
    }
    report.axioms.push_back(r.result());
  }
  {
    Recorder left("counit_left", tol);
    Recorder right("counit_right", tol);
    for (const auto& a : basis) {
      AlgebraElement l, rr;
      for (const auto d = alg.coproduct(a); const auto& [k, v] : d.terms()) {
        l.add(k.second, v * alg.counit(AlgebraElement(k.first)));
        rr.add(k.first, v * alg.counit(AlgebraElement(k.second)));
      }
      l.prune();
      rr.prune();
      left.record(distance(l, a));
      right.record(distance(rr, a));
    }
    report.axioms.push_back(left.result());
    report.axioms.push_back(right.result());
  }
  {
    Recorder r("counit_product", tol);
    for (const auto& a : basis) {
      for (const auto& b : basis) {
        Scalar rhs{};
        for (const auto& [k, v] : delta_one.terms()) {
          const Scalar ea = alg.counit(alg.multiply(a, AlgebraElement(k.first)));
          if (std::abs(ea) < kPruneThreshold) continue;
          rhs += v * ea * alg.counit(alg.multiply(AlgebraElement(k.second), b));
        }
        r.record(std::abs(alg.counit(alg.multiply(a, b)) - rhs));
      }
    }
    report.axioms.push_back(r.result());
  }
  {
    Recorder r("counit_positivity", o.positivity_tolerance);
    auto check = [&](const AlgebraElement& a) {
      const Scalar e = alg.counit(alg.multiply(a, alg.star(a)));
      r.record(std::max(0.0, -e.real()) + std::abs(e.imag()));
    };
    for (const auto& a : basis) check(a);
    for (int s = 0; s < o.samples; ++s) check(samples[s]);
    report.axioms.push_back(r.result());
  }
  {
    Recorder r("antipode_antihomomorphism", tol);
    for (const auto& a : basis) {
      for (const auto& b : basis) r.record(distance(S(alg.multiply(a, b)), alg.multiply(S(b), S(a))));
    }
    report.axioms.push_back(r.result());
  }
  {
    Recorder r("antipode_star_involution", tol);
    for (const auto& a : basis) r.record(distance(S(alg.star(S(alg.star(a)))), a));
    report.axioms.push_back(r.result());
  }
  {
    Recorder r("antipode_coproduct", tol);
    for (const auto& a : basis) {
      r.record(distance(alg.coproduct(S(a)), apply_slotwise(alg.coproduct(a), S, S, /*swap=*/true)));
    }
    report.axioms.push_back(r.result());
  }
  {
    Recorder r("antipode_axiom4", tol);
    for (const auto& a : basis) {
      TensorSquare lhs;
      for (const auto outer = alg.coproduct(a); const auto& [k, v] : outer.terms()) {
        const AlgebraElement third(k.second);
        for (const auto inner = alg.coproduct(AlgebraElement(k.first)); const auto& [k1, v1] : inner.terms()) {
          lhs.add_product(alg.multiply(S(AlgebraElement(k1.first)), AlgebraElement(k1.second)), third, v * v1);
        }
      }
      lhs.prune();
      TensorSquare rhs;
      for (const auto& [k, v] : delta_one.terms()) {
        rhs.add_product(AlgebraElement(k.first), alg.multiply(a, AlgebraElement(k.second)), v);
      }
      rhs.prune();
      r.record(distance(lhs, rhs));
    }
    report.axioms.push_back(r.result());
  }
  return report;
}

}  // namespace pathhopf
