#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "pathhopf/weak_hopf.hpp"

namespace pathhopf {

struct VerifyOptions {
  int max_length = 2;
  int samples = 100;
  std::uint64_t seed = 1;
  double tolerance = 1e-8;
  /// slack on eps(a a*) >= 0
  double positivity_tolerance = 1e-9;
  AntipodeFactor antipode_factor = AntipodeFactor::perron_frobenius;
};

struct AxiomResult {
  std::string name;
  double max_residual = 0.0;
  double tolerance = 0.0;
  std::size_t checks = 0;

  bool passed() const { return max_residual <= tolerance; }
};

struct VerificationReport {
  std::string graph;
  int max_length = 0;
  int samples = 0;
  std::uint64_t seed = 0;
  std::vector<AxiomResult> axioms;

  bool passed() const;
  const AxiomResult* find(const std::string& name) const;
};

/// Uniform in [-1, 1) from the top 53 bits; identical on every platform, unlike
/// std::uniform_real_distribution.
double uniform_symmetric(std::mt19937_64& rng);

/// Sparse random element with `terms` matrix units of length <= max_length and
/// complex coefficients.
AlgebraElement random_element(const WeakHopfAlgebra& alg, int max_length, std::mt19937_64& rng, int terms = 3);

/// Checks the weak *-bialgebra and antipode axioms. Unary and binary laws run over all
/// matrix units up to max_length; associativity and positivity use seeded random samples.
/// Throws CutoffError when triple products would exceed the algebra's cutoff.
VerificationReport verify_axioms(const WeakHopfAlgebra& alg, const VerifyOptions& options = {});

}  // namespace pathhopf
