#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "bridge.hpp"
#include "oracle.hpp"
#include "worked_examples.hpp"
#include "pathhopf/error.hpp"
#include "pathhopf/essential.hpp"

using namespace pathhopf;

namespace {

// Compares a computed decomposition word by word with the expected one.
double decomposition_mismatch(const pathhopf::Decomposition& d, const std::vector<worked::Term>& expected) {
  double m = 0.0;
  std::set<std::vector<int>> seen;
  for (const auto& e : expected) {
    seen.insert(e.word);
    const DecompositionTerm* found = nullptr;
    for (const auto& t : d.terms) {
      if (t.word.indices() == e.word) found = &t;
    }
    m = std::max(m, found ? bridge::diff(found->essential, e.essential) : bridge::diff(PathVector(), e.essential));
  }
  for (const auto& t : d.terms) {
    if (!seen.contains(t.word.indices())) m = std::max(m, t.essential.max_abs());
  }
  return m;
}

void check_worked_decompositions(const char* file, const oracle::Space& os,
                                const std::vector<worked::Decomposition>& cases) {
  const PathSpace s(bridge::graph(file));
  for (const auto& c : cases) {
    CAPTURE(c.label);
    // the expected terms must themselves sum to the input as an identity of path vectors
    oracle::Vec sum;
    for (const auto& t : c.terms) sum = oracle::add(sum, oracle::create_word(os, t.word, t.essential));
    CHECK(bridge::diff(bridge::to_library(sum), c.input) < 1e-12);
    for (const auto& t : c.terms) {
      if (t.word.empty()) CHECK(is_essential(s, bridge::to_library(t.essential)));
    }
    const auto d = decompose(s, bridge::to_library(c.input));
    CHECK(decomposition_mismatch(d, c.terms) < 1e-9);
  }
}

}  // namespace

TEST_CASE("essential dimensions agree with the nullspace oracle") {
  struct Case {
    const char* file;
    oracle::Space os;
    int max;
  };
  for (const auto& c : {Case{"a3.json", oracle::chain(3), 5}, Case{"a4.json", oracle::chain(4), 5},
                        Case{"a_aff_2.json", oracle::triangle(), 4}, Case{"d4.json", oracle::d4(), 6}}) {
    const PathSpace s(bridge::graph(c.file));
    for (int n = 0; n <= c.max; ++n) {
      CAPTURE(c.file);
      CAPTURE(n);
      CHECK(static_cast<int>(essential_basis(s, n).dim()) == oracle::essential_dimension(c.os, n));
    }
  }
}

TEST_CASE("A3 has ten essential paths, none beyond length two") {
  const EssentialBasis b(std::make_shared<const PathSpace>(bridge::graph("a3.json")));
  CHECK(b.dim(0) == 3);
  CHECK(b.dim(1) == 4);
  CHECK(b.dim(2) == 3);
  CHECK(b.dim(3) == 0);
  CHECK(b.dim(4) == 0);
  CHECK(b.global_index(2, 1) == 8);
}

TEST_CASE("A3 length-two essentials span (012), gamma, (210)") {
  const PathSpace s(bridge::graph("a3.json"));
  const auto slice = essential_basis(s, 2);
  const std::vector<oracle::Vec> expected = {oracle::single("012"), worked::gamma_a3(), oracle::single("210")};
  // equal orthogonal projectors: every expected vector is reproduced by its coordinates
  for (const auto& e : expected) {
    const auto x = bridge::to_library(e);
    const auto coords = slice.coordinates(x);
    CHECK(bridge::diff(slice.expand(coords), e) < 1e-12);
  }
}

TEST_CASE("triangle essential dimensions 3, 6, 9") {
  const PathSpace s(bridge::graph("a_aff_2.json"));
  CHECK(essential_basis(s, 0).dim() == 3);
  CHECK(essential_basis(s, 1).dim() == 6);
  CHECK(essential_basis(s, 2).dim() == 9);
  CHECK(oracle::essential_dimension(oracle::triangle(), 2) == 9);
}

TEST_CASE("bases are orthonormal, endpoint graded and essential") {
  for (const char* file : {"a3.json", "a_aff_2.json", "d4.json", "a4.json"}) {
    const PathSpace s(bridge::graph(file));
    for (int n = 0; n <= 4; ++n) {
      const auto slice = essential_basis(s, n);
      for (std::size_t a = 0; a < slice.dim(); ++a) {
        const auto& b = slice[a];
        CHECK(is_essential(s, b.vector, 1e-10));
        for (const auto& [p, c] : b.vector.terms()) {
          CHECK(p.source() == b.source);
          CHECK(p.range() == b.range);
        }
        for (std::size_t c = 0; c < slice.dim(); ++c) {
          CHECK(std::abs(inner_product(b.vector, slice[c].vector) - (a == c ? 1.0 : 0.0)) < 1e-12);
        }
      }
      // deterministic
      const auto again = essential_basis(s, n);
      for (std::size_t a = 0; a < slice.dim(); ++a) CHECK(distance(again[a].vector, slice[a].vector) == 0.0);
    }
  }
}

TEST_CASE("coordinates reject a length mismatch") {
  const PathSpace s(bridge::graph("a3.json"));
  const auto slice = essential_basis(s, 1);
  CHECK_THROWS(slice.coordinates(PathVector(parse_path("0-1-2"))));
  CHECK(slice.coordinates(PathVector()).size() == slice.dim());
}

TEST_CASE("tridiagonal determinants against permutation expansion") {
  const double golden = (1.0 + std::sqrt(5.0)) / 2.0;
  for (double beta : {1.0, std::sqrt(2.0), golden, 2.0, 2.3, std::sqrt(3.0)}) {
    for (int size = 1; size <= 8; ++size) {
      const double brute = oracle::permutation_determinant(oracle::tridiagonal(beta, size));
      CAPTURE(beta);
      CAPTURE(size);
      CHECK(std::abs(tridiagonal_determinant(beta, size) - brute) < 1e-9);
      CHECK(std::abs(tridiagonal_determinant_closed_form(beta, size) - brute) < 1e-9);
    }
  }
  for (int size = 1; size <= 8; ++size) CHECK(std::abs(tridiagonal_determinant_closed_form(2.0, size) - (size + 1)) < 1e-9);
}

TEST_CASE("tridiagonal solve") {
  for (double beta : {2.0, 2.3, std::sqrt(3.0)}) {
    for (int size = 1; size <= 6; ++size) {
      if (std::abs(oracle::permutation_determinant(oracle::tridiagonal(beta, size))) < 1e-9) {
        CHECK_THROWS_AS(tridiagonal_solve(beta, size), SingularSystemError);
        continue;
      }
      const auto sol = tridiagonal_solve(beta, size);
      const auto t = oracle::tridiagonal(beta, size);
      for (int r = 0; r < size; ++r) {
        double row = 0.0;
        for (int c = 0; c < size; ++c) row += t[r][c] * sol.alpha[c];
        CHECK(std::abs(row - (r == 0 ? 1.0 : 0.0)) < 1e-12);
      }
    }
  }
  // D_3 vanishes at beta = sqrt 2
  CHECK_THROWS_AS(tridiagonal_solve(std::sqrt(2.0), 3), SingularSystemError);
  CHECK_THROWS_AS(tridiagonal_solve(2.0, 0), std::invalid_argument);
}

TEST_CASE("A3 decompositions of lengths two to four") {
  check_worked_decompositions("a3.json", oracle::chain(3), worked::a3_decompositions());
}

TEST_CASE("triangle decompositions of lengths two to four") {
  check_worked_decompositions("a_aff_2.json", oracle::triangle(), worked::triangle_decompositions());
}

TEST_CASE("round trip on every elementary path up to length six") {
  for (const char* file : {"a3.json", "a_aff_2.json", "d4.json"}) {
    const PathSpace s(bridge::graph(file));
    for (int n = 0; n <= 6; ++n) {
      for (const auto& p : enumerate_paths(s.graph(), n)) {
        const PathVector x(p);
        const auto d = decompose(s, x);
        CHECK(d.length == n);
        CHECK(distance(recompose(s, d), x) < 1e-9);
        for (std::size_t k = 0; k < d.terms.size(); ++k) {
          CHECK(is_essential(s, d.terms[k].essential, 1e-9));
          CHECK(d.terms[k].essential.length() == n - 2 * static_cast<int>(d.terms[k].word.size()));
          if (k > 0) {
            const auto& a = d.terms[k - 1].word;
            const auto& b = d.terms[k].word;
            CHECK((a.size() < b.size() || (a.size() == b.size() && a < b)));
          }
        }
      }
    }
  }
}

TEST_CASE("property: decomposition is linear") {
  std::mt19937_64 rng(3);
  auto uniform = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53 * 2.0 - 1.0; };
  for (const char* file : {"a3.json", "a_aff_2.json", "d4.json"}) {
    const PathSpace s(bridge::graph(file));
    for (int trial = 0; trial < 20; ++trial) {
      const int n = 2 + static_cast<int>(rng() % 3);
      const auto paths = enumerate_paths(s.graph(), n);
      PathVector x(n), y(n);
      for (int k = 0; k < 3; ++k) {
        x.add(paths[rng() % paths.size()], uniform());
        y.add(paths[rng() % paths.size()], uniform());
      }
      const double a = uniform();
      const auto dx = decompose(s, x);
      const auto dy = decompose(s, y);
      const auto dxy = decompose(s, x + a * y);
      for (int l = 0; 2 * l <= n; ++l) {
        PathVector lhs(n), rhs(n);
        for (const auto& t : dxy.terms) {
          if (static_cast<int>(t.word.size()) == l) lhs += apply_word(s, t.word, t.essential);
        }
        for (const auto& t : dx.terms) {
          if (static_cast<int>(t.word.size()) == l) rhs += apply_word(s, t.word, t.essential);
        }
        for (const auto& t : dy.terms) {
          if (static_cast<int>(t.word.size()) == l) rhs += a * apply_word(s, t.word, t.essential);
        }
        CHECK(distance(lhs, rhs) < 1e-9);
        CHECK(distance(project_component(s, x + a * y, l), lhs) < 1e-12);
      }
    }
  }
}

TEST_CASE("essential vectors decompose to themselves") {
  const PathSpace s(bridge::graph("d4.json"));
  for (int n = 0; n <= 4; ++n) {
    for (const auto slice = essential_basis(s, n); const auto& b : slice.vectors()) {
      const auto d = decompose(s, b.vector);
      REQUIRE(d.terms.size() == 1);
      CHECK(d.terms[0].word.empty());
      CHECK(distance(d.terms[0].essential, b.vector) < 1e-12);
    }
  }
}

TEST_CASE("decomposition errors") {
  const PathSpace s(bridge::graph("a3.json"));
  CHECK_THROWS_AS(decompose(s, PathVector(parse_path("0-1-0-1-0")), 3), CutoffError);
  CHECK(decompose(s, PathVector(2)).terms.empty());
  CHECK_THROWS_AS(project_component(s, PathVector(parse_path("0-1-0")), 2), std::invalid_argument);
}
