#pragma once

// Worked examples in oracle form. Vectors given unnormalized stay unnormalized; comparisons
// happen in elementary coordinates. Where an example contradicts its own derivation, the
// corrected value is used and the note field says what was changed.

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "oracle.hpp"

namespace worked {

using oracle::Tensor;
using oracle::Vec;
using oracle::vec;

struct Term {
  std::vector<int> word;
  Vec essential;
};

struct Decomposition {
  std::string label;
  Vec input;
  std::vector<Term> terms;
  std::string note;
};

struct Product {
  std::string label;
  std::pair<Vec, Vec> a;
  std::pair<Vec, Vec> b;
  Tensor expected;
  std::string note;
};

inline Vec gamma_a3() { return vec({{"121", 1.0 / std::sqrt(2.0)}, {"101", -1.0 / std::sqrt(2.0)}}); }
inline Vec xi_triangle(const char* a, const char* b) { return vec({{a, 1.0}, {b, -1.0}}); }

inline std::vector<Decomposition> a3_decompositions() {
  const double r = std::pow(2.0, 0.25);
  const double s2 = std::sqrt(2.0);
  const auto g = gamma_a3();
  const auto v = [](const char* p) { return oracle::single(p); };
  const auto cat = [](const Vec& a, const Vec& b) { return oracle::concat(a, b); };
  using oracle::scaled;
  std::vector<Decomposition> out = {
      {"(01)*(10)", cat(v("01"), v("10")), {{{0}, scaled(v("0"), 1 / r)}}, ""},
      {"(21)*(12)", cat(v("21"), v("12")), {{{0}, scaled(v("2"), 1 / r)}}, ""},
      {"(10)*(01)", cat(v("10"), v("01")), {{{}, scaled(g, -1 / s2)}, {{0}, scaled(v("1"), 1 / (s2 * r))}}, ""},
      {"(12)*(21)", cat(v("12"), v("21")), {{{}, scaled(g, 1 / s2)}, {{0}, scaled(v("1"), 1 / (s2 * r))}}, ""},
      {"(01)*gamma", cat(v("01"), g), {{{0}, scaled(v("01"), -r)}, {{1}, scaled(v("01"), 1 / r)}}, ""},
      {"(21)*gamma", cat(v("21"), g), {{{0}, scaled(v("21"), r)}, {{1}, scaled(v("21"), -1 / r)}}, ""},
      {"gamma*(10)", cat(g, v("10")), {{{0}, scaled(v("10"), 1 / r)}, {{1}, scaled(v("10"), -r)}}, ""},
      {"gamma*(12)", cat(g, v("12")), {{{0}, scaled(v("12"), -1 / r)}, {{1}, scaled(v("12"), r)}}, ""},
      {"(10)*(012)", cat(v("10"), v("012")), {{{0}, scaled(v("12"), r)}, {{1}, scaled(v("12"), -1 / r)}}, ""},
      {"(012)*(21)", cat(v("012"), v("21")), {{{0}, scaled(v("01"), -1 / r)}, {{1}, scaled(v("01"), r)}}, ""},
      {"(12)*(210)", cat(v("12"), v("210")), {{{0}, scaled(v("10"), r)}, {{1}, scaled(v("10"), -1 / r)}}, ""},
      {"(210)*(01)", cat(v("210"), v("01")), {{{0}, scaled(v("21"), -1 / r)}, {{1}, scaled(v("21"), r)}}, ""},
      {"(012)*(210)", cat(v("012"), v("210")), {{{0, 1}, v("0")}, {{0, 2}, scaled(v("0"), -1 / s2)}}, ""},
      {"(210)*(012)", cat(v("210"), v("012")), {{{0, 1}, v("2")}, {{0, 2}, scaled(v("2"), -1 / s2)}}, ""},
      {"gamma*gamma", cat(g, g), {{{0, 1}, v("1")}, {{0, 2}, scaled(v("1"), -1 / s2)}}, ""},
  };
  return out;
}

// xi^(0) and xi^(2) of the length-four decomposition of (01210) and its mirror (21012)
inline Vec xi0_01210() {
  return oracle::scaled(
      vec({{"01210", 1}, {"02120", 1}, {"01020", 1}, {"02020", -1}, {"01010", -1}, {"02010", 1}}), 1.0 / 6.0);
}
inline Vec xi2_01210() { return vec({{"010", 0.5}, {"020", -0.5}}); }
inline Vec xi0_21012() {
  return oracle::scaled(
      vec({{"21012", 1}, {"20102", 1}, {"21202", 1}, {"20202", -1}, {"21212", -1}, {"20212", 1}}), 1.0 / 6.0);
}
inline Vec xi2_21012() { return vec({{"212", 0.5}, {"202", -0.5}}); }

inline std::vector<Decomposition> triangle_decompositions() {
  const auto v = [](const char* p) { return oracle::single(p); };
  const auto cat = [](const Vec& a, const Vec& b) { return oracle::concat(a, b); };
  using oracle::scaled;
  const auto x010 = xi_triangle("010", "020");
  const auto x121 = xi_triangle("121", "101");
  const auto x202 = xi_triangle("202", "212");
  std::vector<Decomposition> out = {
      {"(01)*(10)", cat(v("01"), v("10")), {{{}, scaled(x010, 0.5)}, {{0}, scaled(v("0"), 0.5)}}, ""},
      {"(02)*(20)", cat(v("02"), v("20")), {{{}, scaled(x010, -0.5)}, {{0}, scaled(v("0"), 0.5)}}, ""},
      {"(12)*(21)", cat(v("12"), v("21")), {{{}, scaled(x121, 0.5)}, {{0}, scaled(v("1"), 0.5)}}, ""},
      {"(10)*(01)", cat(v("10"), v("01")), {{{}, scaled(x121, -0.5)}, {{0}, scaled(v("1"), 0.5)}}, ""},
      {"(20)*(02)", cat(v("20"), v("02")), {{{}, scaled(x202, 0.5)}, {{0}, scaled(v("2"), 0.5)}}, ""},
      {"(21)*(12)", cat(v("21"), v("12")), {{{}, scaled(x202, -0.5)}, {{0}, scaled(v("2"), 0.5)}}, ""},
      {"(10)*(012)",
       cat(v("10"), v("012")),
       {{{}, scaled(vec({{"1012", 1}, {"1212", -1}, {"1202", 1}}), 1.0 / 3)},
        {{0}, scaled(v("12"), 2.0 / 3)},
        {{1}, scaled(v("12"), -1.0 / 3)}},
       ""},
      {"(012)*(21)",
       cat(v("012"), v("21")),
       {{{}, scaled(vec({{"0121", 1}, {"0101", -1}, {"0201", 1}}), 1.0 / 3)},
        {{0}, scaled(v("01"), -1.0 / 3)},
        {{1}, scaled(v("01"), 2.0 / 3)}},
       ""},
      {"(10)*xi010",
       cat(v("10"), x010),
       {{{}, scaled(vec({{"1010", 1}, {"1020", -1}, {"1210", -1}}), 2.0 / 3)},
        {{0}, scaled(v("10"), 2.0 / 3)},
        {{1}, scaled(v("10"), -1.0 / 3)}},
       ""},
      {"xi010*(01)",
       cat(x010, v("01")),
       {{{}, scaled(vec({{"0101", 1}, {"0201", -1}, {"0121", -1}}), 2.0 / 3)},
        {{0}, scaled(v("01"), -1.0 / 3)},
        {{1}, scaled(v("01"), 2.0 / 3)}},
       ""},
      {"(01210)",
       v("01210"),
       {{{}, xi0_01210()},
        {{0}, scaled(xi2_01210(), -0.5)},
        {{1}, xi2_01210()},
        {{2}, scaled(xi2_01210(), -0.5)},
        {{0, 1}, scaled(v("0"), 1.0 / 3)},
        {{0, 2}, scaled(v("0"), -1.0 / 6)}},
       ""},
      {"(21012)",
       v("21012"),
       {{{}, xi0_21012()},
        {{0}, scaled(xi2_21012(), -0.5)},
        {{1}, xi2_21012()},
        {{2}, scaled(xi2_21012(), -0.5)},
        {{0, 1}, scaled(v("2"), 1.0 / 3)},
        {{0, 2}, scaled(v("2"), -1.0 / 6)}},
       ""},
      {"xi010*(012)",
       cat(x010, v("012")),
       {{{}, scaled(vec({{"01012", 1}, {"02012", -1}, {"01212", -1}, {"01202", 1}}), 0.5)},
        {{0}, scaled(v("012"), -0.5)},
        {{1}, v("012")},
        {{2}, scaled(v("012"), -0.5)}},
       ""},
      {"(210)*xi010",
       cat(v("210"), x010),
       {{{}, scaled(vec({{"21010", 1}, {"21020", -1}, {"21210", -1}, {"20210", 1}}), 0.5)},
        {{0}, scaled(v("210"), -0.5)},
        {{1}, v("210")},
        {{2}, scaled(v("210"), -0.5)}},
       ""},
      {"xi121*xi121",
       cat(x121, x121),
       {{{},
         scaled(vec({{"12121", 1}, {"10101", 1}, {"10121", -1}, {"12101", -1}, {"12021", -1}, {"10201", -1}}),
                2.0 / 3)},
        {{0, 1}, scaled(v("1"), 2.0 / 3)},
        {{0, 2}, scaled(v("1"), -1.0 / 3)}},
       "words given as c+_1 c+_1 and c+_2 c+_1 read as c+_1 c+_0 and c+_2 c+_0"},
  };
  return out;
}

inline Tensor a3_projection() { return oracle::tensor(oracle::single("0"), oracle::single("2")); }

// xi^(1) of the final line is the xi^(0) of the decomposition above (same six-term vector)
inline Tensor triangle_projection() {
  auto t = oracle::tensor(xi0_01210(), xi0_21012());
  t = oracle::add(t, oracle::tensor(xi2_01210(), xi2_21012()));
  return oracle::add(t, oracle::tensor(oracle::single("0"), oracle::single("2"), 1.0 / 3));
}

inline std::vector<Product> a3_products() {
  const auto v = [](const char* p) { return oracle::single(p); };
  const auto g = gamma_a3();
  using oracle::tensor;
  return {
      {"(21x12).(12x21)", {v("21"), v("12")}, {v("12"), v("21")}, tensor(v("2"), v("1"), 1 / std::sqrt(2.0)), ""},
      {"(10x12).(01x21)",
       {v("10"), v("12")},
       {v("01"), v("21")},
       oracle::add(tensor(v("1"), v("1"), 0.5), tensor(g, g, -0.5)),
       ""},
      {"(12x12).(21x21)",
       {v("12"), v("12")},
       {v("21"), v("21")},
       oracle::add(tensor(v("1"), v("1"), 0.5), tensor(g, g, 0.5)),
       ""},
      {"(gamma x 012).(10x21)", {g, v("012")}, {v("10"), v("21")}, tensor(v("10"), v("01"), -1.0), ""},
      {"(gamma x gamma).(gamma x gamma)", {g, g}, {g, g}, tensor(v("1"), v("1")), ""},
  };
}

// the remainder of xi121*(10) after removing the creation part: xi121*(10) + (2/3 c+_1 - 1/3 c+_0)(10)
inline Vec triangle_xi121_10() {
  const auto s = oracle::triangle();
  auto x = oracle::concat(xi_triangle("121", "101"), oracle::single("10"));
  x = oracle::add(x, oracle::create(s, 1, oracle::single("10")), 2.0 / 3);
  return oracle::add(x, oracle::create(s, 0, oracle::single("10")), -1.0 / 3);
}

inline Vec triangle_xi0121() { return oracle::scaled(vec({{"0121", 1}, {"0101", -1}, {"0201", 1}}), 1.0 / 3); }

inline Vec triangle_xi121_xi121() {
  return oracle::scaled(
      vec({{"12121", 1}, {"10101", 1}, {"10121", -1}, {"12101", -1}, {"12021", -1}, {"10201", -1}}), 2.0 / 3);
}

// Coefficient of (10)x(01) in the fourth triangle product as stated; the decomposition
// it rests on has the wrong overall sign on the creation part, which flips it.
inline constexpr double kStatedTriangleProduct4 = 2.0 / 3;
inline constexpr double kCorrectedTriangleProduct4 = -2.0 / 3;

inline Tensor triangle_product4(double coefficient) {
  using oracle::single;
  return oracle::add(oracle::tensor(single("10"), single("01"), coefficient),
                     oracle::tensor(triangle_xi121_10(), triangle_xi0121()));
}

inline std::vector<Product> triangle_products() {
  const auto v = [](const char* p) { return oracle::single(p); };
  const auto x121 = xi_triangle("121", "101");
  const auto x212 = xi_triangle("202", "212");
  using oracle::tensor;
  return {
      {"(21x12).(12x21)",
       {v("21"), v("12")},
       {v("12"), v("21")},
       oracle::add(tensor(v("2"), v("1"), 0.5), tensor(x212, x121, -0.25)),
       ""},
      {"(10x12).(01x21)",
       {v("10"), v("12")},
       {v("01"), v("21")},
       oracle::add(tensor(v("1"), v("1"), 0.5), tensor(x121, x121, -0.25)),
       ""},
      {"(12x12).(21x21)",
       {v("12"), v("12")},
       {v("21"), v("21")},
       oracle::add(tensor(v("1"), v("1"), 0.5), tensor(x121, x121, 0.25)),
       ""},
      {"(xi121 x 012).(10x21)",
       {x121, v("012")},
       {v("10"), v("21")},
       triangle_product4(kCorrectedTriangleProduct4),
       "stated +2/3 on (10)x(01); -2/3 follows from the decomposition of xi121*(10)"},
      {"(xi121 x xi121).(xi121 x xi121)",
       {x121, x121},
       {x121, x121},
       oracle::add(tensor(v("1"), v("1"), 4.0 / 3), tensor(triangle_xi121_xi121(), triangle_xi121_xi121())),
       ""},
  };
}

}  // namespace worked
