#include <array>
#include <set>
#include <vector>

#include "doctest.h"
#include "ellipsum/multi_index.hpp"
#include "ellipsum/theta.hpp"

using namespace ellipsum;

TEST_CASE("weights") {
  CHECK(weights(MultiIndex{1, 2, 3}).abs == 6);
  CHECK(weights(MultiIndex{1, 2, 3}).e2 == 11);
  CHECK(weights(MultiIndex{5}).abs == 5);
  CHECK(weights(MultiIndex{5}).e2 == 0);
  CHECK(weights(MultiIndex{0, 0}).abs == 0);
  CHECK(weights(MultiIndex{0, 0}).e2 == 0);
}

TEST_CASE("weights additivity") {
  MultiIndex a{2, 0, 3}, b{1, 4, 1};
  CHECK(weights(a.plus(b)).abs == weights(a).abs + weights(b).abs);
}

TEST_CASE("box iteration is lexicographic and complete") {
  BoxDomain box(MultiIndex{2, 1});
  auto pts = box.points();
  CHECK(pts.size() == 6);
  CHECK(box.size() == 6);
  CHECK(pts.front() == MultiIndex{0, 0});
  CHECK(pts.back() == MultiIndex{2, 1});

  BoxDomain b11(MultiIndex{1, 1});
  auto p11 = b11.points();
  REQUIRE(p11.size() == 4);
  CHECK(p11[0] == MultiIndex{0, 0});
  CHECK(p11[1] == MultiIndex{0, 1});
  CHECK(p11[2] == MultiIndex{1, 0});
  CHECK(p11[3] == MultiIndex{1, 1});

  BoxDomain zero(MultiIndex{0, 0, 0});
  CHECK(zero.points().size() == 1);
  CHECK(zero.points()[0] == MultiIndex{0, 0, 0});
}

TEST_CASE("simplex iteration") {
  SimplexDomain s22(2, 2);
  CHECK(s22.size() == 6);  // C(4, 2)
  auto pts = s22.points();
  CHECK(pts[0] == MultiIndex{0, 0});
  CHECK(pts[1] == MultiIndex{0, 1});
  CHECK(pts[2] == MultiIndex{0, 2});
  CHECK(pts[3] == MultiIndex{1, 0});
  CHECK(pts[4] == MultiIndex{1, 1});
  CHECK(pts[5] == MultiIndex{2, 0});

  SimplexDomain s13(1, 3);
  CHECK(s13.size() == 4);

  SimplexDomain half(2, 3, true);  // 2|k| <= 3 means |k| <= 1
  CHECK(half.size() == 3);
}

TEST_CASE("box restricted to |k| <= N matches simplex") {
  const int r = 3, N = 3;
  BoxDomain box(MultiIndex{N, N, N});
  std::set<std::vector<int>> from_box;
  box.for_each([&](const MultiIndex& k) {
    if (k.sum() <= N) from_box.insert(k.entries());
  });
  std::set<std::vector<int>> from_simplex;
  SimplexDomain(r, N).for_each(
      [&](const MultiIndex& k) { from_simplex.insert(k.entries()); });
  CHECK(from_box == from_simplex);
}

TEST_CASE("weyl delta") {
  EllipticContext c({0.2, 0.0}, {0.7, 0.0});
  std::array<Complex, 1> x1{Complex{0.9, 0.3}};
  CHECK(weyl_delta(x1, c) == Complex{1.0, 0.0});

  std::array<Complex, 2> x2{Complex{0.4, 0.0}, Complex{0.9, 0.0}};
  Complex want = 0.9 * theta_eval(Complex{0.4 / 0.9, 0.0}, c);
  CHECK(rel_diff(weyl_delta(x2, c), want) < 1e-15);

  // p = 0 reduces to the Vandermonde-style product.
  EllipticContext c0({0.0, 0.0}, {0.7, 0.0});
  std::array<Complex, 3> x3{Complex{0.4, 0.1}, Complex{0.9, -0.2}, Complex{1.3, 0.5}};
  Complex vdm{1.0, 0.0};
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) vdm *= x3[size_t(j)] - x3[size_t(i)];
  CHECK(rel_diff(weyl_delta(x3, c0), vdm) < 1e-15);
}

TEST_CASE("weyl delta antisymmetry") {
  SplitMix64 g(31);
  for (int t = 0; t < 40; ++t) {
    Complex p = std::polar(0.5 * (1.0 - g.uniform01()), 6.28 * g.uniform01());
    EllipticContext c(p, {0.7, 0.1});
    std::vector<Complex> x;
    for (int i = 0; i < 3; ++i)
      x.push_back(std::polar(0.5 + g.uniform01(), 6.28 * g.uniform01()));
    Complex before = weyl_delta(x, c);
    std::swap(x[0], x[1]);
    Complex after = weyl_delta(x, c);
    CHECK(rel_diff(before, -after) < 1e-12);
  }
}

TEST_CASE("delta_shift") {
  EllipticContext c({0.2, 0.0}, {0.7, 0.0});
  std::array<Complex, 2> x{Complex{0.8, 0.1}, Complex{1.2, -0.3}};
  MultiIndex zero{0, 0};
  CHECK(rel_diff(delta_shift(x, c.q, 2, zero, c), weyl_delta(x, c)) == 0.0);

  MultiIndex k{1, 0};
  std::array<Complex, 2> shifted{x[0] * c.q * c.q, x[1]};
  CHECK(rel_diff(delta_shift(x, c.q, 2, k, c), weyl_delta(shifted, c)) < 1e-15);

  std::array<Complex, 1> single{Complex{2.0, 0.0}};
  CHECK(delta_shift(single, c.q, 3, MultiIndex{2}, c) == Complex{1.0, 0.0});
}
