#include "sunspec/errors.hpp"
#include "sunspec/hypergraph.hpp"
#include "sunspec/spectra.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>

using namespace sunspec;

TEST_CASE("sunflower params validation") {
  CHECK_NOTHROW(SunflowerParams::make(2, 1, 1));
  CHECK_THROWS_AS(SunflowerParams::make(3, 3, 2), InvalidArgument);
  CHECK_THROWS_AS(SunflowerParams::make(3, 0, 2), InvalidArgument);
  CHECK_THROWS_AS(SunflowerParams::make(3, 1, 0), InvalidArgument);
  CHECK_THROWS_AS(SunflowerParams::make(1, 1, 1), InvalidArgument);

  CHECK(SunflowerParams::make(3, 1, 2).K() == 1);
  CHECK(SunflowerParams::make(3, 2, 2).K() == 0);
  CHECK(SunflowerParams::make(5, 1, 1).K() == 256 - 125);
}

TEST_CASE("sunflower labeling") {
  const auto a = make_sunflower(SunflowerParams::make(3, 1, 2));
  CHECK(a.n == 5);
  CHECK(a.edges == std::vector<Edge>{{1, 2, 3}, {1, 4, 5}});

  const auto b = make_sunflower(SunflowerParams::make(3, 2, 2));
  CHECK(b.n == 4);
  CHECK(b.edges == std::vector<Edge>{{1, 2, 3}, {1, 2, 4}});

  const auto c = make_sunflower(SunflowerParams::make(4, 2, 3));
  CHECK(c.n == 8);
  CHECK(c.edges == std::vector<Edge>{{1, 2, 3, 4}, {1, 2, 5, 6}, {1, 2, 7, 8}});

  CHECK(petal_first_vertex(SunflowerParams::make(4, 2, 3), 2) == 7);
}

TEST_CASE("sunflower structure over a grid") {
  for (int k = 2; k <= 6; ++k)
    for (int s = 1; s < k; ++s)
      for (int p = 1; p <= 5; ++p) {
        const auto params = SunflowerParams::make(k, s, p);
        const auto h = make_sunflower(params);
        CAPTURE(k);
        CAPTURE(s);
        CAPTURE(p);
        CHECK(validate(h).ok);
        CHECK(h.edges.size() == static_cast<std::size_t>(p));
        CHECK(h.n == p * (k - s) + s);
        for (std::size_t i = 0; i < h.edges.size(); ++i)
          for (std::size_t j = i + 1; j < h.edges.size(); ++j) {
            std::vector<int> common;
            std::set_intersection(h.edges[i].begin(), h.edges[i].end(), h.edges[j].begin(), h.edges[j].end(),
                                  std::back_inserter(common));
            std::vector<int> seeds(static_cast<std::size_t>(s));
            std::iota(seeds.begin(), seeds.end(), 1);
            CHECK(common == seeds);
          }
        for (int v = 1; v <= h.n; ++v) CHECK(h.degree(v) == (v <= s ? p : 1));
      }
}

TEST_CASE("validation reports") {
  UniformHypergraph h{3, 5, {{1, 2}}};
  auto r = validate(h);
  CHECK_FALSE(r.ok);
  CHECK(r.violation.find("edge size") != std::string::npos);

  h.edges = {{1, 2, 3}, {1, 2, 3}};
  r = validate(h);
  CHECK_FALSE(r.ok);
  CHECK(r.violation.find("duplicate") != std::string::npos);

  h.edges = {{1, 2, 6}};
  CHECK_FALSE(validate(h).ok);
  h.edges = {{1, 1, 2}};
  CHECK_FALSE(validate(h).ok);
  h.edges = {{3, 2, 1}};
  CHECK_FALSE(validate(h).ok);
}

TEST_CASE("residual examples") {
  const auto h = make_sunflower(SunflowerParams::make(3, 1, 2));
  ComplexVector x = ComplexVector::Zero(5);
  x(4) = 1.0;
  CHECK(eigen_residual(h, 0.0, x) == 0.0);

  const auto star = make_sunflower(SunflowerParams::make(2, 1, 3));
  ComplexVector y(4);
  y << std::sqrt(3.0), 1.0, 1.0, 1.0;
  CHECK(eigen_residual(star, std::sqrt(3.0), y) < 1e-12);
  CHECK(eigen_residual(star, 1.0, y) > 0.1);

  CHECK_THROWS_AS(eigen_residual(h, 1.0, ComplexVector::Zero(5)), InvalidArgument);
  CHECK_THROWS_AS(eigen_residual(h, 1.0, ComplexVector::Ones(4)), InvalidArgument);
}

TEST_CASE("scaling by (k-2)-th roots of unity preserves eigenpairs") {
  for (int k = 3; k <= 6; ++k)
    for (int s = 1; s < k; ++s) {
      const auto params = SunflowerParams::make(k, s, 2);
      const auto h = make_sunflower(params);
      XiVector xi(2, 0);
      const auto pair = eigvec_construct(params, EigvecRecipe::principal(xi));
      REQUIRE(eigen_residual(h, pair.lambda, pair.x) < 1e-9);
      for (int j = 0; j < std::max(1, k - 2); ++j) {
        const std::complex<double> t = std::polar(1.0, 2 * std::numbers::pi * j / std::max(1, k - 2));
        CHECK(eigen_residual(h, pair.lambda, pair.x * t) < 1e-9);
      }
    }
}
