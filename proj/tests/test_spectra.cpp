#include "sunspec/errors.hpp"
#include "sunspec/factored_poly.hpp"
#include "sunspec/hypergraph.hpp"
#include "sunspec/spectra.hpp"

#include <doctest.h>

#include <cmath>
#include <map>
#include <set>

using namespace sunspec;

namespace {

// Every vector in {0, zeta^0, ..., zeta^(s-1)}^p, by odometer.
template <typename Visit>
void for_each_xi(int s, int p, Visit visit) {
  std::vector<int> digit(static_cast<std::size_t>(p), 0);  // 0 = zero, j+1 = zeta^j
  while (true) {
    XiVector xi;
    for (int d : digit) xi.push_back(d == 0 ? XiEntry{} : XiEntry{d - 1});
    visit(xi);
    int i = 0;
    while (i < p && ++digit[static_cast<std::size_t>(i)] == s + 1) digit[static_cast<std::size_t>(i++)] = 0;
    if (i == p) return;
  }
}

bool admissible(const SunflowerParams& params, const XiVector& xi) {
  if (params.s != params.k - 1) return true;
  const auto nz = std::count_if(xi.begin(), xi.end(), [](const XiEntry& e) { return e.has_value(); });
  return nz == 0 || nz == params.p;
}

std::vector<SunflowerParams> grid(int kmax, int pmax) {
  std::vector<SunflowerParams> out;
  for (int k = 3; k <= kmax; ++k)
    for (int s = 1; s < k; ++s)
      for (int p = 1; p <= pmax; ++p) out.push_back(SunflowerParams::make(k, s, p));
  return out;
}

}  // namespace

TEST_SUITE("xi_classes") {
  TEST_CASE("examples") {
    const auto a = xi_classes(1, 2);
    REQUIRE(a.size() == 3);
    CHECK(a[0].class_size() == 1);
    CHECK(a[1].class_size() == 2);
    CHECK(a[2].class_size() == 1);

    const auto b = xi_classes(2, 2);
    REQUIRE(b.size() == 6);
    std::vector<std::vector<int>> counts;
    std::vector<long> sizes;
    for (const auto& c : b) {
      counts.push_back(c.counts);
      sizes.push_back(c.class_size().get_si());
    }
    CHECK(counts == std::vector<std::vector<int>>{{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}});
    CHECK(sizes == std::vector<long>{1, 2, 2, 1, 2, 1});

    const auto c = xi_classes(3, 1);
    CHECK(c.size() == 4);
    CHECK(c[0].zeros() == 1);
  }

  TEST_CASE("partition matches brute-force enumeration") {
    for (int s = 1; s <= 4; ++s)
      for (int p = 1; p <= 6; ++p) {
        std::map<std::vector<int>, long> tally;
        long total = 0;
        for_each_xi(s, p, [&](const XiVector& xi) {
          std::vector<int> cnt(static_cast<std::size_t>(s), 0);
          for (const auto& e : xi)
            if (e) ++cnt[static_cast<std::size_t>(*e)];
          ++tally[cnt];
          ++total;
        });
        CHECK(total == static_cast<long>(std::pow(s + 1, p)));
        const auto classes = xi_classes(s, p);
        CHECK(classes.size() == tally.size());
        BigInt sum = 0;
        for (const auto& cls : classes) {
          CHECK(cls.class_size() == tally.at(cls.counts));
          sum += cls.class_size();
          CHECK(xi_sum(s, cls.representative()) == class_sum(cls));
        }
        CHECK(sum == ipow(BigInt(s + 1), static_cast<unsigned long>(p)));
      }
  }

  TEST_CASE("class sums") {
    CHECK(class_sum(XiClass{1, 2, {2}}) == CyclotomicElement(1, 2));
    CHECK(class_sum(XiClass{2, 2, {1, 1}}).is_zero());
    CHECK(class_sum(XiClass{3, 3, {1, 1, 1}}).is_zero());
  }
}

TEST_SUITE("eigenvalue_factors") {
  std::set<CyclotomicElement> values(const SunflowerParams& params) {
    std::set<CyclotomicElement> out;
    for (const auto& f : eigenvalue_factors(params)) out.insert(f.value);
    return out;
  }

  TEST_CASE("examples") {
    CHECK(values(SunflowerParams::make(3, 1, 2)) ==
          std::set<CyclotomicElement>{CyclotomicElement(1, 0), CyclotomicElement(1, 1), CyclotomicElement(1, 2)});
    CHECK(values(SunflowerParams::make(3, 2, 2)) ==
          std::set<CyclotomicElement>{CyclotomicElement(2, 0), CyclotomicElement(2, 4)});
    CHECK(values(SunflowerParams::make(4, 2, 1)) ==
          std::set<CyclotomicElement>{CyclotomicElement(2, 0), CyclotomicElement(2, 1)});
    CHECK_THROWS_AS(eigenvalue_factors(SunflowerParams::make(2, 1, 3)), InvalidArgument);
  }

  TEST_CASE("matches raw xi enumeration") {
    for (const auto& params : grid(5, 4)) {
      std::set<CyclotomicElement> expected;
      for_each_xi(params.s, params.p, [&](const XiVector& xi) {
        if (admissible(params, xi)) expected.insert(cyc_pow(xi_sum(params.s, xi), static_cast<unsigned long>(params.s)));
      });
      CHECK(values(params) == expected);
    }
  }

  TEST_CASE("factors coincide with the characteristic polynomial") {
    for (const auto& params : grid(5, 4)) {
      const auto f = char_poly_factored(params);
      std::set<CyclotomicElement> keys{CyclotomicElement(params.s, 0)};
      for (const auto& pf : f.factors) keys.insert(pf.constant);
      CHECK(f.zero_exponent > 0);
      CHECK(values(params) == keys);
    }
  }
}

TEST_SUITE("multiplicities") {
  TEST_CASE("examples") {
    const auto a = SunflowerParams::make(3, 1, 2);
    CHECK(multiplicity_mu(a, XiClass{1, 2, {1}}) == 3);
    const auto b = SunflowerParams::make(3, 2, 2);
    CHECK(multiplicity_mu(b, XiClass{2, 2, {1, 1}}) == BigRat(3, 2));
    CHECK(multiplicity_mu(b, XiClass{2, 2, {1, 0}}) == 0);
    CHECK(multiplicity_mu_zero(a) * 3 == 35);
  }

  TEST_CASE("degree of the characteristic polynomial") {
    CHECK(degree_of_charpoly(SunflowerParams::make(3, 1, 2)) == 80);
    CHECK(degree_of_charpoly(SunflowerParams::make(3, 2, 2)) == 32);
    for (int p = 1; p <= 8; ++p) CHECK(degree_of_charpoly(SunflowerParams::make(2, 1, p)) == p + 1);
  }

  TEST_CASE("total nonzero multiplicity") {
    for (const auto& params : grid(5, 4)) {
      BigRat total = 0;
      for (const auto& cls : xi_classes(params.s, params.p))
        if (cls.support() > 0) total += multiplicity_mu(params, cls) * BigRat(cls.class_size());
      CHECK(total == total_nonzero_multiplicity(params));
    }
  }

  TEST_CASE("K vanishes exactly on s = k - 1") {
    for (const auto& params : grid(6, 1)) CHECK((params.K() == 0) == (params.s == params.k - 1));
  }
}

TEST_SUITE("char_poly_factored") {
  TEST_CASE("examples") {
    CHECK(char_poly_factored(SunflowerParams::make(2, 1, 3)).to_string() == "x^2 * (x^2 - 3)");
    const auto a = char_poly_factored(SunflowerParams::make(3, 1, 2));
    CHECK(a.to_string() == "x^35 * (x^3 - 1)^6 * (x^3 - 2)^9");
    CHECK(a.degree() == 80);
    const auto b = char_poly_factored(SunflowerParams::make(3, 2, 2));
    CHECK(b.to_string() == "x^23 * (x^3 - 4)^3");
    CHECK(b.degree() == 32);
  }

  TEST_CASE("degree identity and galois closure") {
    for (const auto& params : grid(5, 4)) {
      const auto f = char_poly_factored(params);
      CHECK(f.zero_exponent + params.k * f.factor_multiplicity() == degree_of_charpoly(params));
      CHECK(is_galois_closed(f));
      for (const auto& pf : f.factors) CHECK(pf.exponent > 0);
    }
  }

  TEST_CASE("star graphs") {
    for (int p = 1; p <= 6; ++p) {
      const auto f = char_poly_factored(SunflowerParams::make(2, 1, p));
      CHECK(f.zero_exponent == p - 1);
      REQUIRE(f.factors.size() == 1);
      CHECK(f.factors[0].constant == CyclotomicElement(1, p));
      CHECK(f.factors[0].exponent == 1);
    }
  }
}

TEST_SUITE("moments") {
  TEST_CASE("examples") {
    CHECK(spectral_moment_closed(SunflowerParams::make(3, 1, 2), 4) == 0);
    CHECK(spectral_moment_closed(SunflowerParams::make(3, 1, 2), 3) == 72);
    CHECK(spectral_moment_closed(SunflowerParams::make(3, 2, 2), 3) == 36);
    CHECK_THROWS_AS(spectral_moment_closed(SunflowerParams::make(3, 1, 2), 0), InvalidArgument);
  }

  TEST_CASE("closed form agrees with power sums of the factored polynomial") {
    for (const auto& params : grid(5, 4)) {
      const auto f = char_poly_factored(params);
      for (long d = 1; d <= 4L * params.k; ++d)
        CHECK(BigRat(spectral_moment_closed(params, d)) == factored_power_sum(f, d));
    }
  }

  TEST_CASE("power sums agree with numeric roots of the expanded polynomial") {
    for (int k = 2; k <= 5; ++k)
      for (int s = 1; s < k; ++s)
        for (int p = 1; p <= 4; ++p) {
          const auto params = SunflowerParams::make(k, s, p);
          if (degree_of_charpoly(params) > 100) continue;
          const auto f = char_poly_factored(params);
          const auto e = expand_factored(f);
          for (long d = 1; d <= 2L * k; ++d) {
            const double exact = factored_power_sum(f, d).get_d();
            CAPTURE(d);
            CHECK(std::abs(numeric_power_sum(e, d) - exact) <= 1e-6 * std::max(1.0, std::abs(exact)));
          }
        }
  }
}

TEST_SUITE("spectral_radius") {
  TEST_CASE("examples") {
    auto r = spectral_radius(SunflowerParams::make(3, 1, 2));
    CHECK(r.rho == doctest::Approx(std::cbrt(2.0)).epsilon(1e-14));
    CHECK(r.multiplicity == 9);
    r = spectral_radius(SunflowerParams::make(3, 2, 2));
    CHECK(r.rho == doctest::Approx(std::cbrt(4.0)).epsilon(1e-14));
    CHECK(r.multiplicity == 3);
    r = spectral_radius(SunflowerParams::make(3, 1, 1));
    CHECK(r.rho == doctest::Approx(1.0));
    CHECK(r.multiplicity == 3);
  }

  TEST_CASE("largest numeric eigenvalue") {
    for (const auto& params : grid(5, 4)) {
      double best = 0;
      for (const auto& ev : numeric_eigenvalues(params)) best = std::max(best, std::abs(ev.value));
      const double rho = std::pow(params.p, static_cast<double>(params.s) / params.k);
      CHECK(std::abs(best - rho) <= 1e-12 * rho);
    }
  }
}

TEST_SUITE("eigvec_construct") {
  TEST_CASE("worked example") {
    const auto params = SunflowerParams::make(3, 1, 2);
    const auto pair = eigvec_construct(params, EigvecRecipe::principal({0, 0}));
    CHECK(std::abs(pair.lambda - std::cbrt(2.0)) < 1e-12);
    const double c = std::cbrt(0.5);
    CHECK(std::abs(pair.x(0) - 1.0) < 1e-12);
    for (int v = 1; v < 5; ++v) CHECK(std::abs(pair.x(v) - c) < 1e-12);
    CHECK(eigen_residual(make_sunflower(params), pair.lambda, pair.x) <= 1e-9);
  }

  TEST_CASE("errors") {
    const auto b = SunflowerParams::make(3, 2, 2);
    CHECK_THROWS_AS(eigvec_construct(b, EigvecRecipe::principal({0, XiEntry{}})), XiNotAdmissible);
    CHECK_THROWS_AS(eigvec_construct(b, EigvecRecipe::principal({0, 1})), ZeroSum);
    CHECK_THROWS_AS(eigvec_construct(SunflowerParams::make(4, 1, 3), EigvecRecipe::principal({XiEntry{}, XiEntry{}, XiEntry{}})),
                    ZeroSum);
  }

  TEST_CASE("every k-th root of every nonzero factor") {
    for (const auto& params : grid(5, 3)) {
      const auto h = make_sunflower(params);
      for (const auto& cls : xi_classes(params.s, params.p)) {
        const XiVector xi = cls.representative();
        if (class_sum(cls).is_zero() || !admissible(params, xi)) continue;
        for (int branch = 0; branch < params.k; ++branch) {
          EigvecRecipe recipe = EigvecRecipe::principal(xi);
          recipe.lambda_branch = branch;
          const auto pair = eigvec_construct(params, recipe);
          CHECK(eigen_residual(h, pair.lambda, pair.x) <= 1e-9);
        }
      }
    }
  }

  TEST_CASE("non-principal branches and anchors") {
    const auto params = SunflowerParams::make(5, 2, 3);
    const auto h = make_sunflower(params);
    EigvecRecipe recipe = EigvecRecipe::principal({0, 0, XiEntry{}});
    recipe.mu_branch = 2;
    recipe.gamma_branch = {1, 4, 0};
    recipe.anchor = {2, 1, 0};
    recipe.lambda_branch = 1;
    const auto pair = eigvec_construct(params, recipe);
    CHECK(eigen_residual(h, pair.lambda, pair.x) <= 1e-9);
  }
}
