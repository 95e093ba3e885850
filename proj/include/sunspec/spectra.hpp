#pragma once

#include "sunspec/bignum.hpp"
#include "sunspec/cyclotomic.hpp"
#include "sunspec/factored_poly.hpp"
#include "sunspec/hypergraph.hpp"

#include <complex>
#include <optional>
#include <vector>

namespace sunspec {

/// A coordinate of xi: std::nullopt for 0, otherwise j meaning zeta_s^j.
using XiEntry = std::optional<int>;
using XiVector = std::vector<XiEntry>;

/// Orbit of xi-vectors (each coordinate 0 or an s-th root of unity) under coordinate
/// permutation, summarized by counts[j] = number of coordinates equal to zeta_s^j.
struct XiClass {
  int s = 1;
  int p = 1;
  std::vector<int> counts;

  int support() const;
  int zeros() const { return p - support(); }
  /// binomial(p, t) * t! / prod counts[j]!
  BigInt class_size() const;
  /// Support 0 or p.
  bool is_extremal() const { return support() == 0 || support() == p; }
  /// Concrete member: counts[0] copies of zeta^0, then counts[1] of zeta^1, ..., zeros last.
  XiVector representative() const;

  friend bool operator==(const XiClass&, const XiClass&) = default;
};

/// All classes, ordered by support size and then by counts in descending lexicographic order.
std::vector<XiClass> xi_classes(int s, int p);

/// Coordinate sum sum_j counts[j] zeta_s^j.
CyclotomicElement class_sum(const XiClass& cls);

/// Coordinate sum of an explicit xi vector.
CyclotomicElement xi_sum(int s, const XiVector& xi);

enum class FactorCase {
  AllXi,       // s < k-1: xi ranges over every vector
  ExtremalXi,  // s = k-1: only support 0 or p
};

struct EigenFactor {
  CyclotomicElement value;  // lambda^k takes this value
  FactorCase source;
};

/// Distinct values c = (sum xi)^s such that lambda is an eigenvalue iff lambda^k = c.
/// Requires k >= 3. Zero is always present.
std::vector<EigenFactor> eigenvalue_factors(const SunflowerParams& params);

/// (1/s) K^(p-t) k^(t(k-s-1)+s-1) for a class of support t >= 1.
BigRat multiplicity_mu(const SunflowerParams& params, const XiClass& cls);

/// Multiplicity attached to xi = 0 (may be non-integral; only k times it is an exponent).
BigRat multiplicity_mu_zero(const SunflowerParams& params);

/// (k^(s-1)/s) ((k-1)^(p(k-s)) - K^p): total multiplicity over nonzero xi.
BigRat total_nonzero_multiplicity(const SunflowerParams& params);

/// n (k-1)^(n-1), n = p(k-s)+s.
BigInt degree_of_charpoly(const SunflowerParams& params);

/// Characteristic polynomial in factored form. Per-class exponents are aggregated over
/// equal factor values before integrality is asserted; factors with value zero fold into
/// the bare x power. k = 2 gives the star graph x^(p-1) (x^2 - p).
FactoredCharPoly char_poly_factored(const SunflowerParams& params);

/// d-th spectral moment from the class-grouped closed form. Requires k >= 3.
BigInt spectral_moment_closed(const SunflowerParams& params, long d);

struct SpectralRadius {
  double rho = 0.0;
  BigInt multiplicity;
};

/// rho = p^(s/k), multiplicity k^(p(k-s)+s-1-p). Throws IntegrityError if the
/// multiplicity disagrees with the exponent of (x^k - p^s) in char_poly_factored.
SpectralRadius spectral_radius(const SunflowerParams& params);

struct NumericEigenvalue {
  std::complex<double> value;
  BigInt multiplicity;
};

/// Every distinct eigenvalue: zero, then the k k-th roots of each factor value.
std::vector<NumericEigenvalue> numeric_eigenvalues(const SunflowerParams& params);

/// Branch choices for the explicit eigenvector. Branch b of a k-th root means the
/// principal root times exp(2 pi i b / k).
struct EigvecRecipe {
  XiVector xi;
  int mu_branch = 0;
  std::vector<int> gamma_branch;  // empty means all principal
  int lambda_branch = 0;
  std::vector<int> anchor;        // offset of u_i inside petal i; empty means first vertex

  static EigvecRecipe principal(XiVector xi) { return EigvecRecipe{std::move(xi), 0, {}, 0, {}}; }
};

struct Eigenpair {
  std::complex<double> lambda;
  ComplexVector x;
};

/// Builds the eigenpair for a nonzero-sum xi. Throws ZeroSum when sum xi = 0 and
/// XiNotAdmissible when s = k-1 and xi has partial support. Requires k >= 3.
Eigenpair eigvec_construct(const SunflowerParams& params, const EigvecRecipe& recipe);

/// Principal k-th root of c times exp(2 pi i branch / k).
std::complex<double> kth_root(std::complex<double> c, int k, int branch = 0);

}  // namespace sunspec
