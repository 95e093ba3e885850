#pragma once

#include "sunspec/bignum.hpp"
#include "sunspec/cyclotomic.hpp"
#include "sunspec/int_polynomial.hpp"

#include <complex>
#include <string>
#include <vector>

namespace sunspec {

/// One factor (x^k - constant)^exponent.
struct PolyFactor {
  CyclotomicElement constant;
  BigInt exponent;

  friend bool operator==(const PolyFactor&, const PolyFactor&) = default;
};

/// x^zero_exponent * prod (x^k - c)^e, kept factored because the exponents are far
/// beyond machine width for all but the smallest inputs.
struct FactoredCharPoly {
  int k = 1;
  BigInt zero_exponent = 0;
  std::vector<PolyFactor> factors;

  BigInt degree() const;
  /// Sum of exponents over the non-zero factors.
  BigInt factor_multiplicity() const;
  /// Exponent of (x^k - c), or 0 if absent.
  BigInt exponent_of(const CyclotomicElement& c) const;

  /// "x^35 * (x^3 - 1)^6 * (x^3 - 2)^9"
  std::string to_string() const;

  friend bool operator==(const FactoredCharPoly&, const FactoredCharPoly&) = default;
};

/// Sorts factors into display order: rational constants ascending, then irrational
/// constants grouped by Galois orbit so conjugates sit next to each other.
void canonicalize(FactoredCharPoly& f);

/// True when the factor multiset is stable under every automorphism of Q(zeta_s),
/// conjugate factors carrying equal exponents.
bool is_galois_closed(const FactoredCharPoly& f);

/// Sum of d-th powers of the roots (with multiplicity), exact.
BigRat factored_power_sum(const FactoredCharPoly& f, long d);

inline constexpr long kDefaultDegreeCap = 100000;

/// Multiplies out the product. Throws DegreeCapExceeded when the degree is above the cap.
IntPolynomial expand_factored(const FactoredCharPoly& f, long degree_cap = kDefaultDegreeCap);

/// Numeric roots of an integer polynomial: exact square-free decomposition, then
/// companion-matrix eigenvalues of each part. Validation only.
std::vector<std::complex<double>> numeric_roots(const IntPolynomial& poly);

/// Sum of d-th powers of numeric_roots(poly).
std::complex<double> numeric_power_sum(const IntPolynomial& poly, long d);

}  // namespace sunspec
