#pragma once

#include "sunspec/bignum.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace sunspec {

/// Sparse univariate polynomial with arbitrary-precision integer coefficients.
/// Zero coefficients are never stored, so the zero polynomial has no terms.
class IntPolynomial {
 public:
  using Exponent = std::int64_t;
  using Terms = std::map<Exponent, BigInt>;

  IntPolynomial() = default;
  explicit IntPolynomial(const BigInt& constant);

  static IntPolynomial monomial(Exponent e, const BigInt& coeff = 1);
  static IntPolynomial from_dense(const std::vector<BigInt>& coeffs);

  bool is_zero() const { return terms_.empty(); }
  /// -1 for the zero polynomial.
  Exponent degree() const;
  BigInt leading() const;
  BigInt coeff(Exponent e) const;
  const Terms& terms() const { return terms_; }
  std::vector<BigInt> dense() const;

  void add_term(Exponent e, const BigInt& coeff);

  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.terms_ == b.terms_; }

  /// Exact quotient by a monic divisor; throws if the remainder is nonzero.
  IntPolynomial divide_exact(const IntPolynomial& monic_divisor) const;

  /// Renders in the variable `var`, highest degree first: "x^5 - 3x^3".
  std::string to_string(const std::string& var = "x") const;

 private:
  Terms terms_;
};

}  // namespace sunspec
