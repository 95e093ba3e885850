#pragma once

#include "sunspec/bignum.hpp"
#include "sunspec/int_polynomial.hpp"

#include <complex>
#include <memory>
#include <string>
#include <vector>

namespace sunspec {

/// The s-th cyclotomic polynomial, by recursive exact division of x^s - 1.
/// Results are cached; the returned reference stays valid for the program lifetime.
const IntPolynomial& cyclotomic_poly(int s);

/// Euler's totient, i.e. deg Phi_s.
int totient(int s);

/// Element of Z[zeta_s] = Z[x] / Phi_s(x) in the power basis 1, zeta, ..., zeta^(phi(s)-1).
///
/// The coefficient vector always has length phi(s), so equality of values is equality
/// of representations. Arithmetic between different orders throws MixedOrder.
class CyclotomicElement {
 public:
  CyclotomicElement() : CyclotomicElement(1) {}
  explicit CyclotomicElement(int order);
  CyclotomicElement(int order, const BigInt& integer);

  /// Reduces an arbitrary coefficient list (index = power of zeta) modulo Phi_s.
  static CyclotomicElement from_coeffs(int order, std::vector<BigInt> coeffs);

  int order() const { return order_; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Constant coefficient when every other coefficient vanishes; NotRational otherwise.
  BigRat to_rational() const;

  /// Numeric value with zeta_s = exp(2*pi*i/s).
  std::complex<double> to_complex() const;

  /// Image under the automorphism zeta -> zeta^a, gcd(a, s) = 1.
  CyclotomicElement galois(int a) const;

  CyclotomicElement& operator+=(const CyclotomicElement& o);
  CyclotomicElement& operator-=(const CyclotomicElement& o);
  CyclotomicElement& operator*=(const CyclotomicElement& o);
  CyclotomicElement& operator*=(const BigInt& c);
  CyclotomicElement operator-() const;

  friend CyclotomicElement operator+(CyclotomicElement a, const CyclotomicElement& b) { return a += b; }
  friend CyclotomicElement operator-(CyclotomicElement a, const CyclotomicElement& b) { return a -= b; }
  friend CyclotomicElement operator*(CyclotomicElement a, const CyclotomicElement& b) { return a *= b; }
  friend CyclotomicElement operator*(CyclotomicElement a, const BigInt& c) { return a *= c; }
  friend CyclotomicElement operator*(const BigInt& c, CyclotomicElement a) { return a *= c; }

  friend bool operator==(const CyclotomicElement& a, const CyclotomicElement& b) {
    return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
  }
  /// Lexicographic on (order, coefficients); used for canonical ordering of factors.
  friend bool operator<(const CyclotomicElement& a, const CyclotomicElement& b);

  /// "cyc(s; c0, c1, ...)" for irrational values, the plain integer/rational otherwise.
  std::string to_string() const;

 private:
  void reduce(std::vector<BigInt> raw);

  int order_;
  std::vector<BigInt> coeffs_;
};

/// zeta_s^j for 0 <= j < s.
CyclotomicElement cyc_root_of_unity(int j, int s);

CyclotomicElement cyc_pow(CyclotomicElement base, const BigInt& exponent);
CyclotomicElement cyc_pow(const CyclotomicElement& base, unsigned long exponent);

inline BigRat cyc_to_rational(const CyclotomicElement& a) { return a.to_rational(); }

}  // namespace sunspec
