#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

#include <cstdint>
#include <string>

namespace sunspec {

using BigInt = mpz_class;
using BigRat = mpq_class;

inline BigInt ipow(const BigInt& base, unsigned long exp) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

inline BigInt ipow(long base, unsigned long exp) { return ipow(BigInt(base), exp); }

inline BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline BigInt binomial(unsigned long n, unsigned long r) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, r);
  return out;
}

inline std::string to_string(const BigInt& v) { return v.get_str(); }
inline std::string to_string(const BigRat& v) { return v.get_str(); }

// Canonical rational from numerator/denominator; mpq_class does not normalize on construction.
inline BigRat make_rat(const BigInt& num, const BigInt& den = 1) {
  BigRat r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integral(const BigRat& r) { return r.get_den() == 1; }

}  // namespace sunspec

namespace Eigen {

// Lets Eigen dense containers hold GMP integers. Only storage and element access are
// used on such matrices; all arithmetic is written out explicitly.
template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  using Real = mpz_class;
  using NonInteger = mpq_class;
  using Nested = mpz_class;
  using Literal = mpz_class;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 40,
    MulCost = 100
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

#include <complex>

namespace sunspec {

/// z^n by repeated squaring; exact at z = 0, unlike std::pow's complex overloads.
inline std::complex<double> cpow(std::complex<double> z, long n) {
  std::complex<double> r{1.0, 0.0};
  while (n > 0) {
    if (n & 1) r *= z;
    n >>= 1;
    if (n) z *= z;
  }
  return r;
}

}  // namespace sunspec
