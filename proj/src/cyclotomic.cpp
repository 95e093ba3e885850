#include "sunspec/cyclotomic.hpp"

#include "sunspec/errors.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace sunspec {

namespace {

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

// std::map never relocates nodes, so references handed out stay valid.
std::map<int, IntPolynomial>& cache() {
  static std::map<int, IntPolynomial> c;
  return c;
}

const IntPolynomial& cyclotomic_poly_locked(int s) {
  auto& c = cache();
  if (auto it = c.find(s); it != c.end()) return it->second;
  IntPolynomial p = IntPolynomial::monomial(s) - IntPolynomial(BigInt(1));
  for (int d = 1; d < s; ++d)
    if (s % d == 0) p = p.divide_exact(cyclotomic_poly_locked(d));
  return c.emplace(s, std::move(p)).first->second;
}

void check_same_order(const CyclotomicElement& a, const CyclotomicElement& b) {
  if (a.order() != b.order())
    throw MixedOrder("cyclotomic orders differ: " + std::to_string(a.order()) + " vs " +
                     std::to_string(b.order()));
}

}  // namespace

const IntPolynomial& cyclotomic_poly(int s) {
  if (s < 1) throw InvalidArgument("cyclotomic order must be positive");
  std::lock_guard lock(cache_mutex());
  return cyclotomic_poly_locked(s);
}

int totient(int s) {
  if (s < 1) throw InvalidArgument("totient of non-positive integer");
  int count = 0;
  for (int j = 1; j <= s; ++j)
    if (std::gcd(j, s) == 1) ++count;
  return count;
}

CyclotomicElement::CyclotomicElement(int order) : order_(order) {
  if (order < 1) throw InvalidArgument("cyclotomic order must be positive");
  coeffs_.assign(static_cast<std::size_t>(totient(order)), BigInt(0));
}

CyclotomicElement::CyclotomicElement(int order, const BigInt& integer) : CyclotomicElement(order) {
  coeffs_[0] = integer;
}

CyclotomicElement CyclotomicElement::from_coeffs(int order, std::vector<BigInt> coeffs) {
  CyclotomicElement e(order);
  e.reduce(std::move(coeffs));
  return e;
}

void CyclotomicElement::reduce(std::vector<BigInt> raw) {
  const auto& phi = cyclotomic_poly(order_);
  const auto deg = static_cast<std::size_t>(phi.degree());
  const std::vector<BigInt> modulus = phi.dense();
  // Phi_s is monic, so x^deg = -(lower terms).
  for (std::size_t top = raw.size(); top-- > deg;) {
    if (raw[top] == 0) continue;
    const BigInt c = raw[top];
    for (std::size_t j = 0; j < deg; ++j)
      if (modulus[j] != 0) raw[top - deg + j] -= c * modulus[j];
    raw[top] = 0;
  }
  raw.resize(deg, BigInt(0));
  coeffs_ = std::move(raw);
}

bool CyclotomicElement::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool CyclotomicElement::is_rational() const {
  for (std::size_t j = 1; j < coeffs_.size(); ++j)
    if (coeffs_[j] != 0) return false;
  return true;
}

BigRat CyclotomicElement::to_rational() const {
  if (!is_rational()) throw NotRational("cyclotomic element " + to_string() + " is not rational");
  return BigRat(coeffs_[0]);
}

std::complex<double> CyclotomicElement::to_complex() const {
  std::complex<double> acc{0.0, 0.0};
  const double step = 2.0 * M_PI / order_;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] == 0) continue;
    acc += coeffs_[j].get_d() * std::polar(1.0, step * static_cast<double>(j));
  }
  return acc;
}

CyclotomicElement CyclotomicElement::galois(int a) const {
  a = ((a % order_) + order_) % order_;
  if (std::gcd(a, order_) != 1) throw InvalidArgument("Galois exponent must be coprime to the order");
  std::vector<BigInt> raw(static_cast<std::size_t>(order_), BigInt(0));
  for (std::size_t j = 0; j < coeffs_.size(); ++j)
    raw[(static_cast<std::size_t>(a) * j) % static_cast<std::size_t>(order_)] += coeffs_[j];
  return from_coeffs(order_, std::move(raw));
}

CyclotomicElement& CyclotomicElement::operator+=(const CyclotomicElement& o) {
  check_same_order(*this, o);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += o.coeffs_[j];
  return *this;
}

CyclotomicElement& CyclotomicElement::operator-=(const CyclotomicElement& o) {
  check_same_order(*this, o);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] -= o.coeffs_[j];
  return *this;
}

CyclotomicElement& CyclotomicElement::operator*=(const CyclotomicElement& o) {
  check_same_order(*this, o);
  const std::size_t n = coeffs_.size();
  std::vector<BigInt> raw(2 * n - 1, BigInt(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (o.coeffs_[j] != 0) raw[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  reduce(std::move(raw));
  return *this;
}

CyclotomicElement& CyclotomicElement::operator*=(const BigInt& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

CyclotomicElement CyclotomicElement::operator-() const {
  CyclotomicElement r = *this;
  for (auto& x : r.coeffs_) x = -x;
  return r;
}

bool operator<(const CyclotomicElement& a, const CyclotomicElement& b) {
  if (a.order_ != b.order_) return a.order_ < b.order_;
  return std::lexicographical_compare(a.coeffs_.begin(), a.coeffs_.end(), b.coeffs_.begin(),
                                      b.coeffs_.end(),
                                      [](const BigInt& x, const BigInt& y) { return x < y; });
}

std::string CyclotomicElement::to_string() const {
  if (is_rational()) return coeffs_[0].get_str();
  std::ostringstream os;
  os << "cyc(" << order_ << ";";
  for (std::size_t j = 0; j < coeffs_.size(); ++j) os << (j ? ", " : " ") << coeffs_[j].get_str();
  os << ")";
  return os.str();
}

CyclotomicElement cyc_root_of_unity(int j, int s) {
  if (s < 1) throw InvalidArgument("cyclotomic order must be positive");
  if (j < 0 || j >= s)
    throw InvalidArgument("root index " + std::to_string(j) + " out of range for order " + std::to_string(s));
  std::vector<BigInt> raw(static_cast<std::size_t>(j) + 1, BigInt(0));
  raw[static_cast<std::size_t>(j)] = 1;
  return CyclotomicElement::from_coeffs(s, std::move(raw));
}

CyclotomicElement cyc_pow(CyclotomicElement base, const BigInt& exponent) {
  if (exponent < 0) throw InvalidArgument("cyc_pow exponent must be non-negative");
  CyclotomicElement result(base.order(), BigInt(1));
  BigInt e = exponent;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

CyclotomicElement cyc_pow(const CyclotomicElement& base, unsigned long exponent) {
  return cyc_pow(base, BigInt(exponent));
}

}  // namespace sunspec
