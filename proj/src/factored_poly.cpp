#include "sunspec/factored_poly.hpp"

#include "sunspec/errors.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <tuple>

namespace sunspec {

namespace {

CyclotomicElement orbit_key(const CyclotomicElement& c) {
  CyclotomicElement best = c;
  for (int a = 2; a < c.order(); ++a) {
    if (std::gcd(a, c.order()) != 1) continue;
    CyclotomicElement g = c.galois(a);
    if (g < best) best = std::move(g);
  }
  return best;
}

std::vector<CyclotomicElement> binomial_power(const CyclotomicElement& c, unsigned long e) {
  // (y - c)^e = sum_j C(e, j) (-c)^(e-j) y^j
  std::vector<CyclotomicElement> out(e + 1, CyclotomicElement(c.order()));
  const CyclotomicElement neg = -c;
  CyclotomicElement power(c.order(), BigInt(1));
  for (unsigned long i = 0; i <= e; ++i) {
    out[e - i] = power * binomial(e, i);
    if (i < e) power *= neg;
  }
  return out;
}

std::vector<CyclotomicElement> multiply(const std::vector<CyclotomicElement>& a,
                                        const std::vector<CyclotomicElement>& b) {
  const int order = a.front().order();
  std::vector<CyclotomicElement> out(a.size() + b.size() - 1, CyclotomicElement(order));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j].is_zero()) continue;
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

}  // namespace

BigInt FactoredCharPoly::factor_multiplicity() const {
  BigInt total = 0;
  for (const auto& f : factors) total += f.exponent;
  return total;
}

BigInt FactoredCharPoly::degree() const { return zero_exponent + BigInt(k) * factor_multiplicity(); }

BigInt FactoredCharPoly::exponent_of(const CyclotomicElement& c) const {
  for (const auto& f : factors)
    if (f.constant == c) return f.exponent;
  return 0;
}

std::string FactoredCharPoly::to_string() const {
  std::vector<std::string> parts;
  if (zero_exponent == 1) {
    parts.emplace_back("x");
  } else if (zero_exponent > 1) {
    parts.push_back("x^" + zero_exponent.get_str());
  }
  const std::string xk = k == 1 ? "x" : "x^" + std::to_string(k);
  for (const auto& f : factors) {
    std::string body;
    if (f.constant.is_rational()) {
      const BigInt& c = f.constant.coeffs()[0];
      body = "(" + xk + (c < 0 ? " + " : " - ") + BigInt(abs(c)).get_str() + ")";
    } else {
      body = "(" + xk + " - " + f.constant.to_string() + ")";
    }
    if (f.exponent != 1) body += "^" + f.exponent.get_str();
    parts.push_back(std::move(body));
  }
  if (parts.empty()) return "1";
  std::string out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out += " * " + parts[i];
  return out;
}

void canonicalize(FactoredCharPoly& f) {
  auto key = [](const PolyFactor& x) {
    const bool irrational = !x.constant.is_rational();
    return std::make_tuple(irrational, irrational ? orbit_key(x.constant) : x.constant, x.constant);
  };
  std::stable_sort(f.factors.begin(), f.factors.end(),
                   [&](const PolyFactor& a, const PolyFactor& b) {
                     const auto ka = key(a);
                     const auto kb = key(b);
                     if (std::get<0>(ka) != std::get<0>(kb)) return !std::get<0>(ka);
                     if (!std::get<0>(ka)) return a.constant.coeffs()[0] < b.constant.coeffs()[0];
                     if (std::get<1>(ka) < std::get<1>(kb)) return true;
                     if (std::get<1>(kb) < std::get<1>(ka)) return false;
                     return a.constant < b.constant;
                   });
}

bool is_galois_closed(const FactoredCharPoly& f) {
  std::map<CyclotomicElement, BigInt> by_constant;
  for (const auto& x : f.factors) by_constant[x.constant] += x.exponent;
  for (const auto& [c, e] : by_constant) {
    for (int a = 2; a < c.order(); ++a) {
      if (std::gcd(a, c.order()) != 1) continue;
      auto it = by_constant.find(c.galois(a));
      if (it == by_constant.end() || it->second != e) return false;
    }
  }
  return true;
}

BigRat factored_power_sum(const FactoredCharPoly& f, long d) {
  if (d < 1) throw InvalidArgument("power sum order must be positive");
  if (d % f.k != 0 || f.factors.empty()) return BigRat(0);
  const unsigned long q = static_cast<unsigned long>(d / f.k);
  const int order = f.factors.front().constant.order();
  CyclotomicElement acc(order);
  for (const auto& x : f.factors) acc += cyc_pow(x.constant, q) * x.exponent;
  acc *= BigInt(f.k);
  return acc.to_rational();
}

IntPolynomial expand_factored(const FactoredCharPoly& f, long degree_cap) {
  const BigInt total = f.degree();
  if (total > degree_cap || !total.fits_slong_p())
    throw DegreeCapExceeded("expanded degree " + total.get_str() + " exceeds cap " +
                            std::to_string(degree_cap));
  const int order = f.factors.empty() ? 1 : f.factors.front().constant.order();

  // Work in y = x^k; coefficients live in Z[zeta_s] until the end.
  std::vector<CyclotomicElement> acc{CyclotomicElement(order, BigInt(1))};
  for (const auto& x : f.factors) {
    if (x.exponent == 0) continue;
    acc = multiply(acc, binomial_power(x.constant, x.exponent.get_ui()));
  }

  IntPolynomial out;
  const long shift = f.zero_exponent.get_si();
  for (std::size_t j = 0; j < acc.size(); ++j) {
    const BigRat c = acc[j].to_rational();
    out.add_term(shift + static_cast<long>(j) * f.k, c.get_num());
  }
  return out;
}

namespace {

using RatPoly = std::vector<BigRat>;

void trim(RatPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

RatPoly derivative(const RatPoly& a) {
  RatPoly out;
  for (std::size_t i = 1; i < a.size(); ++i) out.push_back(a[i] * static_cast<long>(i));
  trim(out);
  return out;
}

// Quotient and remainder; b must be nonzero.
std::pair<RatPoly, RatPoly> divmod(RatPoly a, const RatPoly& b) {
  if (a.size() < b.size()) return {RatPoly{}, a};
  RatPoly q(a.size() - b.size() + 1);
  for (std::size_t top = a.size(); top-- >= b.size();) {
    const BigRat c = a[top] / b.back();
    const std::size_t shift = top - (b.size() - 1);
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
    if (shift == 0) break;
  }
  trim(a);
  trim(q);
  return {q, a};
}

RatPoly monic(RatPoly a) {
  const BigRat lead = a.back();
  for (auto& c : a) c /= lead;
  return a;
}

RatPoly gcd(RatPoly a, RatPoly b) {
  while (!b.empty()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

RatPoly sub(RatPoly a, const RatPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// Yun's algorithm: pairs (square-free factor, multiplicity).
std::vector<std::pair<RatPoly, int>> squarefree(const RatPoly& f) {
  std::vector<std::pair<RatPoly, int>> out;
  const RatPoly df = derivative(f);
  const RatPoly a0 = gcd(f, df);
  RatPoly b = divmod(f, a0).first;
  RatPoly c = divmod(df, a0).first;
  RatPoly d = sub(c, derivative(b));
  for (int i = 1; b.size() > 1; ++i) {
    const RatPoly a = gcd(b, d);
    b = divmod(b, a).first;
    c = divmod(d, a).first;
    d = sub(c, derivative(b));
    if (a.size() > 1) out.emplace_back(a, i);
  }
  return out;
}

std::vector<std::complex<double>> companion_roots(const RatPoly& a) {
  const long deg = static_cast<long>(a.size()) - 1;
  if (deg < 1) return {};
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(deg, deg);
  for (long i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;
  for (long j = 0; j < deg; ++j) companion(j, deg - 1) = -BigRat(a[j] / a.back()).get_d();
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

}  // namespace

std::vector<std::complex<double>> numeric_roots(const IntPolynomial& poly) {
  if (poly.is_zero()) throw InvalidArgument("zero polynomial has no finite root set");
  const auto low = poly.terms().begin()->first;
  std::vector<std::complex<double>> roots(static_cast<std::size_t>(low), {0.0, 0.0});
  if (poly.degree() == low) return roots;

  RatPoly reduced;
  for (auto e = low; e <= poly.degree(); ++e) reduced.emplace_back(poly.coeff(e));
  for (const auto& [part, mult] : squarefree(reduced))
    for (const auto& r : companion_roots(part)) roots.insert(roots.end(), static_cast<std::size_t>(mult), r);
  return roots;
}

std::complex<double> numeric_power_sum(const IntPolynomial& poly, long d) {
  std::complex<double> total{0.0, 0.0};
  for (const auto& r : numeric_roots(poly)) total += cpow(r, d);
  return total;
}

}  // namespace sunspec
