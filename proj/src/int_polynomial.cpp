#include "sunspec/int_polynomial.hpp"

#include "sunspec/errors.hpp"

#include <sstream>

namespace sunspec {

IntPolynomial::IntPolynomial(const BigInt& constant) { add_term(0, constant); }

IntPolynomial IntPolynomial::monomial(Exponent e, const BigInt& coeff) {
  IntPolynomial p;
  p.add_term(e, coeff);
  return p;
}

IntPolynomial IntPolynomial::from_dense(const std::vector<BigInt>& coeffs) {
  IntPolynomial p;
  for (std::size_t i = 0; i < coeffs.size(); ++i) p.add_term(static_cast<Exponent>(i), coeffs[i]);
  return p;
}

IntPolynomial::Exponent IntPolynomial::degree() const {
  return terms_.empty() ? -1 : terms_.rbegin()->first;
}

BigInt IntPolynomial::leading() const { return terms_.empty() ? BigInt(0) : terms_.rbegin()->second; }

BigInt IntPolynomial::coeff(Exponent e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? BigInt(0) : it->second;
}

std::vector<BigInt> IntPolynomial::dense() const {
  std::vector<BigInt> out(static_cast<std::size_t>(degree() + 1));
  for (const auto& [e, c] : terms_) out[static_cast<std::size_t>(e)] = c;
  return out;
}

void IntPolynomial::add_term(Exponent e, const BigInt& coeff) {
  if (e < 0) throw InvalidArgument("negative exponent in IntPolynomial");
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  return out;
}

IntPolynomial IntPolynomial::divide_exact(const IntPolynomial& divisor) const {
  if (divisor.is_zero() || divisor.leading() != 1)
    throw InvalidArgument("divide_exact requires a monic divisor");
  IntPolynomial rem = *this;
  IntPolynomial quot;
  const Exponent dd = divisor.degree();
  while (!rem.is_zero() && rem.degree() >= dd) {
    const Exponent shift = rem.degree() - dd;
    const BigInt c = rem.leading();
    quot.add_term(shift, c);
    for (const auto& [e, dc] : divisor.terms_) rem.add_term(e + shift, -c * dc);
  }
  if (!rem.is_zero()) throw IntegrityError("polynomial division left a nonzero remainder");
  return quot;
}

std::string IntPolynomial::to_string(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c < 0;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const BigInt mag = abs(c);
    if (mag != 1 || e == 0) os << mag.get_str();
    if (e >= 1) os << var;
    if (e >= 2) os << '^' << e;
  }
  return os.str();
}

}  // namespace sunspec
