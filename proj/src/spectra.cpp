#include "sunspec/spectra.hpp"

#include "sunspec/errors.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <numeric>

namespace sunspec {

namespace {

void require_k3(const SunflowerParams& params, const char* what) {
  if (params.k < 3) throw InvalidArgument(std::string(what) + " requires k >= 3");
}

BigInt to_exact_int(const BigRat& r, const std::string& what) {
  if (!is_integral(r)) throw IntegralityViolation(what + " is not an integer: " + r.get_str());
  return r.get_num();
}

// Compositions of `total` into `parts` non-negative parts, lexicographically descending.
void compositions(int total, int parts, std::vector<int>& current,
                  const std::function<void(const std::vector<int>&)>& emit) {
  if (static_cast<int>(current.size()) == parts - 1) {
    current.push_back(total);
    emit(current);
    current.pop_back();
    return;
  }
  for (int first = total; first >= 0; --first) {
    current.push_back(first);
    compositions(total - first, parts, current, emit);
    current.pop_back();
  }
}

}  // namespace

int XiClass::support() const { return std::accumulate(counts.begin(), counts.end(), 0); }

BigInt XiClass::class_size() const {
  const int t = support();
  BigInt size = binomial(static_cast<unsigned long>(p), static_cast<unsigned long>(t)) *
                factorial(static_cast<unsigned long>(t));
  for (int c : counts) size /= factorial(static_cast<unsigned long>(c));
  return size;
}

XiVector XiClass::representative() const {
  XiVector xi;
  for (int j = 0; j < s; ++j)
    for (int c = 0; c < counts[static_cast<std::size_t>(j)]; ++c) xi.emplace_back(j);
  while (static_cast<int>(xi.size()) < p) xi.emplace_back(std::nullopt);
  return xi;
}

std::vector<XiClass> xi_classes(int s, int p) {
  if (s < 1 || p < 1) throw InvalidArgument("xi_classes requires s >= 1 and p >= 1");
  std::vector<XiClass> out;
  std::vector<int> scratch;
  for (int t = 0; t <= p; ++t)
    compositions(t, s, scratch, [&](const std::vector<int>& c) { out.push_back(XiClass{s, p, c}); });
  return out;
}

CyclotomicElement class_sum(const XiClass& cls) {
  CyclotomicElement acc(cls.s);
  for (int j = 0; j < cls.s; ++j) {
    const int c = cls.counts[static_cast<std::size_t>(j)];
    if (c != 0) acc += cyc_root_of_unity(j, cls.s) * BigInt(c);
  }
  return acc;
}

CyclotomicElement xi_sum(int s, const XiVector& xi) {
  CyclotomicElement acc(s);
  for (const auto& entry : xi)
    if (entry) acc += cyc_root_of_unity(*entry, s);
  return acc;
}

std::vector<EigenFactor> eigenvalue_factors(const SunflowerParams& params) {
  require_k3(params, "eigenvalue_factors");
  const FactorCase source = params.s < params.k - 1 ? FactorCase::AllXi : FactorCase::ExtremalXi;
  std::map<CyclotomicElement, bool> seen;
  for (const auto& cls : xi_classes(params.s, params.p)) {
    if (source == FactorCase::ExtremalXi && !cls.is_extremal()) continue;
    seen.emplace(cyc_pow(class_sum(cls), static_cast<unsigned long>(params.s)), true);
  }
  FactoredCharPoly ordering{params.k, 0, {}};
  for (const auto& [c, unused] : seen) ordering.factors.push_back({c, 1});
  canonicalize(ordering);

  std::vector<EigenFactor> out;
  for (const auto& f : ordering.factors) out.push_back({f.constant, source});
  return out;
}

BigRat multiplicity_mu(const SunflowerParams& params, const XiClass& cls) {
  const int t = cls.support();
  if (t == 0) throw InvalidArgument("multiplicity_mu is defined for nonzero classes only");
  const auto& [k, s, p] = params;
  const BigInt num = ipow(params.K(), static_cast<unsigned long>(p - t)) *
                     ipow(k, static_cast<unsigned long>(t * (k - s - 1) + s - 1));
  return make_rat(num, s);
}

BigRat total_nonzero_multiplicity(const SunflowerParams& params) {
  const auto& [k, s, p] = params;
  const BigInt inner = ipow(k - 1, static_cast<unsigned long>(p * (k - s))) -
                       ipow(params.K(), static_cast<unsigned long>(p));
  return make_rat(ipow(k, static_cast<unsigned long>(s - 1)) * inner, s);
}

BigRat multiplicity_mu_zero(const SunflowerParams& params) {
  const int n = params.n();
  const BigRat lead = make_rat(BigInt(n) * ipow(params.k - 1, static_cast<unsigned long>(n - 1)), params.k);
  return lead - total_nonzero_multiplicity(params);
}

BigInt degree_of_charpoly(const SunflowerParams& params) {
  const int n = params.n();
  return BigInt(n) * ipow(params.k - 1, static_cast<unsigned long>(n - 1));
}

FactoredCharPoly char_poly_factored(const SunflowerParams& params) {
  SunflowerParams::make(params.k, params.s, params.p);
  const auto& [k, s, p] = params;
  FactoredCharPoly out{k, 0, {}};

  if (k == 2) {
    out.zero_exponent = p - 1;
    out.factors.push_back({CyclotomicElement(1, BigInt(p)), 1});
    return out;
  }

  std::map<CyclotomicElement, BigRat> weights;
  BigRat zero_part = BigRat(k) * multiplicity_mu_zero(params);
  for (const auto& cls : xi_classes(s, p)) {
    if (cls.support() == 0) continue;
    const BigRat mu = multiplicity_mu(params, cls);
    if (mu == 0) continue;
    const BigRat weight = BigRat(cls.class_size()) * mu;
    const CyclotomicElement c = cyc_pow(class_sum(cls), static_cast<unsigned long>(s));
    if (c.is_zero()) {
      zero_part += BigRat(k) * weight;
    } else {
      weights[c] += weight;
    }
  }

  out.zero_exponent = to_exact_int(zero_part, "zero-root exponent");
  if (out.zero_exponent < 0) throw IntegralityViolation("negative zero-root exponent");
  for (const auto& [c, w] : weights) {
    BigInt e = to_exact_int(w, "exponent of (x^k - " + c.to_string() + ")");
    if (e < 0) throw IntegralityViolation("negative exponent for " + c.to_string());
    out.factors.push_back({c, std::move(e)});
  }
  canonicalize(out);

  if (out.degree() != degree_of_charpoly(params))
    throw IntegrityError("degree identity failed: " + out.degree().get_str() + " vs " +
                         degree_of_charpoly(params).get_str());
  if (!is_galois_closed(out)) throw IntegrityError("factor multiset is not Galois-closed");
  return out;
}

BigInt spectral_moment_closed(const SunflowerParams& params, long d) {
  require_k3(params, "spectral_moment_closed");
  if (d < 1) throw InvalidArgument("moment order must be positive");
  const auto& [k, s, p] = params;
  if (d % k != 0) return 0;
  const unsigned long power = static_cast<unsigned long>(s) * static_cast<unsigned long>(d / k);
  const BigInt K = params.K();

  // sum over classes of class_size K^(p-t) k^(t(k-s-1)+s) (sum xi)^(sd/k), then / s.
  CyclotomicElement acc(s);
  for (const auto& cls : xi_classes(s, p)) {
    const int t = cls.support();
    if (t == 0) continue;
    const BigInt scalar = cls.class_size() * ipow(K, static_cast<unsigned long>(p - t)) *
                          ipow(k, static_cast<unsigned long>(t * (k - s - 1) + s));
    if (scalar == 0) continue;
    acc += cyc_pow(class_sum(cls), power) * scalar;
  }
  const BigRat total = acc.to_rational() / BigRat(s);
  return to_exact_int(total, "spectral moment");
}

SpectralRadius spectral_radius(const SunflowerParams& params) {
  SunflowerParams::make(params.k, params.s, params.p);
  const auto& [k, s, p] = params;
  SpectralRadius out;
  out.rho = std::pow(static_cast<double>(p), static_cast<double>(s) / k);
  out.multiplicity = ipow(k, static_cast<unsigned long>(p * (k - s) + s - 1 - p));

  const FactoredCharPoly f = char_poly_factored(params);
  const CyclotomicElement top(s, ipow(p, static_cast<unsigned long>(s)));
  const BigInt exponent = f.exponent_of(k == 2 ? CyclotomicElement(1, BigInt(p)) : top);
  if (exponent != out.multiplicity)
    throw IntegrityError("spectral radius multiplicity " + out.multiplicity.get_str() +
                         " disagrees with factored exponent " + exponent.get_str());
  return out;
}

std::complex<double> kth_root(std::complex<double> c, int k, int branch) {
  if (c == std::complex<double>{0.0, 0.0}) return c;
  const double r = std::pow(std::abs(c), 1.0 / k);
  const double arg = (std::arg(c) + 2.0 * M_PI * branch) / k;
  return std::polar(r, arg);
}

std::vector<NumericEigenvalue> numeric_eigenvalues(const SunflowerParams& params) {
  const FactoredCharPoly f = char_poly_factored(params);
  std::vector<NumericEigenvalue> out;
  if (f.zero_exponent > 0) out.push_back({{0.0, 0.0}, f.zero_exponent});
  for (const auto& factor : f.factors) {
    const std::complex<double> c = factor.constant.to_complex();
    for (int b = 0; b < f.k; ++b) out.push_back({kth_root(c, f.k, b), factor.exponent});
  }
  return out;
}

Eigenpair eigvec_construct(const SunflowerParams& params, const EigvecRecipe& recipe) {
  require_k3(params, "eigvec_construct");
  const auto& [k, s, p] = params;
  if (static_cast<int>(recipe.xi.size()) != p)
    throw InvalidArgument("xi must have exactly p = " + std::to_string(p) + " entries");
  int support = 0;
  for (const auto& entry : recipe.xi) {
    if (!entry) continue;
    if (*entry < 0 || *entry >= s)
      throw InvalidArgument("xi entry " + std::to_string(*entry) + " is not a root index mod " + std::to_string(s));
    ++support;
  }
  if (!recipe.gamma_branch.empty() && static_cast<int>(recipe.gamma_branch.size()) != p)
    throw InvalidArgument("gamma_branch must be empty or have p entries");
  if (!recipe.anchor.empty() && static_cast<int>(recipe.anchor.size()) != p)
    throw InvalidArgument("anchor must be empty or have p entries");

  const CyclotomicElement sum = xi_sum(s, recipe.xi);
  if (sum.is_zero()) throw ZeroSum("coordinate sum of xi is zero; the recipe needs a nonzero sum (0 is an eigenvalue on its own)");
  if (s == k - 1 && support != 0 && support != p)
    throw XiNotAdmissible("with s = k-1 xi must have empty or full support (extremal classes only)");

  const std::complex<double> sum_c = sum.to_complex();
  const std::complex<double> mu = kth_root(sum_c, k, recipe.mu_branch);
  const std::complex<double> lambda = kth_root(cyc_pow(sum, static_cast<unsigned long>(s)).to_complex(), k, recipe.lambda_branch);

  ComplexVector x = ComplexVector::Zero(params.n());
  for (int v = 0; v < s; ++v) x(v) = 1.0;
  const std::complex<double> mu_s1 = cpow(mu, s + 1);
  for (int i = 0; i < p; ++i) {
    const auto& entry = recipe.xi[static_cast<std::size_t>(i)];
    std::complex<double> gamma{0.0, 0.0};
    if (entry) {
      const std::complex<double> xi_i = std::polar(1.0, 2.0 * M_PI * *entry / s);
      gamma = kth_root(xi_i, k, recipe.gamma_branch.empty() ? 0 : recipe.gamma_branch[static_cast<std::size_t>(i)]);
    }
    const int anchor = recipe.anchor.empty() ? 0 : recipe.anchor[static_cast<std::size_t>(i)];
    if (anchor < 0 || anchor >= k - s) throw InvalidArgument("anchor offset outside petal");
    const int first = petal_first_vertex(params, i) - 1;
    for (int off = 0; off < k - s; ++off) {
      x(first + off) = off == anchor ? lambda * cpow(gamma, s + 1) / mu_s1 : gamma / mu;
    }
  }
  return {lambda, std::move(x)};
}

}  // namespace sunspec
