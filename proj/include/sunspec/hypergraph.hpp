#pragma once

#include "sunspec/bignum.hpp"

#include <Eigen/Core>

#include <complex>
#include <string>
#include <vector>

namespace sunspec {

/// Parameters of the k-uniform sunflower with s seeds and p petals.
struct SunflowerParams {
  int k = 3;
  int s = 1;
  int p = 1;

  /// Validating constructor: k >= 2, 1 <= s <= k-1, p >= 1. Throws InvalidArgument.
  static SunflowerParams make(int k, int s, int p);

  /// Vertex count p(k-s) + s.
  int n() const { return p * (k - s) + s; }
  /// (k-1)^(k-s) - s k^(k-s-1)
  BigInt K() const;

  friend bool operator==(const SunflowerParams&, const SunflowerParams&) = default;
};

using Edge = std::vector<int>;

/// k-uniform hypergraph on vertices 1..n. Construction does not validate; call validate().
struct UniformHypergraph {
  int k = 0;
  int n = 0;
  std::vector<Edge> edges;

  /// Indices of the edges containing v.
  std::vector<int> incident_edges(int v) const;
  int degree(int v) const { return static_cast<int>(incident_edges(v).size()); }
};

struct ValidationReport {
  bool ok = true;
  std::string violation;
};

ValidationReport validate(const UniformHypergraph& h);

/// Seeds are 1..s; petal i (1-based) is s+(i-1)(k-s)+1 .. s+i(k-s); edge i is seeds + petal i.
UniformHypergraph make_sunflower(const SunflowerParams& params);

/// First vertex label of petal i (0-based petal index).
inline int petal_first_vertex(const SunflowerParams& params, int petal) {
  return params.s + petal * (params.k - params.s) + 1;
}

using ComplexVector = Eigen::VectorXcd;

/// Scale-normalized residual of the eigenvalue equations
///   lambda x_v^(k-1) = sum_{e containing v} prod_{u in e, u != v} x_u,
/// i.e. the max absolute equation defect divided by (1+|lambda|) max(1, |x|_inf^(k-1)).
/// Component i of x is vertex i+1.
double eigen_residual(const UniformHypergraph& h, std::complex<double> lambda, const ComplexVector& x);

}  // namespace sunspec
