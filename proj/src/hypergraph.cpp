#include "sunspec/hypergraph.hpp"

#include "sunspec/errors.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace sunspec {

SunflowerParams SunflowerParams::make(int k, int s, int p) {
  if (k < 2) throw InvalidArgument("k must be at least 2");
  if (s < 1) throw InvalidArgument("s must be at least 1");
  if (s > k - 1) throw InvalidArgument("s must be at most k-1 (every petal needs a vertex)");
  if (p < 1) throw InvalidArgument("p must be at least 1");
  return SunflowerParams{k, s, p};
}

BigInt SunflowerParams::K() const {
  return ipow(k - 1, static_cast<unsigned long>(k - s)) -
         BigInt(s) * ipow(k, static_cast<unsigned long>(k - s - 1));
}

std::vector<int> UniformHypergraph::incident_edges(int v) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (std::find(edges[i].begin(), edges[i].end(), v) != edges[i].end()) out.push_back(static_cast<int>(i));
  return out;
}

ValidationReport validate(const UniformHypergraph& h) {
  auto fail = [](std::string msg) { return ValidationReport{false, std::move(msg)}; };
  if (h.k < 1) return fail("uniformity must be positive");
  if (h.n < 0) return fail("negative vertex count");
  std::set<Edge> seen;
  for (std::size_t i = 0; i < h.edges.size(); ++i) {
    const Edge& e = h.edges[i];
    const std::string where = " in edge " + std::to_string(i + 1);
    if (static_cast<int>(e.size()) != h.k)
      return fail("edge size " + std::to_string(e.size()) + " != " + std::to_string(h.k) + where);
    for (int v : e)
      if (v < 1 || v > h.n) return fail("vertex range: " + std::to_string(v) + where);
    if (!std::is_sorted(e.begin(), e.end())) return fail("unsorted edge" + where);
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) return fail("repeated vertex" + where);
    if (!seen.insert(e).second) return fail("duplicate edge" + where);
  }
  return {};
}

UniformHypergraph make_sunflower(const SunflowerParams& params) {
  const auto& [k, s, p] = params;
  SunflowerParams::make(k, s, p);
  UniformHypergraph h{k, params.n(), {}};
  for (int i = 0; i < p; ++i) {
    Edge e;
    for (int v = 1; v <= s; ++v) e.push_back(v);
    const int first = petal_first_vertex(params, i);
    for (int v = first; v < first + (k - s); ++v) e.push_back(v);
    h.edges.push_back(std::move(e));
  }
  return h;
}

double eigen_residual(const UniformHypergraph& h, std::complex<double> lambda, const ComplexVector& x) {
  if (x.size() != h.n) throw InvalidArgument("eigenvector length does not match vertex count");
  const double inf_norm = x.size() ? x.cwiseAbs().maxCoeff() : 0.0;
  if (inf_norm == 0.0) throw InvalidArgument("eigenvector must be nonzero");

  Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(h.n);
  for (const Edge& e : h.edges) {
    for (int v : e) {
      std::complex<double> prod{1.0, 0.0};
      for (int u : e)
        if (u != v) prod *= x(u - 1);
      rhs(v - 1) += prod;
    }
  }
  double worst = 0.0;
  for (int v = 0; v < h.n; ++v) {
    std::complex<double> lhs = lambda;
    for (int j = 0; j < h.k - 1; ++j) lhs *= x(v);
    worst = std::max(worst, std::abs(lhs - rhs(v)));
  }
  const double scale = (1.0 + std::abs(lambda)) * std::max(1.0, std::pow(inf_norm, h.k - 1));
  return worst / scale;
}

}  // namespace sunspec
