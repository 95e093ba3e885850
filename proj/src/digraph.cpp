#include "sunspec/digraph.hpp"

#include "sunspec/errors.hpp"

#include <algorithm>

namespace sunspec {

MultiDigraph::MultiDigraph(int n) : arcs_(n, n) {
  if (n < 0) throw InvalidArgument("negative vertex count");
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) arcs_(i, j) = 0;
}

void MultiDigraph::add_arcs(int u, int v, const BigInt& count) {
  if (u < 0 || v < 0 || u >= size() || v >= size()) throw InvalidArgument("arc endpoint out of range");
  if (u == v) throw InvalidArgument("loops are not allowed");
  if (count < 0) throw InvalidArgument("negative arc multiplicity");
  arcs_(u, v) += count;
}

BigInt MultiDigraph::out_degree(int v) const {
  BigInt total = 0;
  for (Eigen::Index u = 0; u < arcs_.cols(); ++u) total += arcs_(v, u);
  return total;
}

BigInt MultiDigraph::in_degree(int v) const {
  BigInt total = 0;
  for (Eigen::Index u = 0; u < arcs_.rows(); ++u) total += arcs_(u, v);
  return total;
}

bool MultiDigraph::is_isolated(int v) const { return out_degree(v) == 0 && in_degree(v) == 0; }

std::vector<int> MultiDigraph::support() const {
  std::vector<int> out;
  for (int v = 0; v < size(); ++v)
    if (!is_isolated(v)) out.push_back(v);
  return out;
}

MultiDigraph MultiDigraph::induced(const std::vector<int>& vertices) const {
  const int m = static_cast<int>(vertices.size());
  MultiDigraph out(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i != j) out.arcs_(i, j) = arcs_(vertices[static_cast<std::size_t>(i)], vertices[static_cast<std::size_t>(j)]);
  return out;
}

bool is_balanced(const MultiDigraph& g) {
  for (int v = 0; v < g.size(); ++v)
    if (g.out_degree(v) != g.in_degree(v)) return false;
  return true;
}

BigIntMatrix laplacian(const MultiDigraph& g) {
  const int n = g.size();
  BigIntMatrix lap(n, n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) lap(u, v) = u == v ? g.out_degree(u) : BigInt(-g.mult(u, v));
  return lap;
}

BigInt arborescence_count(const MultiDigraph& g, int root) {
  const std::vector<int> live = g.support();
  if (live.empty()) throw InvalidArgument("arborescence_count on a digraph without arcs");
  if (std::find(live.begin(), live.end(), root) == live.end())
    throw InvalidArgument("arborescence root must be a non-isolated vertex");
  const BigIntMatrix lap = laplacian(g);
  std::vector<int> keep;
  for (int v : live)
    if (v != root) keep.push_back(v);
  const auto m = static_cast<Eigen::Index>(keep.size());
  BigIntMatrix minor(m, m);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < m; ++j)
      minor(i, j) = lap(keep[static_cast<std::size_t>(i)], keep[static_cast<std::size_t>(j)]);
  return ff_determinant(minor);
}

BigInt arborescence_count(const MultiDigraph& g) {
  const std::vector<int> live = g.support();
  if (live.empty()) throw InvalidArgument("arborescence_count on a digraph without arcs");
  return arborescence_count(g, live.front());
}

BigInt out_degree_product(const MultiDigraph& g) {
  BigInt prod = 1;
  for (int v : g.support()) prod *= g.out_degree(v);
  return prod;
}

}  // namespace sunspec
