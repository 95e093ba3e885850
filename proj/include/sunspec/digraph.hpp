#pragma once

#include "sunspec/bignum.hpp"
#include "sunspec/determinant.hpp"

namespace sunspec {

/// Multi-digraph on vertices 0..n-1 stored as a dense arc-multiplicity matrix:
/// arcs(u, v) is the number of arcs u -> v. The diagonal is always zero.
class MultiDigraph {
 public:
  MultiDigraph() = default;
  explicit MultiDigraph(int n);

  int size() const { return static_cast<int>(arcs_.rows()); }
  const BigIntMatrix& arcs() const { return arcs_; }
  const BigInt& mult(int u, int v) const { return arcs_(u, v); }

  /// Adds `count` parallel arcs u -> v; u == v is rejected.
  void add_arcs(int u, int v, const BigInt& count = 1);

  BigInt out_degree(int v) const;
  BigInt in_degree(int v) const;
  bool is_isolated(int v) const;
  /// Vertices with at least one incident arc, ascending.
  std::vector<int> support() const;

  /// Induced sub-digraph on `vertices`, relabeled 0..|vertices|-1 in the given order.
  MultiDigraph induced(const std::vector<int>& vertices) const;

  friend bool operator==(const MultiDigraph& a, const MultiDigraph& b) {
    return a.arcs_.rows() == b.arcs_.rows() && (a.arcs_.rows() == 0 || a.arcs_ == b.arcs_);
  }

 private:
  BigIntMatrix arcs_;
};

/// deg+(v) = deg-(v) at every vertex. Connectivity is not examined.
bool is_balanced(const MultiDigraph& g);

/// Out-degree Laplacian: L(v, v) = deg+(v), L(u, v) = -mult(u, v).
BigIntMatrix laplacian(const MultiDigraph& g);

/// Matrix-Tree count on the non-isolated vertices with `root` deleted: the number of
/// spanning arborescences oriented towards `root`. Zero when the support is disconnected.
BigInt arborescence_count(const MultiDigraph& g, int root);

/// Same, rooted at the first non-isolated vertex. Throws InvalidArgument if every vertex
/// is isolated.
BigInt arborescence_count(const MultiDigraph& g);

/// Product of out-degrees over non-isolated vertices.
BigInt out_degree_product(const MultiDigraph& g);

}  // namespace sunspec
