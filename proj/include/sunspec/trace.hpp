#pragma once

#include "sunspec/bignum.hpp"
#include "sunspec/digraph.hpp"
#include "sunspec/hypergraph.hpp"

#include <functional>
#include <span>
#include <vector>

namespace sunspec {

/// A hyperedge rooted at one of its vertices. `root` is a vertex label (1-based),
/// `edge` an index into UniformHypergraph::edges. The ordering of the k-1 non-root
/// vertices is not represented: every such pair stands for (k-1)! tuples.
struct RootedEdge {
  int root = 0;
  int edge = 0;
  friend bool operator==(const RootedEdge&, const RootedEdge&) = default;
};

using RootedEdgeSeq = std::vector<RootedEdge>;

/// Roots non-decreasing and each root inside its edge.
bool is_root_sorted(const UniformHypergraph& h, std::span<const RootedEdge> seq);

/// Multi-digraph on all n vertices of h (vertex v at index v-1): each pair (r, e) adds
/// one arc r -> u for every u in e other than r.
MultiDigraph build_Df(const UniformHypergraph& h, std::span<const RootedEdge> seq);

/// Number of root-sorted sequences of length d: the complete homogeneous symmetric
/// polynomial h_d evaluated at the vertex degrees.
BigInt count_root_sorted_sequences(const UniformHypergraph& h, long d);

inline constexpr long kDefaultSizeCap = 10'000'000;

struct OracleOptions {
  long size_cap = kDefaultSizeCap;
  unsigned threads = 1;
};

struct OracleResult {
  BigInt moment;
  BigInt sequences;        // root-sorted sequences in the search space
  BigInt balanced;         // of those, sequences whose digraph is balanced
  std::size_t digraphs = 0;  // distinct arc-count patterns among the balanced ones
};

/// Brute-force d-th spectral moment:
///   S_d = d (k-1)^n * sum over balanced root-sorted sequences of t(D_f) / prod deg+(v).
/// Work is split across threads by the first pair; the sum is exact, so the result
/// does not depend on the schedule. Throws SizeCapExceeded before enumerating when
/// the sequence count is above the cap.
OracleResult spectral_moment_oracle_detailed(const UniformHypergraph& h, long d, const OracleOptions& options = {});

BigInt spectral_moment_oracle(const UniformHypergraph& h, long d, long size_cap = kDefaultSizeCap);

using BalancedVisitor = std::function<void(const RootedEdgeSeq&, const MultiDigraph&)>;

/// Calls `visit` for every root-sorted sequence of length d with a balanced digraph,
/// in depth-first order. Single-threaded.
void for_each_balanced(const UniformHypergraph& h, long d, long size_cap, const BalancedVisitor& visit);

}  // namespace sunspec
