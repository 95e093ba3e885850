#pragma once

#include "sunspec/bignum.hpp"
#include "sunspec/digraph.hpp"
#include "sunspec/hypergraph.hpp"

#include <Eigen/Core>

#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace sunspec {

/// Root counts of a balanced sequence over a sunflower with t used petals:
/// m(i) is how often each vertex of petal i is a root, Q(v, i) how often seed v roots
/// edge i.
struct EulerianProfile {
  int k = 3;
  int s = 1;
  long d = 3;
  Eigen::VectorXi m;
  Eigen::MatrixXi Q;  // s x t

  int petals() const { return static_cast<int>(m.size()); }

  /// Empty when sum m = d/k, every row of Q sums to d/k and column i sums to s m(i).
  std::optional<std::string> violation() const;

  /// Petals sorted by (m(i), column i of Q); two profiles give isomorphic digraphs
  /// exactly when their canonical forms agree.
  EulerianProfile canonical() const;

  /// Flattened (k, s, d, t, m..., Q column-major...) for ordering and set membership.
  std::vector<long> key() const;

  std::string to_string() const;
};

/// Seeds take labels 0..s-1 and petal i takes the next k-s labels, matching the sunflower
/// vertex layout. Throws ConstraintViolation on an invalid profile.
MultiDigraph build_DmQ(const EulerianProfile& profile);

/// Every profile with t petals for the given (k, s, d); k must divide d.
std::vector<EulerianProfile> enumerate_profiles(int k, int s, long d, int t);

/// Rooted-edge sequence on S(k, s, p >= t) realizing the profile on petals 0..t-1:
/// m(i) copies of edge i rooted at each vertex of petal i, Q(v, i) copies rooted at seed v.
std::vector<std::pair<int, int>> realize_profile(const EulerianProfile& profile);

struct Lemma35bReport {
  BigInt trees_counted;
  BigInt trees_formula;
  BigInt degree_product;
  BigInt degree_product_formula;
  bool ok() const { return trees_counted == trees_formula && degree_product == degree_product_formula; }
};

/// Compares the Matrix-Tree count and the direct out-degree product of D(m, Q) with
///   t(D) = d^(s-1) s^(p-1) k^(p(k-s-1)) prod m_i^(k-s)
///   prod deg+ = (d/k)^s (k-1)^(kp-sp+s) prod m_i^(k-s)
/// where p = p_used must equal the profile's petal count and satisfy p <= d/k.
Lemma35bReport verify_lemma35b(const EulerianProfile& profile, int p_used);

struct Prop34Report {
  std::size_t balanced_sequences = 0;
  std::size_t profiles_constructed = 0;
  std::set<std::vector<long>> observed;     // canonical keys seen in enumeration
  std::set<std::vector<long>> constructed;  // canonical keys from the constraint system
  std::vector<std::string> counterexamples;
  bool ok() const { return counterexamples.empty(); }
};

/// Two-sided check of the balanced-digraph characterization on S(k, s, p):
/// every balanced D_f is D(m, Q) for a profile meeting the constraints, and every such
/// profile is realized by some sequence. Requires k | d.
Prop34Report verify_prop34(const SunflowerParams& params, long d, long size_cap);

/// Distinct numbers of edges used by balanced sequences of length d.
std::set<int> observed_supports(const SunflowerParams& params, long d, long size_cap);

/// observed_supports, asserted equal to {1, ..., min(d/k, p)} (IntegrityError otherwise).
std::set<int> subsunflower_supports(const SunflowerParams& params, long d, long size_cap);

/// Uniform draw from enumerate_profiles(k, s, d, t).
EulerianProfile sample_profile(std::mt19937_64& rng, int k, int s, long d, int t);

}  // namespace sunspec
