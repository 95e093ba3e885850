#include "sunspec/digraph.hpp"
#include "sunspec/errors.hpp"
#include "sunspec/hypergraph.hpp"
#include "sunspec/profiles.hpp"
#include "sunspec/spectra.hpp"
#include "sunspec/trace.hpp"

#include <doctest.h>

#include <functional>
#include <random>

using namespace sunspec;

namespace {

MultiDigraph from_arcs(int n, std::initializer_list<std::tuple<int, int, int>> arcs) {
  MultiDigraph g(n);
  for (auto [u, v, c] : arcs) g.add_arcs(u, v, c);
  return g;
}

// In-arborescences towards `root` by trying every parent choice; test-only oracle.
BigInt brute_arborescences(const MultiDigraph& g, int root) {
  std::vector<int> verts;
  for (int v : g.support())
    if (v != root) verts.push_back(v);
  std::vector<int> parent(static_cast<std::size_t>(g.size()), -1);
  BigInt total = 0;
  std::function<void(std::size_t, BigInt)> go = [&](std::size_t i, BigInt weight) {
    if (i == verts.size()) {
      for (int v : verts) {
        int cur = v;
        for (std::size_t steps = 0; cur != root; ++steps) {
          if (steps > verts.size()) return;
          cur = parent[static_cast<std::size_t>(cur)];
        }
      }
      total += weight;
      return;
    }
    const int v = verts[i];
    for (int u = 0; u < g.size(); ++u)
      if (g.mult(v, u) > 0) {
        parent[static_cast<std::size_t>(v)] = u;
        go(i + 1, weight * g.mult(v, u));
      }
  };
  go(0, 1);
  return total;
}

MultiDigraph random_balanced(std::mt19937_64& rng, int n) {
  // Union of random closed walks is balanced.
  MultiDigraph g(n);
  std::uniform_int_distribution<int> vert(0, n - 1);
  for (int walk = 0; walk < 3; ++walk) {
    const int len = 2 + walk;
    std::vector<int> cyc;
    while (static_cast<int>(cyc.size()) < len) {
      const int v = vert(rng);
      if (cyc.empty() || cyc.back() != v) cyc.push_back(v);
    }
    if (cyc.front() == cyc.back()) cyc.pop_back();
    if (cyc.size() < 2) continue;
    for (std::size_t i = 0; i < cyc.size(); ++i) g.add_arcs(cyc[i], cyc[(i + 1) % cyc.size()]);
  }
  return g;
}

// Every d-tuple of (root, edge) pairs, filtered to root-sorted ones.
long brute_sequence_count(const UniformHypergraph& h, long d) {
  std::vector<RootedEdge> pairs;
  for (int v = 1; v <= h.n; ++v)
    for (int e : h.incident_edges(v)) pairs.push_back({v, e});
  std::vector<std::size_t> idx(static_cast<std::size_t>(d), 0);
  long count = 0;
  while (true) {
    bool sorted = true;
    for (std::size_t i = 1; i < idx.size(); ++i) sorted = sorted && pairs[idx[i - 1]].root <= pairs[idx[i]].root;
    count += sorted;
    std::size_t i = 0;
    while (i < idx.size() && ++idx[i] == pairs.size()) idx[i++] = 0;
    if (i == idx.size()) return count;
  }
}

}  // namespace

TEST_SUITE("digraph") {
  TEST_CASE("build_Df examples") {
    const auto h = make_sunflower(SunflowerParams::make(3, 1, 1));
    const RootedEdgeSeq all{{1, 0}, {2, 0}, {3, 0}};
    const auto g = build_Df(h, all);
    for (int u = 0; u < 3; ++u)
      for (int v = 0; v < 3; ++v) CHECK(g.mult(u, v) == (u == v ? 0 : 1));

    const RootedEdgeSeq same{{1, 0}, {1, 0}, {1, 0}};
    const auto star = build_Df(h, same);
    CHECK(star.mult(0, 1) == 3);
    CHECK(star.mult(0, 2) == 3);
    CHECK(star.out_degree(1) == 0);
    CHECK(star.in_degree(1) == 3);

    const auto h2 = make_sunflower(SunflowerParams::make(3, 2, 2));
    const RootedEdgeSeq mixed{{1, 0}, {2, 1}, {3, 0}, {4, 1}};
    const auto g2 = build_Df(h2, mixed);
    CHECK(g2.mult(2, 0) == 1);
    CHECK(g2.mult(2, 1) == 1);
    CHECK(g2.mult(0, 1) == 1);
    CHECK(g2.mult(0, 2) == 1);
    CHECK(g2.mult(1, 0) == 1);
    CHECK(g2.mult(1, 3) == 1);
    CHECK(g2.out_degree(3) == 2);
    CHECK(g2.mult(2, 3) == 0);
    CHECK(is_root_sorted(h2, mixed));
    CHECK_FALSE(is_root_sorted(h2, RootedEdgeSeq{{3, 0}, {1, 0}}));
    CHECK_FALSE(is_root_sorted(h2, RootedEdgeSeq{{3, 1}}));
  }

  TEST_CASE("balance") {
    CHECK(is_balanced(from_arcs(3, {{0, 1, 1}, {0, 2, 1}, {1, 0, 1}, {1, 2, 1}, {2, 0, 1}, {2, 1, 1}})));
    CHECK_FALSE(is_balanced(from_arcs(2, {{0, 1, 1}})));
    CHECK(is_balanced(from_arcs(4, {{0, 1, 1}, {1, 0, 1}, {2, 3, 1}, {3, 2, 1}})));
    MultiDigraph g(2);
    CHECK_THROWS_AS(g.add_arcs(1, 1), InvalidArgument);
  }

  TEST_CASE("arborescence examples") {
    CHECK(arborescence_count(from_arcs(3, {{0, 1, 1}, {0, 2, 1}, {1, 0, 1}, {1, 2, 1}, {2, 0, 1}, {2, 1, 1}})) == 3);
    CHECK(arborescence_count(from_arcs(2, {{0, 1, 1}, {1, 0, 1}})) == 1);
    CHECK(arborescence_count(from_arcs(4, {{0, 1, 1}, {1, 0, 1}, {2, 3, 1}, {3, 2, 1}})) == 0);
    CHECK_THROWS_AS(arborescence_count(MultiDigraph(3)), InvalidArgument);
    // isolated vertices are ignored
    CHECK(arborescence_count(from_arcs(5, {{1, 3, 2}, {3, 1, 2}})) == 2);
  }

  TEST_CASE("matrix-tree matches brute force and is root independent") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 150; ++trial) {
      const int n = 3 + trial % 4;
      const auto g = random_balanced(rng, n);
      REQUIRE(is_balanced(g));
      const auto sup = g.support();
      if (sup.empty()) continue;
      const BigInt first = arborescence_count(g);
      for (int root : sup) {
        CHECK(arborescence_count(g, root) == first);
        CHECK(brute_arborescences(g, root) == first);
      }
    }
  }
}

TEST_SUITE("oracle") {
  TEST_CASE("sequence counts") {
    for (int k = 3; k <= 4; ++k)
      for (int s = 1; s < k; ++s)
        for (int p = 1; p <= 3; ++p) {
          const auto h = make_sunflower(SunflowerParams::make(k, s, p));
          for (long d = 1; d <= 4; ++d) CHECK(count_root_sorted_sequences(h, d) == brute_sequence_count(h, d));
        }
  }

  TEST_CASE("examples") {
    CHECK(spectral_moment_oracle(make_sunflower(SunflowerParams::make(3, 1, 1)), 3) == 9);
    CHECK(spectral_moment_oracle(make_sunflower(SunflowerParams::make(3, 1, 2)), 3) == 72);
    for (int k = 3; k <= 4; ++k)
      for (int s = 1; s < k; ++s)
        for (int p = 1; p <= 2; ++p)
          for (long d = 1; d < 2L * k; ++d)
            if (d % k != 0) CHECK(spectral_moment_oracle(make_sunflower(SunflowerParams::make(k, s, p)), d) == 0);
  }

  TEST_CASE("single balanced sequence of S(3,1,1) at d=3") {
    const auto r = spectral_moment_oracle_detailed(make_sunflower(SunflowerParams::make(3, 1, 1)), 3);
    CHECK(r.balanced == 1);
    CHECK(r.digraphs == 1);
    CHECK(r.sequences == 10);
  }

  TEST_CASE("agrees with the closed form") {
    for (int k = 3; k <= 4; ++k)
      for (int s = 1; s < k; ++s)
        for (int p = 1; p <= 3; ++p) {
          const auto params = SunflowerParams::make(k, s, p);
          const auto h = make_sunflower(params);
          for (long d = k; d <= 2L * k; d += k) {
            if (count_root_sorted_sequences(h, d) > 200000) continue;
            CAPTURE(k);
            CAPTURE(s);
            CAPTURE(p);
            CAPTURE(d);
            CHECK(spectral_moment_oracle(h, d) == spectral_moment_closed(params, d));
          }
        }
  }

  TEST_CASE("size cap") {
    const auto h = make_sunflower(SunflowerParams::make(4, 1, 4));
    CHECK_THROWS_AS(spectral_moment_oracle(h, 8, 1000), SizeCapExceeded);
  }

  TEST_CASE("thread count does not change the result") {
    const auto h = make_sunflower(SunflowerParams::make(3, 1, 3));
    const auto one = spectral_moment_oracle_detailed(h, 6, {kDefaultSizeCap, 1});
    const auto four = spectral_moment_oracle_detailed(h, 6, {kDefaultSizeCap, 4});
    CHECK(one.moment == four.moment);
    CHECK(one.balanced == four.balanced);
    CHECK(one.digraphs == four.digraphs);
  }

  TEST_CASE("balanced sequence structure") {
    for (int k = 3; k <= 4; ++k)
      for (int s = 1; s < k; ++s) {
        const auto params = SunflowerParams::make(k, s, 2);
        const auto h = make_sunflower(params);
        for (long d = k; d <= 2L * k; d += k) {
          if (count_root_sorted_sequences(h, d) > 200000) continue;
          for_each_balanced(h, d, kDefaultSizeCap, [&](const RootedEdgeSeq& seq, const MultiDigraph& g) {
            BigInt arcs = 0;
            for (int v = 0; v < g.size(); ++v) arcs += g.out_degree(v);
            CHECK(arcs == d * (k - 1));

            std::vector<long> roots(static_cast<std::size_t>(h.n + 1), 0);
            for (const auto& pe : seq) ++roots[static_cast<std::size_t>(pe.root)];
            if (arborescence_count(g) == 0) return;
            for (int v = 1; v <= s; ++v) CHECK(roots[static_cast<std::size_t>(v)] == d / k);
            for (int i = 0; i < params.p; ++i) {
              const int first = petal_first_vertex(params, i);
              for (int v = first; v < first + k - s; ++v)
                CHECK(roots[static_cast<std::size_t>(v)] == roots[static_cast<std::size_t>(first)]);
            }
          });
        }
      }
  }
}

TEST_SUITE("profiles") {
  EulerianProfile profile(int k, int s, long d, std::vector<int> m, std::vector<std::vector<int>> q) {
    EulerianProfile pr{k, s, d, Eigen::VectorXi(static_cast<Eigen::Index>(m.size())),
                       Eigen::MatrixXi(s, static_cast<Eigen::Index>(m.size()))};
    for (std::size_t i = 0; i < m.size(); ++i) pr.m(static_cast<Eigen::Index>(i)) = m[i];
    for (int r = 0; r < s; ++r)
      for (std::size_t c = 0; c < m.size(); ++c) pr.Q(r, static_cast<Eigen::Index>(c)) = q[static_cast<std::size_t>(r)][c];
    return pr;
  }

  TEST_CASE("build_DmQ examples") {
    const auto g = build_DmQ(profile(3, 1, 3, {1}, {{1}}));
    const auto h = make_sunflower(SunflowerParams::make(3, 1, 1));
    CHECK(g == build_Df(h, RootedEdgeSeq{{1, 0}, {2, 0}, {3, 0}}));

    const auto g2 = build_DmQ(profile(3, 2, 6, {1, 1}, {{1, 1}, {1, 1}}));
    CHECK(g2.mult(0, 1) == 2);
    CHECK(g2.mult(1, 0) == 2);
    for (int v = 2; v < 4; ++v)
      for (int seed = 0; seed < 2; ++seed) {
        CHECK(g2.mult(v, seed) == 1);
        CHECK(g2.mult(seed, v) == 1);
      }
    CHECK(g2.mult(2, 3) == 0);
    CHECK(is_balanced(g2));

    const auto g3 = build_DmQ(profile(3, 1, 6, {2}, {{2}}));
    CHECK(g3.out_degree(0) == 4);
    CHECK_THROWS_AS(build_DmQ(profile(3, 1, 3, {1}, {{2}})), ConstraintViolation);
  }

  TEST_CASE("constraint system") {
    CHECK_FALSE(profile(3, 1, 3, {1}, {{1}}).violation());
    CHECK(profile(3, 1, 6, {1}, {{2}}).violation());
    CHECK(profile(3, 2, 6, {1, 1}, {{2, 0}, {0, 1}}).violation());
    CHECK(enumerate_profiles(3, 1, 3, 2).empty());
    CHECK(enumerate_profiles(3, 1, 3, 1).size() == 1);
    // m = (1,1); 2x2 matrices with row and column sums 2
    CHECK(enumerate_profiles(3, 2, 6, 2).size() == 3);
  }

  TEST_CASE("realized profiles reproduce D(m,Q)") {
    for (int k = 3; k <= 4; ++k)
      for (int s = 1; s < k; ++s)
        for (long d = k; d <= 3L * k; d += k)
          for (int t = 1; t <= d / k && t <= 3; ++t)
            for (const auto& pr : enumerate_profiles(k, s, d, t)) {
              const auto h = make_sunflower(SunflowerParams::make(k, s, t));
              RootedEdgeSeq seq;
              for (auto [root, edge] : realize_profile(pr)) seq.push_back({root, edge});
              CHECK(is_root_sorted(h, seq));
              CHECK(build_Df(h, seq) == build_DmQ(pr));
            }
  }

  TEST_CASE("tree and degree formulas") {
    auto r = verify_lemma35b(profile(3, 1, 3, {1}, {{1}}), 1);
    CHECK(r.trees_counted == 3);
    CHECK(r.degree_product == 8);
    CHECK(r.ok());
    r = verify_lemma35b(profile(3, 2, 6, {1, 1}, {{1, 1}, {1, 1}}), 2);
    CHECK(r.trees_formula == 12);
    CHECK(r.ok());
    for (int k = 3; k <= 5; ++k)
      for (int s = 1; s < k; ++s)
        for (long d = k; d <= 3L * k; d += k)
          for (int t = 1; t <= d / k; ++t)
            for (const auto& pr : enumerate_profiles(k, s, d, t)) CHECK(verify_lemma35b(pr, t).ok());
  }

  TEST_CASE("two-sided characterization") {
    auto r = verify_prop34(SunflowerParams::make(3, 1, 1), 3, kDefaultSizeCap);
    CHECK(r.ok());
    CHECK(r.constructed.size() == 1);
    r = verify_prop34(SunflowerParams::make(3, 1, 2), 3, kDefaultSizeCap);
    CHECK(r.ok());
    CHECK(r.observed == r.constructed);
    r = verify_prop34(SunflowerParams::make(3, 2, 2), 6, kDefaultSizeCap);
    CHECK(r.ok());
    // t = 1: Q = [[2],[2]]; t = 2: three Q matrices, two of which swap petals
    CHECK(r.constructed.size() == 3);
  }

  TEST_CASE("sub-sunflower supports") {
    CHECK(subsunflower_supports(SunflowerParams::make(3, 1, 2), 3, kDefaultSizeCap) == std::set<int>{1});
    CHECK(subsunflower_supports(SunflowerParams::make(3, 1, 2), 6, kDefaultSizeCap) == std::set<int>{1, 2});
    CHECK(subsunflower_supports(SunflowerParams::make(3, 2, 2), 3, kDefaultSizeCap) == std::set<int>{1});
  }

  TEST_CASE("sampling is deterministic and valid") {
    std::mt19937_64 a(5), b(5);
    for (int i = 0; i < 20; ++i) {
      const auto x = sample_profile(a, 4, 2, 12, 3);
      const auto y = sample_profile(b, 4, 2, 12, 3);
      CHECK(x.key() == y.key());
      CHECK_FALSE(x.violation());
    }
  }
}
