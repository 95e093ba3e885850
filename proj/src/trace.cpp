#include "sunspec/trace.hpp"

#include "sunspec/errors.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <thread>

namespace sunspec {

namespace {

using CountKey = std::vector<std::uint16_t>;

// Depth-first walk over root-sorted sequences. Pairs are listed by root, then edge;
// a sequence may pick any pair whose root is at least the previous root.
class SequenceWalker {
 public:
  SequenceWalker(const UniformHypergraph& h, long d) : h_(h), d_(d) {
    for (int v = 1; v <= h.n; ++v) {
      root_start_.push_back(static_cast<int>(pairs_.size()));
      for (int e : h.incident_edges(v)) pairs_.push_back({v, e});
    }
    root_start_.push_back(static_cast<int>(pairs_.size()));
    out_.assign(static_cast<std::size_t>(h.n) + 1, 0);
    in_.assign(static_cast<std::size_t>(h.n) + 1, 0);
    counts_.assign(pairs_.size(), 0);
    chosen_.reserve(static_cast<std::size_t>(d));
  }

  std::size_t pair_count() const { return pairs_.size(); }
  const std::vector<RootedEdge>& pairs() const { return pairs_; }

  /// Walks every sequence whose first pair is `first`.
  template <typename Leaf>
  void walk_from(std::size_t first, Leaf&& leaf) {
    if (d_ == 0) return;
    push(first);
    descend(pairs_[first].root, leaf);
    pop(first);
  }

 private:
  void push(std::size_t idx) {
    const RootedEdge& pr = pairs_[idx];
    out_[static_cast<std::size_t>(pr.root)] += h_.k - 1;
    for (int u : h_.edges[static_cast<std::size_t>(pr.edge)])
      if (u != pr.root) ++in_[static_cast<std::size_t>(u)];
    ++counts_[idx];
    chosen_.push_back(static_cast<int>(idx));
  }

  void pop(std::size_t idx) {
    const RootedEdge& pr = pairs_[idx];
    out_[static_cast<std::size_t>(pr.root)] -= h_.k - 1;
    for (int u : h_.edges[static_cast<std::size_t>(pr.edge)])
      if (u != pr.root) --in_[static_cast<std::size_t>(u)];
    --counts_[idx];
    chosen_.pop_back();
  }

  template <typename Leaf>
  void descend(int current_root, Leaf& leaf) {
    if (static_cast<long>(chosen_.size()) == d_) {
      for (int v = 1; v <= h_.n; ++v)
        if (out_[static_cast<std::size_t>(v)] != in_[static_cast<std::size_t>(v)]) return;
      leaf(counts_, chosen_);
      return;
    }
    const auto begin = static_cast<std::size_t>(root_start_[static_cast<std::size_t>(current_root) - 1]);
    for (std::size_t idx = begin; idx < pairs_.size(); ++idx) {
      const int root = pairs_[idx].root;
      // Vertices below `root` can no longer gain out-degree.
      bool dead = false;
      for (int v = current_root; v < root && !dead; ++v)
        dead = in_[static_cast<std::size_t>(v)] > out_[static_cast<std::size_t>(v)];
      if (dead) break;
      push(idx);
      descend(root, leaf);
      pop(idx);
    }
  }

  const UniformHypergraph& h_;
  long d_;
  std::vector<RootedEdge> pairs_;
  std::vector<int> root_start_;
  std::vector<long> out_;
  std::vector<long> in_;
  CountKey counts_;
  std::vector<int> chosen_;
};

MultiDigraph digraph_from_counts(const UniformHypergraph& h, const std::vector<RootedEdge>& pairs,
                                 const CountKey& counts) {
  MultiDigraph g(h.n);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (counts[i] == 0) continue;
    const auto& pr = pairs[i];
    for (int u : h.edges[static_cast<std::size_t>(pr.edge)])
      if (u != pr.root) g.add_arcs(pr.root - 1, u - 1, counts[i]);
  }
  return g;
}

void check_cap(const UniformHypergraph& h, long d, long size_cap, BigInt* count_out = nullptr) {
  if (d < 1) throw InvalidArgument("sequence length must be positive");
  if (d > 65535) throw InvalidArgument("sequence length too large");
  const BigInt count = count_root_sorted_sequences(h, d);
  if (count > size_cap)
    throw SizeCapExceeded(count.get_str() + " root-sorted sequences exceed cap " + std::to_string(size_cap));
  if (count_out) *count_out = count;
}

}  // namespace

bool is_root_sorted(const UniformHypergraph& h, std::span<const RootedEdge> seq) {
  int prev = 0;
  for (const auto& pr : seq) {
    if (pr.root < prev) return false;
    if (pr.edge < 0 || pr.edge >= static_cast<int>(h.edges.size())) return false;
    const Edge& e = h.edges[static_cast<std::size_t>(pr.edge)];
    if (std::find(e.begin(), e.end(), pr.root) == e.end()) return false;
    prev = pr.root;
  }
  return true;
}

MultiDigraph build_Df(const UniformHypergraph& h, std::span<const RootedEdge> seq) {
  MultiDigraph g(h.n);
  for (const auto& pr : seq) {
    if (pr.edge < 0 || pr.edge >= static_cast<int>(h.edges.size()))
      throw InvalidArgument("edge index out of range");
    const Edge& e = h.edges[static_cast<std::size_t>(pr.edge)];
    if (std::find(e.begin(), e.end(), pr.root) == e.end())
      throw InvalidArgument("root " + std::to_string(pr.root) + " is not in edge " + std::to_string(pr.edge));
    for (int u : e)
      if (u != pr.root) g.add_arcs(pr.root - 1, u - 1);
  }
  return g;
}

BigInt count_root_sorted_sequences(const UniformHypergraph& h, long d) {
  if (d < 0) throw InvalidArgument("negative sequence length");
  // h_j over the first i degrees: H_i[j] = H_{i-1}[j] + deg_i * H_i[j-1].
  std::vector<BigInt> ways(static_cast<std::size_t>(d) + 1, BigInt(0));
  ways[0] = 1;
  for (int v = 1; v <= h.n; ++v) {
    const BigInt g = h.degree(v);
    for (std::size_t j = 1; j < ways.size(); ++j) ways[j] += g * ways[j - 1];
  }
  return ways.back();
}

OracleResult spectral_moment_oracle_detailed(const UniformHypergraph& h, long d, const OracleOptions& options) {
  OracleResult result;
  check_cap(h, d, options.size_cap, &result.sequences);

  const std::size_t units = SequenceWalker(h, d).pair_count();
  const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(std::max<std::size_t>(units, 1))));

  std::atomic<std::size_t> next{0};
  std::vector<std::map<CountKey, std::uint64_t>> partial(threads);
  auto worker = [&](unsigned id) {
    SequenceWalker walker(h, d);
    auto& tally = partial[id];
    for (std::size_t unit = next++; unit < units; unit = next++)
      walker.walk_from(unit, [&](const CountKey& counts, const std::vector<int>&) { ++tally[counts]; });
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned id = 0; id < threads; ++id) pool.emplace_back(worker, id);
    for (auto& t : pool) t.join();
  }

  std::map<CountKey, BigInt> merged;
  for (const auto& tally : partial)
    for (const auto& [key, n] : tally) merged[key] += BigInt(static_cast<unsigned long>(n));

  const SequenceWalker layout(h, d);
  BigRat total = 0;
  for (const auto& [key, n] : merged) {
    const MultiDigraph g = digraph_from_counts(h, layout.pairs(), key);
    result.balanced += n;
    const BigInt trees = arborescence_count(g);
    if (trees != 0) total += make_rat(trees * n, out_degree_product(g));
  }
  result.digraphs = merged.size();

  const BigRat moment = total * BigRat(BigInt(d) * ipow(h.k - 1, static_cast<unsigned long>(h.n)));
  if (!is_integral(moment))
    throw IntegralityViolation("oracle moment is not an integer: " + moment.get_str());
  result.moment = moment.get_num();
  return result;
}

BigInt spectral_moment_oracle(const UniformHypergraph& h, long d, long size_cap) {
  return spectral_moment_oracle_detailed(h, d, OracleOptions{size_cap, 1}).moment;
}

void for_each_balanced(const UniformHypergraph& h, long d, long size_cap, const BalancedVisitor& visit) {
  check_cap(h, d, size_cap);
  SequenceWalker walker(h, d);
  RootedEdgeSeq seq;
  for (std::size_t first = 0; first < walker.pair_count(); ++first) {
    walker.walk_from(first, [&](const CountKey& counts, const std::vector<int>& chosen) {
      seq.clear();
      for (int idx : chosen) seq.push_back(walker.pairs()[static_cast<std::size_t>(idx)]);
      visit(seq, digraph_from_counts(h, walker.pairs(), counts));
    });
  }
}

}  // namespace sunspec
