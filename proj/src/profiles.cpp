#include "sunspec/profiles.hpp"

#include "sunspec/errors.hpp"
#include "sunspec/trace.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace sunspec {

namespace {

void require_divisible(int k, long d) {
  if (d < 1 || d % k != 0) throw InvalidArgument("k must divide d");
}

void positive_compositions(long total, int parts, std::vector<int>& cur, const std::function<void()>& emit) {
  if (static_cast<int>(cur.size()) == parts - 1) {
    if (total < 1) return;
    cur.push_back(static_cast<int>(total));
    emit();
    cur.pop_back();
    return;
  }
  const long rest = parts - static_cast<long>(cur.size()) - 1;
  for (long first = 1; first <= total - rest; ++first) {
    cur.push_back(static_cast<int>(first));
    positive_compositions(total - first, parts, cur, emit);
    cur.pop_back();
  }
}

// Fills Q cell by cell, row-major, honoring row sums and remaining column capacities.
void fill_matrix(Eigen::MatrixXi& Q, Eigen::VectorXi& col_left, int row, int col, int row_left, int row_sum,
                 const std::function<void()>& emit) {
  const int rows = static_cast<int>(Q.rows());
  const int cols = static_cast<int>(Q.cols());
  if (row == rows) {
    if (col_left.isZero()) emit();
    return;
  }
  if (col == cols - 1) {
    if (row_left > col_left(col)) return;
    Q(row, col) = row_left;
    col_left(col) -= row_left;
    fill_matrix(Q, col_left, row + 1, 0, row_sum, row_sum, emit);
    col_left(col) += row_left;
    return;
  }
  for (int v = std::min(row_left, col_left(col)); v >= 0; --v) {
    Q(row, col) = v;
    col_left(col) -= v;
    fill_matrix(Q, col_left, row, col + 1, row_left - v, row_sum, emit);
    col_left(col) += v;
  }
}

}  // namespace

std::optional<std::string> EulerianProfile::violation() const {
  if (k < 2 || s < 1 || s > k - 1) return "invalid (k, s)";
  if (d < 1 || d % k != 0) return "k does not divide d";
  const long q = d / k;
  if (m.size() < 1) return "no petals";
  if (Q.rows() != s || Q.cols() != m.size()) return "Q must be s x t";
  if ((m.array() < 1).any()) return "m must be positive";
  if ((Q.array() < 0).any()) return "Q must be non-negative";
  if (m.sum() != q) return "sum of m is " + std::to_string(m.sum()) + ", expected d/k = " + std::to_string(q);
  for (int v = 0; v < s; ++v)
    if (Q.row(v).sum() != q) return "row " + std::to_string(v) + " of Q does not sum to d/k";
  for (int i = 0; i < m.size(); ++i)
    if (Q.col(i).sum() != s * m(i)) return "column " + std::to_string(i) + " of Q does not sum to s*m";
  return std::nullopt;
}

EulerianProfile EulerianProfile::canonical() const {
  const int t = petals();
  std::vector<int> order(static_cast<std::size_t>(t));
  std::iota(order.begin(), order.end(), 0);
  auto column = [&](int i) {
    std::vector<int> c{m(i)};
    for (int v = 0; v < Q.rows(); ++v) c.push_back(Q(v, i));
    return c;
  };
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return column(a) < column(b); });
  EulerianProfile out{k, s, d, Eigen::VectorXi(t), Eigen::MatrixXi(Q.rows(), t)};
  for (int j = 0; j < t; ++j) {
    out.m(j) = m(order[static_cast<std::size_t>(j)]);
    out.Q.col(j) = Q.col(order[static_cast<std::size_t>(j)]);
  }
  return out;
}

std::vector<long> EulerianProfile::key() const {
  std::vector<long> out{k, s, d, petals()};
  for (int i = 0; i < m.size(); ++i) out.push_back(m(i));
  for (int i = 0; i < Q.cols(); ++i)
    for (int v = 0; v < Q.rows(); ++v) out.push_back(Q(v, i));
  return out;
}

std::string EulerianProfile::to_string() const {
  std::ostringstream os;
  os << "(k=" << k << ", s=" << s << ", d=" << d << ", m=[";
  for (int i = 0; i < m.size(); ++i) os << (i ? "," : "") << m(i);
  os << "], Q=[";
  for (int v = 0; v < Q.rows(); ++v) {
    os << (v ? ";" : "");
    for (int i = 0; i < Q.cols(); ++i) os << (i ? "," : "") << Q(v, i);
  }
  os << "])";
  return os.str();
}

MultiDigraph build_DmQ(const EulerianProfile& profile) {
  if (auto bad = profile.violation()) throw ConstraintViolation("profile " + profile.to_string() + ": " + *bad);
  const int k = profile.k;
  const int s = profile.s;
  const int t = profile.petals();
  const int width = k - s;
  const BigInt q = static_cast<long>(profile.d / k);
  MultiDigraph g(s + t * width);
  auto petal_vertex = [&](int i, int off) { return s + i * width + off; };

  // seeds: (d/k) K_s
  for (int u = 0; u < s; ++u)
    for (int v = 0; v < s; ++v)
      if (u != v) g.add_arcs(u, v, q);
  for (int i = 0; i < t; ++i) {
    const BigInt mi = profile.m(i);
    for (int a = 0; a < width; ++a) {
      // petal: m_i K_{k-s}, and every petal vertex sends m_i to each seed
      for (int b = 0; b < width; ++b)
        if (a != b) g.add_arcs(petal_vertex(i, a), petal_vertex(i, b), mi);
      for (int v = 0; v < s; ++v) g.add_arcs(petal_vertex(i, a), v, mi);
    }
    for (int v = 0; v < s; ++v) {
      const int qvi = profile.Q(v, i);
      if (qvi == 0) continue;
      for (int a = 0; a < width; ++a) g.add_arcs(v, petal_vertex(i, a), qvi);
    }
  }
  return g;
}

std::vector<EulerianProfile> enumerate_profiles(int k, int s, long d, int t) {
  require_divisible(k, d);
  if (t < 1) throw InvalidArgument("profile needs at least one petal");
  const long q = d / k;
  std::vector<EulerianProfile> out;
  std::vector<int> m;
  positive_compositions(q, t, m, [&] {
    EulerianProfile base{k, s, d, Eigen::Map<Eigen::VectorXi>(m.data(), t), Eigen::MatrixXi::Zero(s, t)};
    Eigen::VectorXi col_left = s * base.m;
    fill_matrix(base.Q, col_left, 0, 0, static_cast<int>(q), static_cast<int>(q), [&] { out.push_back(base); });
  });
  return out;
}

std::vector<std::pair<int, int>> realize_profile(const EulerianProfile& profile) {
  if (auto bad = profile.violation()) throw ConstraintViolation(*bad);
  const int s = profile.s;
  const int width = profile.k - s;
  std::vector<std::pair<int, int>> pairs;  // (root label, edge index)
  for (int v = 0; v < s; ++v)
    for (int i = 0; i < profile.petals(); ++i)
      for (int c = 0; c < profile.Q(v, i); ++c) pairs.emplace_back(v + 1, i);
  for (int i = 0; i < profile.petals(); ++i)
    for (int a = 0; a < width; ++a)
      for (int c = 0; c < profile.m(i); ++c) pairs.emplace_back(s + i * width + a + 1, i);
  std::stable_sort(pairs.begin(), pairs.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return pairs;
}

Lemma35bReport verify_lemma35b(const EulerianProfile& profile, int p_used) {
  if (auto bad = profile.violation()) throw ConstraintViolation(*bad);
  const int k = profile.k;
  const int s = profile.s;
  const long d = profile.d;
  if (p_used != profile.petals()) throw InvalidArgument("p_used must equal the number of petals in the profile");
  if (p_used > d / k) throw InvalidArgument("the closed forms need p <= d/k");

  const MultiDigraph g = build_DmQ(profile);
  BigInt m_power = 1;
  for (int i = 0; i < profile.petals(); ++i) m_power *= ipow(profile.m(i), static_cast<unsigned long>(k - s));

  Lemma35bReport r;
  r.trees_counted = arborescence_count(g);
  r.degree_product = out_degree_product(g);
  const auto p = static_cast<unsigned long>(p_used);
  r.trees_formula = ipow(BigInt(d), static_cast<unsigned long>(s - 1)) * ipow(s, p - 1) *
                    ipow(k, p * static_cast<unsigned long>(k - s - 1)) * m_power;
  r.degree_product_formula = ipow(BigInt(d / k), static_cast<unsigned long>(s)) *
                             ipow(k - 1, static_cast<unsigned long>(k) * p - static_cast<unsigned long>(s) * p + s) *
                             m_power;
  return r;
}

Prop34Report verify_prop34(const SunflowerParams& params, long d, long size_cap) {
  const auto& [k, s, p] = params;
  require_divisible(k, d);
  const UniformHypergraph h = make_sunflower(params);
  const int width = k - s;
  Prop34Report report;

  // Balanced D_f -> profile.
  for_each_balanced(h, d, size_cap, [&](const RootedEdgeSeq& seq, const MultiDigraph& g) {
    ++report.balanced_sequences;
    auto fail = [&](const std::string& why) {
      std::ostringstream os;
      os << "sequence [";
      for (std::size_t i = 0; i < seq.size(); ++i) os << (i ? " " : "") << seq[i].root << "/e" << seq[i].edge + 1;
      os << "]: " << why;
      report.counterexamples.push_back(os.str());
    };

    std::vector<int> used;
    for (const auto& pr : seq) used.push_back(pr.edge);
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    const int t = static_cast<int>(used.size());

    EulerianProfile prof{k, s, d, Eigen::VectorXi::Zero(t), Eigen::MatrixXi::Zero(s, t)};
    std::vector<int> roots_of(static_cast<std::size_t>(h.n) + 1, 0);
    for (const auto& pr : seq) {
      ++roots_of[static_cast<std::size_t>(pr.root)];
      if (pr.root <= s) {
        const auto col = std::lower_bound(used.begin(), used.end(), pr.edge) - used.begin();
        ++prof.Q(pr.root - 1, static_cast<Eigen::Index>(col));
      }
    }
    for (int j = 0; j < t; ++j) {
      const int first = petal_first_vertex(params, used[static_cast<std::size_t>(j)]);
      prof.m(j) = roots_of[static_cast<std::size_t>(first)];
      for (int a = 1; a < width; ++a)
        if (roots_of[static_cast<std::size_t>(first + a)] != prof.m(j))
          return fail("petal " + std::to_string(used[static_cast<std::size_t>(j)] + 1) + " vertices root unequally");
    }
    for (int v = 1; v <= s; ++v)
      if (roots_of[static_cast<std::size_t>(v)] * k != d) return fail("seed " + std::to_string(v) + " does not root d/k pairs");
    if (auto bad = prof.violation()) return fail("profile " + prof.to_string() + " violates: " + *bad);

    // Relabel D_f onto the D(m, Q) layout with petals in canonical order.
    std::vector<int> order(static_cast<std::size_t>(t));
    std::iota(order.begin(), order.end(), 0);
    auto column = [&](int i) {
      std::vector<int> c{prof.m(i)};
      for (int v = 0; v < s; ++v) c.push_back(prof.Q(v, i));
      return c;
    };
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return column(a) < column(b); });
    std::vector<int> layout;
    for (int v = 0; v < s; ++v) layout.push_back(v);
    for (int j : order) {
      const int first = petal_first_vertex(params, used[static_cast<std::size_t>(j)]) - 1;
      for (int a = 0; a < width; ++a) layout.push_back(first + a);
    }
    if (static_cast<int>(g.support().size()) != static_cast<int>(layout.size()))
      return fail("arcs outside the used edges");
    const EulerianProfile canon = prof.canonical();
    if (!(g.induced(layout) == build_DmQ(canon))) return fail("D_f differs from D(m,Q) for " + canon.to_string());
    report.observed.insert(canon.key());
  });

  // Profile -> realizing sequence.
  const int t_max = static_cast<int>(std::min<long>(d / k, p));
  for (int t = 1; t <= t_max; ++t) {
    for (const auto& prof : enumerate_profiles(k, s, d, t)) {
      ++report.profiles_constructed;
      RootedEdgeSeq seq;
      for (const auto& [root, edge] : realize_profile(prof)) seq.push_back({root, edge});
      const std::string label = "profile " + prof.to_string();
      if (static_cast<long>(seq.size()) != d || !is_root_sorted(h, seq)) {
        report.counterexamples.push_back(label + ": realization is not a root-sorted sequence of length d");
        continue;
      }
      const MultiDigraph g = build_Df(h, seq);
      if (!is_balanced(g)) {
        report.counterexamples.push_back(label + ": realization is not balanced");
        continue;
      }
      std::vector<int> layout(static_cast<std::size_t>(s + t * width));
      std::iota(layout.begin(), layout.end(), 0);
      if (!(g.induced(layout) == build_DmQ(prof))) report.counterexamples.push_back(label + ": D_f != D(m,Q)");
      report.constructed.insert(prof.canonical().key());
    }
  }
  if (report.observed != report.constructed)
    report.counterexamples.push_back("profiles observed by enumeration differ from the constraint solutions (" +
                                     std::to_string(report.observed.size()) + " vs " +
                                     std::to_string(report.constructed.size()) + ")");
  return report;
}

std::set<int> observed_supports(const SunflowerParams& params, long d, long size_cap) {
  require_divisible(params.k, d);
  const UniformHypergraph h = make_sunflower(params);
  std::set<int> sizes;
  for_each_balanced(h, d, size_cap, [&](const RootedEdgeSeq& seq, const MultiDigraph&) {
    std::set<int> edges;
    for (const auto& pr : seq) edges.insert(pr.edge);
    sizes.insert(static_cast<int>(edges.size()));
  });
  return sizes;
}

std::set<int> subsunflower_supports(const SunflowerParams& params, long d, long size_cap) {
  const std::set<int> sizes = observed_supports(params, d, size_cap);
  std::set<int> expected;
  for (int t = 1; t <= std::min<long>(d / params.k, params.p); ++t) expected.insert(t);
  if (sizes != expected) throw IntegrityError("used-edge counts of balanced sequences differ from 1..min(d/k, p)");
  return sizes;
}

EulerianProfile sample_profile(std::mt19937_64& rng, int k, int s, long d, int t) {
  const auto all = enumerate_profiles(k, s, d, t);
  if (all.empty()) throw InvalidArgument("no profile with these parameters");
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  return all[pick(rng)];
}

}  // namespace sunspec
