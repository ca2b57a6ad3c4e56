#include "megagreedoid/invariants.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "megagreedoid/errors.hpp"

namespace mg {

namespace {

// Calls fn(f) for every f : [size] -> [n], in odometer order.
template <typename Fn>
void for_each_function(int size, long n, Fn&& fn) {
  if (size == 0) {
    std::vector<long> empty;
    fn(std::span<const long>(empty));
    return;
  }
  if (n <= 0) return;
  std::vector<long> f(static_cast<std::size_t>(size), 1);
  while (true) {
    fn(std::span<const long>(f));
    std::size_t i = 0;
    while (i < f.size() && f[i] == n) f[i++] = 1;
    if (i == f.size()) return;
    ++f[i];
  }
}

}  // namespace

DescentReport descents(const Megagreedoid& m, const Permutation& sigma, DescentRule rule) {
  const int n = m.size();
  if (static_cast<int>(sigma.size()) != n) throw PreconditionError("permutation has the wrong length");
  {
    Subset seen;
    for (int x : sigma) {
      if (x < 0 || x >= n || seen.contains(x)) throw PreconditionError("not a permutation of the ground set");
      seen = seen.with(x);
      if (!m.is_feasible(seen)) {
        throw PreconditionError("permutation " + format_permutation(m.ground(), sigma) + " is not feasible");
      }
    }
  }
  DescentReport report{sigma, {}, std::vector<unsigned>(static_cast<std::size_t>(std::max(n - 1, 0)), 0)};
  for (int i = 1; i < n; ++i) {
    const Subset before = prefix_set(sigma, static_cast<std::size_t>(i - 1));
    const Subset here = before.with(sigma[static_cast<std::size_t>(i - 1)]);
    const Subset next = here.with(sigma[static_cast<std::size_t>(i)]);
    const Subset swapped = before.with(sigma[static_cast<std::size_t>(i)]);
    const bool later_first = sigma[static_cast<std::size_t>(i)] < sigma[static_cast<std::size_t>(i - 1)];
    unsigned causes = 0;
    const bool swap_ok = m.is_feasible(swapped);
    if (!swap_ok) causes |= static_cast<unsigned>(DescentCause::kInfeasibleSwap);
    if (rule == DescentRule::kGreedySwap) {
      if (swap_ok) {
        if (m.rank(swapped) < m.rank(here)) causes |= static_cast<unsigned>(DescentCause::kRankDrop);
        if (m.rank(swapped) == m.rank(here) && later_first) {
          causes |= static_cast<unsigned>(DescentCause::kTieOrder);
        }
      }
    } else {
      if (m.rank(here) > m.rank(next)) causes |= static_cast<unsigned>(DescentCause::kRankDrop);
      if (m.rank(here) == m.rank(next) && later_first) causes |= static_cast<unsigned>(DescentCause::kTieOrder);
    }
    if (swap_ok && m.rank(here) - m.rank(before) > m.rank(next) - m.rank(swapped)) {
      causes |= static_cast<unsigned>(DescentCause::kNonModular);
    }
    report.causes[static_cast<std::size_t>(i - 1)] = causes;
    if (causes != 0) report.descent_set.insert(i);
  }
  return report;
}

QsymElement chi_F(const Megagreedoid& m, DescentRule rule) {
  QsymElement out(Basis::kFundamental);
  for (const auto& sigma : feasible_permutations(m)) out.add(descents(m, sigma, rule).descent_set, m.size(), 1);
  return out;
}

QsymElement chi_flag(const Megagreedoid& m) {
  // ways[S]: descent-set mask of the chain so far -> number of chains.
  std::map<std::uint32_t, std::map<std::uint32_t, Integer>> ways;
  ways[0][0] = 1;
  const auto& family = m.family();
  for (Subset s : family) {
    auto found = ways.find(s.mask());
    if (found == ways.end()) continue;
    const std::uint32_t step = s.empty() ? 0u : std::uint32_t{1} << (s.size() - 1);
    for (Subset t : family) {
      if (t == s || !s.is_subset_of(t) || !is_good_interval(m, s, t)) continue;
      auto& target = ways[t.mask()];
      for (const auto& [sizes, count] : found->second) target[sizes | step] += count;
    }
  }
  QsymElement out(Basis::kMonomial);
  for (const auto& [sizes, count] : ways[m.all().mask()]) out.add(DescentSet::from_mask(sizes), m.size(), Rational(count));
  return out;
}

LevelChain level_chain(std::span<const long> f) {
  std::set<long> values(f.begin(), f.end());
  LevelChain chain;
  chain.cumulative.push_back(Subset());
  for (long v : values) {
    Subset block;
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (f[i] == v) block = block.with(static_cast<int>(i));
    }
    chain.blocks.push_back(block);
    chain.cumulative.push_back(chain.cumulative.back() | block);
  }
  return chain;
}

namespace {

void require_total(const Megagreedoid& m, std::span<const long> f) {
  if (static_cast<int>(f.size()) != m.size()) throw PreconditionError("function must assign one value per element");
}

}  // namespace

bool is_feasible_function(const Megagreedoid& m, std::span<const long> f) {
  require_total(m, f);
  const LevelChain chain = level_chain(f);
  return std::all_of(chain.cumulative.begin(), chain.cumulative.end(),
                     [&](Subset s) { return m.is_feasible(s); });
}

bool is_strongly_feasible(const Megagreedoid& m, std::span<const long> f) {
  if (!is_feasible_function(m, f)) return false;
  const LevelChain chain = level_chain(f);
  for (std::size_t j = 0; j + 1 < chain.cumulative.size(); ++j) {
    if (!is_boolean_interval(m, chain.cumulative[j], chain.cumulative[j + 1])) return false;
  }
  return true;
}

bool is_generic(const Megagreedoid& m, std::span<const long> f) {
  if (!is_strongly_feasible(m, f)) return false;
  const LevelChain chain = level_chain(f);
  for (std::size_t j = 0; j + 1 < chain.cumulative.size(); ++j) {
    if (!is_modular_on_interval(m, chain.cumulative[j], chain.cumulative[j + 1])) return false;
  }
  return true;
}

Integer oracle_count_generic(const Megagreedoid& m, long n) {
  Integer count = 0;
  for_each_function(m.size(), n, [&](std::span<const long> f) {
    if (is_generic(m, f)) ++count;
  });
  return count;
}

bool convolution_check(const Megagreedoid& m, long n, long k) {
  if (n < 0 || k < 0) throw PreconditionError("convolution arguments must be nonnegative");
  const Rational lhs = specialize_poly(chi_F(m))(Rational(n + k));
  Rational rhs = 0;
  for (Subset s : m.family()) {
    rhs += specialize_poly(chi_F(restrict(m, s)))(Rational(n)) *
           specialize_poly(chi_F(contract(m, s)))(Rational(k));
  }
  return lhs == rhs;
}

Rational reciprocity_eval(const Megagreedoid& m, long n) {
  const Rational value = specialize_poly(chi_F(m))(Rational(-n));
  return m.size() % 2 == 0 ? value : Rational(-value);
}

namespace {

std::size_t count_vertices(const Megagreedoid& m, const std::vector<Permutation>& perms,
                           std::span<const long> f) {
  std::set<std::vector<Rational>> vertices;
  for (const auto& sigma : perms) {
    bool increasing = true;
    for (std::size_t i = 1; i < sigma.size() && increasing; ++i) {
      increasing = f[static_cast<std::size_t>(sigma[i - 1])] <= f[static_cast<std::size_t>(sigma[i])];
    }
    if (!increasing) continue;
    std::vector<Rational> v(sigma.size());
    Subset prefix;
    for (int x : sigma) {
      const Rational before = m.rank(prefix);
      prefix = prefix.with(x);
      v[static_cast<std::size_t>(x)] = m.rank(prefix) - before;
    }
    vertices.insert(std::move(v));
  }
  return vertices.size();
}

}  // namespace

std::size_t vertex_multiplicity(const Megagreedoid& m, std::span<const long> f) {
  require_total(m, f);
  return count_vertices(m, feasible_permutations(m), f);
}

Integer vertex_sum(const Megagreedoid& m, long n) {
  const auto perms = feasible_permutations(m);
  Integer total = 0;
  for_each_function(m.size(), n, [&](std::span<const long> f) {
    if (is_feasible_function(m, f)) total += count_vertices(m, perms, f);
  });
  return total;
}

Integer count_rooted_acyclic_orientations(const RootedMultigraph& g) {
  if (!g.half_edges().empty()) throw UnsupportedInput("orientation count needs a graph without half-edges");
  const auto& edges = g.full_edges();
  if (edges.size() > 30) throw UnsupportedInput("too many edges for brute-force orientation count");
  const int n = g.ground().size();
  const int root = n;
  auto index = [root](int v) { return v == GraphEdge::kRoot ? root : v; };
  Integer count = 0;
  const std::uint64_t total = std::uint64_t{1} << edges.size();
  std::vector<std::vector<int>> out(static_cast<std::size_t>(n + 1));
  std::vector<int> indegree(static_cast<std::size_t>(n + 1));
  for (std::uint64_t orient = 0; orient < total; ++orient) {
    for (auto& o : out) o.clear();
    std::fill(indegree.begin(), indegree.end(), 0);
    for (std::size_t e = 0; e < edges.size(); ++e) {
      int from = index(edges[e].u);
      int to = index(edges[e].v);
      if ((orient >> e) & 1u) std::swap(from, to);
      out[static_cast<std::size_t>(from)].push_back(to);
      ++indegree[static_cast<std::size_t>(to)];
    }
    // Kahn's algorithm for acyclicity.
    std::vector<int> deg = indegree;
    std::vector<int> queue;
    for (int v = 0; v <= n; ++v) {
      if (deg[static_cast<std::size_t>(v)] == 0) queue.push_back(v);
    }
    std::size_t head = 0;
    while (head < queue.size()) {
      const int v = queue[head++];
      for (int w : out[static_cast<std::size_t>(v)]) {
        if (--deg[static_cast<std::size_t>(w)] == 0) queue.push_back(w);
      }
    }
    if (static_cast<int>(queue.size()) != n + 1) continue;
    // In a DAG every vertex reaches a sink; it reaches the root for all
    // vertices iff the root is the only sink.
    bool root_only_sink = true;
    for (int v = 0; v < n; ++v) root_only_sink = root_only_sink && !out[static_cast<std::size_t>(v)].empty();
    if (root_only_sink) ++count;
  }
  return count;
}

}  // namespace mg
