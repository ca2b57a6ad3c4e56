#include "megagreedoid/constructions.hpp"

#include <algorithm>

#include "megagreedoid/errors.hpp"

namespace mg {

namespace {

std::size_t table_size(int n) { return std::size_t{1} << n; }

// Maps a ground index of g into the reindexed ground set of a minor on `kept`.
int remap(int vertex, Subset kept) {
  if (vertex == GraphEdge::kRoot) return GraphEdge::kRoot;
  return std::countr_zero(compress(Subset::singleton(vertex), kept).mask());
}

}  // namespace

RootedMultigraph::RootedMultigraph(GroundSet ground, std::string root,
                                   std::vector<GraphEdge> full_edges,
                                   std::vector<int> half_edges)
    : ground_(std::move(ground)),
      root_(std::move(root)),
      full_edges_(std::move(full_edges)),
      half_edges_(std::move(half_edges)) {
  if (root_.empty()) throw MalformedInput("root label must be nonempty");
  if (ground_.index_of(root_)) throw MalformedInput("root label '" + root_ + "' is also a ground label");
  const int n = ground_.size();
  auto valid = [n](int v) { return v == kRoot || (v >= 0 && v < n); };
  for (auto& e : full_edges_) {
    if (!valid(e.u) || !valid(e.v)) throw MalformedInput("edge endpoint out of range");
    if (e.u == e.v) throw MalformedInput("loops are not supported");
    e = e.normalized();
  }
  for (int h : half_edges_) {
    if (h < 0 || h >= n) throw MalformedInput("half-edge anchor out of range");
  }
  std::sort(full_edges_.begin(), full_edges_.end());
  std::sort(half_edges_.begin(), half_edges_.end());
  if (!is_connected_with_root(ground_.all())) {
    throw ConnectivityError("rooted graph is not connected");
  }
}

bool RootedMultigraph::is_connected_with_root(Subset s) const {
  Subset reached;
  bool grew = true;
  // Root's component, grown to a fixed point; at most |I| passes.
  while (grew) {
    grew = false;
    for (const auto& e : full_edges_) {
      const bool u_in = e.u == kRoot || reached.contains(e.u);
      const bool v_in = e.v == kRoot || reached.contains(e.v);
      if (u_in && !v_in && s.contains(e.v)) {
        reached = reached.with(e.v);
        grew = true;
      } else if (v_in && !u_in && s.contains(e.u)) {
        reached = reached.with(e.u);
        grew = true;
      }
    }
  }
  return reached == s;
}

bool RootedMultigraph::operator==(const RootedMultigraph& other) const {
  return ground_ == other.ground_ && root_ == other.root_ && full_edges_ == other.full_edges_ &&
         half_edges_ == other.half_edges_;
}

Megagreedoid from_rooted_graph(const RootedMultigraph& g) {
  const int n = g.ground().size();
  std::vector<char> feasible(table_size(n), 0);
  std::vector<Rational> rank(table_size(n));
  for (std::size_t mask = 0; mask < feasible.size(); ++mask) {
    const Subset s(static_cast<std::uint32_t>(mask));
    if (!g.is_connected_with_root(s)) continue;
    feasible[mask] = 1;
    long count = 0;
    for (const auto& e : g.full_edges()) {
      if (e.u == GraphEdge::kRoot) continue;  // normalized: root only ever sits in u
      if (s.contains(e.u) || s.contains(e.v)) ++count;
    }
    for (int h : g.half_edges()) {
      if (s.contains(h)) ++count;
    }
    rank[mask] = count;
  }
  return Megagreedoid::from_table(g.ground(), std::move(feasible), std::move(rank));
}

RootedMultigraph graph_restrict(const RootedMultigraph& g, Subset s) {
  if (!g.ground().contains_mask(s) || !g.is_connected_with_root(s)) {
    throw InfeasibleSet("restriction to " + g.ground().format(s) + " with the root is not connected");
  }
  auto inside = [&](int v) { return v == GraphEdge::kRoot || s.contains(v); };
  std::vector<GraphEdge> edges;
  std::vector<int> halves;
  for (const auto& e : g.full_edges()) {
    if (inside(e.u) && inside(e.v)) {
      edges.push_back({remap(e.u, s), remap(e.v, s)});
    } else if (e.u != GraphEdge::kRoot && s.contains(e.u)) {
      halves.push_back(remap(e.u, s));
    } else if (s.contains(e.v) && e.u != GraphEdge::kRoot) {
      halves.push_back(remap(e.v, s));
    }
  }
  for (int h : g.half_edges()) {
    if (s.contains(h)) halves.push_back(remap(h, s));
  }
  return RootedMultigraph(g.ground().sub(s), g.root(), std::move(edges), std::move(halves));
}

RootedMultigraph graph_contract(const RootedMultigraph& g, Subset s) {
  if (!g.ground().contains_mask(s) || !g.is_connected_with_root(s)) {
    throw InfeasibleSet("contraction of " + g.ground().format(s) + " with the root is not connected");
  }
  const Subset rest = g.ground().all() - s;
  auto merged = [&](int v) { return v == GraphEdge::kRoot || s.contains(v); };
  std::vector<GraphEdge> edges;
  std::vector<int> halves;
  for (const auto& e : g.full_edges()) {
    const bool mu = merged(e.u);
    const bool mv = merged(e.v);
    if (mu && mv) continue;
    edges.push_back({mu ? GraphEdge::kRoot : remap(e.u, rest), mv ? GraphEdge::kRoot : remap(e.v, rest)});
  }
  for (int h : g.half_edges()) {
    if (rest.contains(h)) halves.push_back(remap(h, rest));
  }
  return RootedMultigraph(g.ground().sub(rest), g.root(), std::move(edges), std::move(halves));
}

RootedMultigraph graph_product(const RootedMultigraph& g, const RootedMultigraph& h) {
  std::vector<std::string> labels = g.ground().labels();
  for (const auto& l : h.ground().labels()) {
    if (g.ground().index_of(l) || l == g.root()) {
      throw LabelCollision("label '" + l + "' appears in both graphs");
    }
    labels.push_back(l);
  }
  const int shift = g.ground().size();
  auto lift = [shift](int v) { return v == GraphEdge::kRoot ? v : v + shift; };
  std::vector<GraphEdge> edges = g.full_edges();
  for (const auto& e : h.full_edges()) edges.push_back({lift(e.u), lift(e.v)});
  std::vector<int> halves = g.half_edges();
  for (int x : h.half_edges()) halves.push_back(x + shift);
  return RootedMultigraph(GroundSet(std::move(labels)), g.root(), std::move(edges), std::move(halves));
}

Poset::Poset(GroundSet ground, std::vector<std::pair<int, int>> relations)
    : ground_(std::move(ground)), strictly_below_(static_cast<std::size_t>(ground_.size()), 0) {
  const int n = ground_.size();
  for (auto [a, b] : relations) {
    if (a < 0 || a >= n || b < 0 || b >= n) throw MalformedInput("poset relation out of range");
    strictly_below_[static_cast<std::size_t>(b)] |= std::uint32_t{1} << a;
  }
  // Transitive closure (Warshall).
  for (int k = 0; k < n; ++k) {
    for (int x = 0; x < n; ++x) {
      if (Subset(strictly_below_[static_cast<std::size_t>(x)]).contains(k)) {
        strictly_below_[static_cast<std::size_t>(x)] |= strictly_below_[static_cast<std::size_t>(k)];
      }
    }
  }
  for (int x = 0; x < n; ++x) {
    if (less(x, x)) throw InvalidPoset("order relation has a cycle through '" + ground_.label(x) + "'");
  }
}

bool Poset::is_lower_ideal(Subset s) const {
  for (int x : s.elements()) {
    if (!strictly_below(x).is_subset_of(s)) return false;
  }
  return true;
}

std::vector<std::pair<int, int>> Poset::covers() const {
  std::vector<std::pair<int, int>> out;
  const int n = ground_.size();
  for (int b = 0; b < n; ++b) {
    for (int a : strictly_below(b).elements()) {
      bool cover = true;
      for (int c : strictly_below(b).elements()) cover = cover && !less(a, c);
      if (cover) out.emplace_back(a, b);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool Poset::operator==(const Poset& other) const {
  return ground_ == other.ground_ && strictly_below_ == other.strictly_below_;
}

namespace {

Poset induced_poset(const Poset& p, Subset kept) {
  std::vector<std::pair<int, int>> rel;
  for (int b : kept.elements()) {
    for (int a : (p.strictly_below(b) & kept).elements()) rel.emplace_back(remap(a, kept), remap(b, kept));
  }
  return Poset(p.ground().sub(kept), std::move(rel));
}

}  // namespace

Poset poset_restrict(const Poset& p, Subset ideal) {
  if (!p.is_lower_ideal(ideal)) throw InfeasibleSet(p.ground().format(ideal) + " is not a lower ideal");
  return induced_poset(p, ideal);
}

Poset poset_contract(const Poset& p, Subset ideal) {
  if (!p.is_lower_ideal(ideal)) throw InfeasibleSet(p.ground().format(ideal) + " is not a lower ideal");
  return induced_poset(p, p.ground().all() - ideal);
}

Poset poset_product(const Poset& p, const Poset& q) {
  std::vector<std::string> labels = p.ground().labels();
  for (const auto& l : q.ground().labels()) {
    if (p.ground().index_of(l)) throw LabelCollision("label '" + l + "' appears in both posets");
    labels.push_back(l);
  }
  const int shift = p.ground().size();
  std::vector<std::pair<int, int>> rel = p.covers();
  for (auto [a, b] : q.covers()) rel.emplace_back(a + shift, b + shift);
  return Poset(GroundSet(std::move(labels)), std::move(rel));
}

Megagreedoid from_poset(const Poset& p) {
  const int n = p.ground().size();
  std::vector<char> feasible(table_size(n), 0);
  std::vector<Rational> rank(table_size(n));
  for (std::size_t mask = 0; mask < feasible.size(); ++mask) {
    const Subset s(static_cast<std::uint32_t>(mask));
    if (!p.is_lower_ideal(s)) continue;
    feasible[mask] = 1;
    rank[mask] = s.size();
  }
  return Megagreedoid::from_table(p.ground(), std::move(feasible), std::move(rank));
}

RankTable::RankTable(GroundSet ground, std::vector<Rational> values)
    : ground_(std::move(ground)), values_(std::move(values)) {
  if (values_.size() != table_size(ground_.size())) {
    throw MalformedInput("rank table must give a value for every subset");
  }
  const Rational shift = values_[0];
  if (shift != 0) {
    for (auto& v : values_) v -= shift;
  }
}

RankTable table_restrict(const RankTable& t, Subset s) {
  std::vector<Rational> values(table_size(s.size()));
  for_each_between(Subset(), s, [&](Subset x) { values[compress(x, s).mask()] = t(x); });
  return RankTable(t.ground().sub(s), std::move(values));
}

RankTable table_contract(const RankTable& t, Subset s) {
  const Subset rest = t.ground().all() - s;
  std::vector<Rational> values(table_size(rest.size()));
  for_each_between(Subset(), rest, [&](Subset x) { values[compress(x, rest).mask()] = t(x | s) - t(s); });
  return RankTable(t.ground().sub(rest), std::move(values));
}

RankTable table_product(const RankTable& t, const RankTable& u) {
  std::vector<std::string> labels = t.ground().labels();
  for (const auto& l : u.ground().labels()) {
    if (t.ground().index_of(l)) throw LabelCollision("label '" + l + "' appears in both tables");
    labels.push_back(l);
  }
  const int shift = t.ground().size();
  GroundSet ground(std::move(labels));
  std::vector<Rational> values(table_size(ground.size()));
  for (std::size_t a = 0; a < t.values().size(); ++a) {
    for (std::size_t b = 0; b < u.values().size(); ++b) values[a | (b << shift)] = t.values()[a] + u.values()[b];
  }
  return RankTable(std::move(ground), std::move(values));
}

void validate_greedoid(const RankTable& t) {
  const GroundSet& g = t.ground();
  const Subset all = g.all();
  for (std::size_t mask = 0; mask < t.values().size(); ++mask) {
    const Subset a(static_cast<std::uint32_t>(mask));
    const Rational& ra = t(a);
    if (!is_integer(ra) || ra < 0) {
      throw InvalidGreedoid("greedoid ranks must be nonnegative integers; r(" + g.format(a) + ")=" + to_string(ra));
    }
    if (ra > a.size()) throw InvalidGreedoid("axiom r(A) <= |A| fails at A=" + g.format(a));
    for (int x : (all - a).elements()) {
      if (t(a.with(x)) < ra) {
        throw InvalidGreedoid("monotonicity fails at A=" + g.format(a) + ", B=" + g.format(a.with(x)));
      }
    }
    const std::vector<int> out = (all - a).elements();
    for (std::size_t i = 0; i < out.size(); ++i) {
      for (std::size_t j = i + 1; j < out.size(); ++j) {
        const int x = out[i];
        const int y = out[j];
        if (t(a.with(x)) == ra && t(a.with(y)) == ra && t(a.with(x).with(y)) != ra) {
          throw InvalidGreedoid("local exchange fails at A=" + g.format(a) + ", x=" + g.label(x) +
                                ", y=" + g.label(y));
        }
      }
    }
  }
}

bool is_rank_feasible(const RankTable& t, Subset s) {
  const Subset rest = t.ground().all() - s;
  bool feasible = true;
  for_each_between(Subset(), rest, [&](Subset x) {
    feasible = feasible && t(s | x) <= t(s) + x.size();
  });
  return feasible;
}

Megagreedoid from_greedoid(const RankTable& t) {
  validate_greedoid(t);
  const int n = t.ground().size();
  std::vector<char> feasible(table_size(n), 0);
  std::vector<Rational> rank(table_size(n));
  for (std::size_t mask = 0; mask < feasible.size(); ++mask) {
    const Subset s(static_cast<std::uint32_t>(mask));
    if (!is_rank_feasible(t, s)) continue;
    feasible[mask] = 1;
    rank[mask] = t(s);
  }
  return Megagreedoid::from_table(t.ground(), std::move(feasible), std::move(rank));
}

Megagreedoid from_polymatroid(const RankTable& t) {
  const GroundSet& g = t.ground();
  const Subset all = g.all();
  for (std::size_t mask = 0; mask < t.values().size(); ++mask) {
    const Subset a(static_cast<std::uint32_t>(mask));
    const std::vector<int> out = (all - a).elements();
    for (int x : out) {
      if (t(a.with(x)) < t(a)) {
        throw InvalidPolymatroid("monotonicity fails at X=" + g.format(a) + ", Y=" + g.format(a.with(x)));
      }
    }
    // Local submodularity at every square is equivalent to the global law.
    for (std::size_t i = 0; i < out.size(); ++i) {
      for (std::size_t j = i + 1; j < out.size(); ++j) {
        const Subset x = a.with(out[i]);
        const Subset y = a.with(out[j]);
        if (t(x) + t(y) < t(x | y) + t(a)) {
          throw InvalidPolymatroid("submodularity fails at X=" + g.format(x) + ", Y=" + g.format(y));
        }
      }
    }
  }
  std::vector<char> feasible(t.values().size(), 1);
  return Megagreedoid::from_table(g, std::move(feasible), t.values());
}

RankTable poset_greedoid_rank(const Poset& p) {
  const int n = p.ground().size();
  std::vector<Rational> values(table_size(n));
  for (std::size_t mask = 0; mask < values.size(); ++mask) {
    const Subset s(static_cast<std::uint32_t>(mask));
    int count = 0;
    for (int x : s.elements()) count += p.strictly_below(x).is_subset_of(s) ? 1 : 0;
    values[mask] = count;
  }
  return RankTable(p.ground(), std::move(values));
}

}  // namespace mg
