#include "megagreedoid/megagreedoid.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "megagreedoid/errors.hpp"

namespace mg {

namespace {

std::size_t table_size(int n) { return std::size_t{1} << n; }

std::vector<Subset> collect_family(const std::vector<char>& feasible) {
  std::vector<Subset> out;
  for (std::size_t mask = 0; mask < feasible.size(); ++mask) {
    if (feasible[mask]) out.emplace_back(static_cast<std::uint32_t>(mask));
  }
  return out;
}

// Axiom checks over dense tables; shared by both check_axioms overloads.
AxiomReport check_tables(int n, const std::vector<char>& feasible,
                         const std::vector<Rational>& rank) {
  AxiomReport report;
  const Subset all = Subset::full(n);
  auto in = [&](Subset s) { return feasible[s.mask()] != 0; };

  if (!in(Subset())) report.violations.push_back({AxiomWitness::Kind::kEmptySetMissing, {}, {}});
  if (!in(all)) report.violations.push_back({AxiomWitness::Kind::kGroundSetMissing, all, {}});

  for (std::size_t mask = 0; mask < feasible.size(); ++mask) {
    if (!feasible[mask]) continue;
    const Subset s(static_cast<std::uint32_t>(mask));
    if (!s.empty()) {
      bool ok = false;
      for (int x : s.elements()) ok = ok || in(s.without(x));
      if (!ok) report.violations.push_back({AxiomWitness::Kind::kNoRemoval, s, {}});
    }
    if (s != all) {
      bool ok = false;
      for (int y : (all - s).elements()) ok = ok || in(s.with(y));
      if (!ok) report.violations.push_back({AxiomWitness::Kind::kNoAugmentation, s, {}});
    }
  }

  for (std::size_t ymask = 0; ymask < feasible.size(); ++ymask) {
    if (!feasible[ymask]) continue;
    const Subset y(static_cast<std::uint32_t>(ymask));
    for (int z : (all - y).elements()) {
      if (!in(y.with(z))) continue;
      const Rational gain_y = rank[y.with(z).mask()] - rank[y.mask()];
      for_each_between(Subset(), y, [&](Subset x) {
        if (x == y || !in(x) || !in(x.with(z))) return;
        if (gain_y > rank[x.with(z).mask()] - rank[x.mask()]) {
          report.violations.push_back({AxiomWitness::Kind::kSubmodularity, x, y, z});
        }
      });
    }
  }
  return report;
}

[[noreturn]] void throw_violations(const GroundSet& ground, const AxiomReport& report) {
  std::ostringstream msg;
  msg << "megagreedoid axioms violated";
  const std::size_t shown = std::min<std::size_t>(report.violations.size(), 5);
  for (std::size_t i = 0; i < shown; ++i) msg << "; " << report.violations[i].describe(ground);
  if (report.violations.size() > shown) {
    msg << "; and " << report.violations.size() - shown << " more";
  }
  throw AxiomViolation(msg.str());
}

}  // namespace

Megagreedoid::Megagreedoid() : feasible_{1}, rank_{Rational(0)}, family_{Subset()} {}

Megagreedoid Megagreedoid::create(GroundSet ground, const std::map<Subset, Rational>& ranks) {
  MegagreedoidCandidate candidate{ground, {}, ranks};
  for (const auto& [s, r] : ranks) candidate.family.push_back(s);
  const AxiomReport report = check_axioms(candidate);
  if (!report.passed()) throw_violations(ground, report);

  const int n = ground.size();
  std::vector<char> feasible(table_size(n), 0);
  std::vector<Rational> rank(table_size(n));
  const Rational shift = ranks.at(Subset());
  for (const auto& [s, r] : ranks) {
    feasible[s.mask()] = 1;
    rank[s.mask()] = r - shift;
  }
  return from_table(std::move(ground), std::move(feasible), std::move(rank));
}

Megagreedoid Megagreedoid::from_table(GroundSet ground, std::vector<char> feasible,
                                      std::vector<Rational> rank) {
  const std::size_t expected = table_size(ground.size());
  if (feasible.size() != expected || rank.size() != expected) {
    throw MalformedInput("rank/feasibility tables must have 2^|I| entries");
  }
  Megagreedoid m;
  m.ground_ = std::move(ground);
  m.feasible_ = std::move(feasible);
  m.rank_ = std::move(rank);
  // Values off the family are irrelevant; zero them so equality is structural.
  for (std::size_t i = 0; i < expected; ++i) {
    if (!m.feasible_[i]) m.rank_[i] = 0;
  }
  m.family_ = collect_family(m.feasible_);
  return m;
}

const Rational& Megagreedoid::rank(Subset s) const {
  if (!ground_.contains_mask(s)) throw InfeasibleSet("rank requested on a set outside the ground set");
  if (!is_feasible(s)) throw InfeasibleSet("rank requested on infeasible set " + ground_.format(s));
  return rank_[s.mask()];
}

bool Megagreedoid::operator==(const Megagreedoid& other) const {
  return ground_ == other.ground_ && feasible_ == other.feasible_ && rank_ == other.rank_;
}

std::string AxiomWitness::describe(const GroundSet& ground) const {
  switch (kind) {
    case Kind::kEmptySetMissing:
      return "axiom 1: the empty set is not feasible";
    case Kind::kGroundSetMissing:
      return "axiom 1: the ground set is not feasible";
    case Kind::kNoRemoval:
      return "axiom 1: S=" + ground.format(s) + " has no x with S-x feasible";
    case Kind::kNoAugmentation:
      return "axiom 1: S=" + ground.format(s) + " has no y with S+y feasible";
    case Kind::kSubmodularity:
      return "axiom 2: X=" + ground.format(s) + " Y=" + ground.format(y) + " z=" +
             ground.label(z) + " gives r(Y+z)-r(Y) > r(X+z)-r(X)";
  }
  return {};
}

AxiomReport check_axioms(const MegagreedoidCandidate& candidate) {
  const int n = candidate.ground.size();
  std::vector<char> feasible(table_size(n), 0);
  std::vector<Rational> rank(table_size(n));
  for (Subset s : candidate.family) {
    if (!candidate.ground.contains_mask(s)) {
      throw MalformedInput("family member uses elements outside the ground set");
    }
    auto it = candidate.rank.find(s);
    if (it == candidate.rank.end()) {
      throw MalformedInput("no rank given for feasible set " + candidate.ground.format(s));
    }
    feasible[s.mask()] = 1;
    rank[s.mask()] = it->second;
  }
  return check_tables(n, feasible, rank);
}

AxiomReport check_axioms(const Megagreedoid& m) {
  const int n = m.size();
  std::vector<char> feasible(table_size(n), 0);
  std::vector<Rational> rank(table_size(n));
  for (Subset s : m.family()) {
    feasible[s.mask()] = 1;
    rank[s.mask()] = m.rank(s);
  }
  return check_tables(n, feasible, rank);
}

Megagreedoid restrict(const Megagreedoid& m, Subset s) {
  if (!m.is_feasible(s)) throw InfeasibleSet("restriction to infeasible set " + m.ground().format(s));
  const int k = s.size();
  std::vector<char> feasible(table_size(k), 0);
  std::vector<Rational> rank(table_size(k));
  for (Subset x : m.family()) {
    if (!x.is_subset_of(s)) continue;
    const Subset packed = compress(x, s);
    feasible[packed.mask()] = 1;
    rank[packed.mask()] = m.rank(x);
  }
  return Megagreedoid::from_table(m.ground().sub(s), std::move(feasible), std::move(rank));
}

Megagreedoid contract(const Megagreedoid& m, Subset s) {
  if (!m.is_feasible(s)) throw InfeasibleSet("contraction of infeasible set " + m.ground().format(s));
  const Subset rest = m.all() - s;
  const int k = rest.size();
  const Rational& base = m.rank(s);
  std::vector<char> feasible(table_size(k), 0);
  std::vector<Rational> rank(table_size(k));
  for (Subset x : m.family()) {
    if (!s.is_subset_of(x)) continue;
    const Subset packed = compress(x - s, rest);
    feasible[packed.mask()] = 1;
    rank[packed.mask()] = m.rank(x) - base;
  }
  return Megagreedoid::from_table(m.ground().sub(rest), std::move(feasible), std::move(rank));
}

Megagreedoid direct_sum(const Megagreedoid& m, const Megagreedoid& n) {
  std::vector<std::string> labels = m.ground().labels();
  for (const auto& l : n.ground().labels()) {
    if (m.ground().index_of(l)) throw LabelCollision("label '" + l + "' appears in both operands");
    labels.push_back(l);
  }
  GroundSet ground(std::move(labels));
  const int shift = m.size();
  std::vector<char> feasible(table_size(ground.size()), 0);
  std::vector<Rational> rank(table_size(ground.size()));
  for (Subset x : m.family()) {
    for (Subset y : n.family()) {
      const std::uint32_t mask = x.mask() | (y.mask() << shift);
      feasible[mask] = 1;
      rank[mask] = m.rank(x) + n.rank(y);
    }
  }
  return Megagreedoid::from_table(std::move(ground), std::move(feasible), std::move(rank));
}

Megagreedoid relabel(const Megagreedoid& m, std::vector<std::string> labels) {
  if (static_cast<int>(labels.size()) != m.size()) {
    throw PreconditionError("relabel needs one label per ground element");
  }
  const std::size_t len = table_size(m.size());
  std::vector<char> feasible(len, 0);
  std::vector<Rational> rank(len);
  for (Subset x : m.family()) {
    feasible[x.mask()] = 1;
    rank[x.mask()] = m.rank(x);
  }
  return Megagreedoid::from_table(GroundSet(std::move(labels)), std::move(feasible),
                                  std::move(rank));
}

Megagreedoid canonical(const Megagreedoid& m) {
  const int n = m.size();
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return m.ground().label(a) < m.ground().label(b); });
  // old index -> new position
  std::vector<int> position(static_cast<std::size_t>(n));
  std::vector<std::string> labels;
  for (int k = 0; k < n; ++k) {
    position[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])] = k;
    labels.push_back(m.ground().label(order[static_cast<std::size_t>(k)]));
  }
  std::vector<char> feasible(table_size(n), 0);
  std::vector<Rational> rank(table_size(n));
  for (Subset x : m.family()) {
    Subset y;
    for (int i : x.elements()) y = y.with(position[static_cast<std::size_t>(i)]);
    feasible[y.mask()] = 1;
    rank[y.mask()] = m.rank(x);
  }
  return Megagreedoid::from_table(GroundSet(std::move(labels)), std::move(feasible),
                                  std::move(rank));
}

std::string encode(const Megagreedoid& m) {
  std::string out = "<";
  for (int i = 0; i < m.size(); ++i) {
    if (i) out += ',';
    out += m.ground().label(i);
  }
  out += '|';
  bool first = true;
  for (Subset x : m.family()) {
    if (!first) out += ';';
    out += m.ground().format(x);
    out += ':';
    out += to_string(m.rank(x));
    first = false;
  }
  out += '>';
  return out;
}

std::string canonical_encoding(const Megagreedoid& m) { return encode(canonical(m)); }

bool is_boolean_interval(const Megagreedoid& m, Subset x, Subset y) {
  if (!x.is_subset_of(y)) throw PreconditionError("interval endpoints must satisfy x ⊆ y");
  if (!m.is_feasible(x) || !m.is_feasible(y)) {
    throw PreconditionError("interval endpoints must be feasible");
  }
  bool boolean = true;
  for_each_between(x, y, [&](Subset z) { boolean = boolean && m.is_feasible(z); });
  return boolean;
}

bool is_modular_on_interval(const Megagreedoid& m, Subset x, Subset y) {
  if (!is_boolean_interval(m, x, y)) {
    throw PreconditionError("modularity is only defined on boolean intervals");
  }
  const Rational& base = m.rank(x);
  const Subset free = y - x;
  const std::vector<int> elems = free.elements();
  std::vector<Rational> gain;
  for (int t : elems) gain.push_back(m.rank(x.with(t)) - base);
  bool modular = true;
  for_each_between(x, y, [&](Subset z) {
    if (!modular) return;
    Rational sum = 0;
    for (std::size_t k = 0; k < elems.size(); ++k) {
      if (z.contains(elems[k])) sum += gain[k];
    }
    modular = (m.rank(z) - base == sum);
  });
  return modular;
}

bool is_good_interval(const Megagreedoid& m, Subset x, Subset y) {
  if (!x.is_subset_of(y) || !m.is_feasible(x) || !m.is_feasible(y)) return false;
  return is_boolean_interval(m, x, y) && is_modular_on_interval(m, x, y);
}

Subset prefix_set(const Permutation& perm, std::size_t k) {
  Subset s;
  for (std::size_t i = 0; i < k; ++i) s = s.with(perm[i]);
  return s;
}

std::strong_ordering greedy_compare(const Megagreedoid& m, const Permutation& a,
                                    const Permutation& b) {
  const std::size_t len = std::min(a.size(), b.size());
  Subset prefix_a, prefix_b;
  for (std::size_t i = 0; i < len; ++i) {
    prefix_a = prefix_a.with(a[i]);
    prefix_b = prefix_b.with(b[i]);
    if (a[i] == b[i]) continue;
    const Rational& ra = m.rank(prefix_a);
    const Rational& rb = m.rank(prefix_b);
    if (ra < rb) return std::strong_ordering::less;
    if (rb < ra) return std::strong_ordering::greater;
    return a[i] <=> b[i];
  }
  return a.size() <=> b.size();
}

std::vector<Permutation> feasible_permutations(const Megagreedoid& m) {
  std::vector<Permutation> out;
  Permutation current;
  const int n = m.size();
  auto dfs = [&](auto&& self, Subset used) -> void {
    if (static_cast<int>(current.size()) == n) {
      out.push_back(current);
      return;
    }
    for (int x = 0; x < n; ++x) {
      if (used.contains(x) || !m.is_feasible(used.with(x))) continue;
      current.push_back(x);
      self(self, used.with(x));
      current.pop_back();
    }
  };
  dfs(dfs, Subset());
  std::sort(out.begin(), out.end(), [&](const Permutation& a, const Permutation& b) {
    return greedy_compare(m, a, b) < 0;
  });
  return out;
}

std::string format_permutation(const GroundSet& ground, const Permutation& perm) {
  bool single = true;
  for (int i : perm) single = single && ground.label(i).size() == 1;
  std::string out;
  for (std::size_t k = 0; k < perm.size(); ++k) {
    if (!single && k) out += ' ';
    out += ground.label(perm[k]);
  }
  return out;
}

}  // namespace mg
