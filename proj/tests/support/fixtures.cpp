#include "fixtures.hpp"

#include <algorithm>


namespace mgtest {

using mg::GraphEdge;
using mg::GroundSet;
using mg::Rational;
using mg::RankTable;
using mg::Subset;

mg::RootedMultigraph example_graph(const std::vector<std::string>& order) {
  GroundSet ground(order);
  const int c = GraphEdge::kRoot;
  const int a = ground.require_index("a"), f = ground.require_index("f");
  const int p = ground.require_index("p"), s = ground.require_index("s");
  return mg::RootedMultigraph(ground, "c", {{c, f}, {c, a}, {f, p}, {f, a}, {p, s}, {s, a}});
}

mg::Megagreedoid example_graph_megagreedoid(const std::vector<std::string>& order) {
  return mg::from_rooted_graph(example_graph(order));
}

namespace {

RankTable table(GroundSet ground, const std::vector<std::pair<std::string, long>>& entries) {
  std::vector<Rational> values(std::size_t{1} << ground.size());
  for (const auto& [labels, value] : entries) values[set_of(ground, labels).mask()] = value;
  return RankTable(std::move(ground), std::move(values));
}

}  // namespace

RankTable example_greedoid_ranks() {
  return table(GroundSet({"f", "u", "n"}),
               {{"", 0}, {"f", 1}, {"u", 0}, {"n", 1}, {"fu", 2}, {"fn", 2}, {"un", 2}, {"fun", 2}});
}

mg::Megagreedoid example_greedoid() { return mg::from_greedoid(example_greedoid_ranks()); }

RankTable example_polymatroid_ranks() {
  return table(GroundSet({"f", "u", "n"}),
               {{"", 0}, {"f", 3}, {"u", 3}, {"n", 3}, {"fu", 5}, {"fn", 6}, {"un", 5}, {"fun", 6}});
}

mg::Megagreedoid example_polymatroid() { return mg::from_polymatroid(example_polymatroid_ranks()); }

Subset set_of(const GroundSet& ground, const std::string& labels) {
  Subset s;
  for (char ch : labels) s = s.with(ground.require_index(std::string(1, ch)));
  return s;
}

mg::Permutation perm_of(const GroundSet& ground, const std::string& labels) {
  mg::Permutation p;
  for (char ch : labels) p.push_back(ground.require_index(std::string(1, ch)));
  return p;
}

mg::Megagreedoid explicit_megagreedoid(const std::vector<std::string>& labels,
                                       const std::vector<std::pair<std::string, long>>& ranks) {
  GroundSet ground(labels);
  std::map<Subset, Rational> map;
  for (const auto& [set, value] : ranks) map[set_of(ground, set)] = value;
  return mg::Megagreedoid::create(ground, map);
}

RankTable uniform_matroid(int k, int n) {
  GroundSet ground = mg::letter_ground(n);
  std::vector<Rational> values(std::size_t{1} << n);
  for (std::uint32_t mask = 0; mask < values.size(); ++mask) values[mask] = std::min(Subset(mask).size(), k);
  return RankTable(ground, values);
}

mg::RootedMultigraph star_graph(int size, const std::vector<std::pair<int, int>>& extra) {
  std::vector<GraphEdge> edges;
  for (int i = 0; i < size; ++i) edges.push_back({GraphEdge::kRoot, i});
  for (const auto& [u, v] : extra) edges.push_back({u, v});
  return mg::RootedMultigraph(mg::letter_ground(size), "root", edges);
}

const std::vector<mg::CorpusEntry>& corpus() {
  static const std::vector<mg::CorpusEntry> entries = mg::generate_corpus(1, 60, 5);
  return entries;
}

}  // namespace mgtest
