#include "megagreedoid/corpus.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "megagreedoid/errors.hpp"

namespace mg {

GroundSet letter_ground(int size) {
  if (size < 0 || size > GroundSet::kMaxSize) throw PreconditionError("ground size out of range");
  std::vector<std::string> labels;
  for (int i = 0; i < size; ++i) labels.emplace_back(1, static_cast<char>('a' + i));
  return GroundSet(std::move(labels));
}

namespace {

std::vector<int> shuffled(Rng& rng, int size) {
  std::vector<int> order(static_cast<std::size_t>(size));
  std::iota(order.begin(), order.end(), 0);
  for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);
  return order;
}

}  // namespace

RootedMultigraph random_rooted_graph(Rng& rng, int size, bool multi) {
  std::vector<GraphEdge> edges;
  const std::vector<int> order = shuffled(rng, size);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const std::uint64_t parent = rng.below(i + 1);
    edges.push_back(GraphEdge{parent == 0 ? GraphEdge::kRoot : order[parent - 1], order[i]}.normalized());
  }
  for (int u = GraphEdge::kRoot; u < size; ++u) {
    for (int v = u + 1; v < size; ++v) {
      const bool present = std::find(edges.begin(), edges.end(), GraphEdge{u, v}) != edges.end();
      if (!present && rng.chance(1, 3)) edges.push_back({u, v});
      if (multi && rng.chance(1, 6)) edges.push_back({u, v});
    }
  }
  return RootedMultigraph(letter_ground(size), "root", std::move(edges));
}

Poset random_poset(Rng& rng, int size) {
  std::vector<std::pair<int, int>> relations;
  for (int i = 0; i < size; ++i) {
    for (int j = i + 1; j < size; ++j) {
      if (rng.chance(1, 3)) relations.emplace_back(j, i);
    }
  }
  return Poset(letter_ground(size), std::move(relations));
}

RankTable random_coverage_polymatroid(Rng& rng, int size) {
  constexpr int kUniverse = 4;
  std::vector<Rational> weight;
  for (int u = 0; u < kUniverse; ++u) {
    const long w = static_cast<long>(rng.below(3)) + 1;
    weight.push_back(rng.chance(1, 4) ? Rational(w, 2) : Rational(w));
  }
  std::vector<std::uint32_t> cover(static_cast<std::size_t>(size));
  for (auto& c : cover) c = static_cast<std::uint32_t>(rng.below(std::uint64_t{1} << kUniverse));
  const std::uint32_t total = std::uint32_t{1} << size;
  std::vector<Rational> values(total);
  for (std::uint32_t s = 0; s < total; ++s) {
    std::uint32_t covered = 0;
    for (int i = 0; i < size; ++i) {
      if ((s >> i) & 1u) covered |= cover[static_cast<std::size_t>(i)];
    }
    for (int u = 0; u < kUniverse; ++u) {
      if ((covered >> u) & 1u) values[s] += weight[static_cast<std::size_t>(u)];
    }
  }
  return RankTable(letter_ground(size), std::move(values));
}

std::string kind_name(CorpusKind kind) {
  switch (kind) {
    case CorpusKind::kRootedGraph: return "rooted_graph";
    case CorpusKind::kPoset: return "poset";
    case CorpusKind::kPolymatroid: return "polymatroid";
    case CorpusKind::kPosetGreedoid: return "greedoid";
  }
  return "unknown";
}

std::vector<CorpusEntry> generate_corpus(std::uint64_t seed, std::size_t size, int max_elements) {
  if (max_elements < 1 || max_elements > GroundSet::kMaxSize) throw PreconditionError("max_elements out of range");
  Rng rng(seed);
  std::vector<CorpusEntry> out;
  out.reserve(size);
  for (std::size_t k = 0; k < size; ++k) {
    const int n = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_elements))) + 1;
    const auto kind = static_cast<CorpusKind>(k % 4);
    const std::string name = kind_name(kind) + "-" + std::to_string(k);
    switch (kind) {
      case CorpusKind::kRootedGraph: {
        RootedMultigraph g = random_rooted_graph(rng, n, rng.chance(1, 2));
        Megagreedoid m = from_rooted_graph(g);
        out.push_back({name, kind, std::move(g), std::move(m)});
        break;
      }
      case CorpusKind::kPoset: {
        Poset p = random_poset(rng, n);
        Megagreedoid m = from_poset(p);
        out.push_back({name, kind, std::move(p), std::move(m)});
        break;
      }
      case CorpusKind::kPolymatroid: {
        RankTable t = random_coverage_polymatroid(rng, n);
        Megagreedoid m = from_polymatroid(t);
        out.push_back({name, kind, std::move(t), std::move(m)});
        break;
      }
      case CorpusKind::kPosetGreedoid: {
        RankTable t = poset_greedoid_rank(random_poset(rng, n));
        Megagreedoid m = from_greedoid(t);
        out.push_back({name, kind, std::move(t), std::move(m)});
        break;
      }
    }
  }
  return out;
}

}  // namespace mg
