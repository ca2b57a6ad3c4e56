#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "megagreedoid/constructions.hpp"
#include "megagreedoid/megagreedoid.hpp"

namespace mg {

// Seeded generator whose output depends only on the seed: mt19937_64 is fully
// specified, and draws avoid the implementation-defined distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform on [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }
  // True with probability numerator / denominator.
  bool chance(std::uint64_t numerator, std::uint64_t denominator) { return below(denominator) < numerator; }

 private:
  std::mt19937_64 engine_;
};

// "a", "b", ... ; size <= GroundSet::kMaxSize.
GroundSet letter_ground(int size);

// Random spanning tree on I ∪ {root} plus extra edges; parallel edges only
// when multi is set.
RootedMultigraph random_rooted_graph(Rng& rng, int size, bool multi = false);
// Random DAG closure whose ground order is order-reversing: x < y in the
// poset implies y precedes x in I.
Poset random_poset(Rng& rng, int size);
// r(S) = weight of the union of random cover sets; weights may be halves.
RankTable random_coverage_polymatroid(Rng& rng, int size);

enum class CorpusKind { kRootedGraph, kPoset, kPolymatroid, kPosetGreedoid };

std::string kind_name(CorpusKind kind);

struct CorpusEntry {
  std::string name;
  CorpusKind kind;
  std::variant<RootedMultigraph, Poset, RankTable> source;
  Megagreedoid megagreedoid;
};

// Cycles through the four kinds; ground sizes are uniform on [1, max_elements].
std::vector<CorpusEntry> generate_corpus(std::uint64_t seed, std::size_t size, int max_elements = 5);

}  // namespace mg
