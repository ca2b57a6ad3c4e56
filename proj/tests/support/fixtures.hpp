#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "megagreedoid/constructions.hpp"
#include "megagreedoid/corpus.hpp"
#include "megagreedoid/megagreedoid.hpp"
#include "megagreedoid/qsym.hpp"

namespace mgtest {

// Root c, edges cf ca fp fa ps sa; the ground order defaults to a < f < p < s.
mg::RootedMultigraph example_graph(const std::vector<std::string>& order = {"a", "f", "p", "s"});
mg::Megagreedoid example_graph_megagreedoid(const std::vector<std::string>& order = {"a", "f", "p", "s"});

// Ground f < u < n; rank-feasible sets are all but {u}.
mg::RankTable example_greedoid_ranks();
mg::Megagreedoid example_greedoid();

// Ground f < u < n on 2^I.
mg::RankTable example_polymatroid_ranks();
mg::Megagreedoid example_polymatroid();

// Subset from a label string of single-character labels, e.g. "fp".
mg::Subset set_of(const mg::GroundSet& ground, const std::string& labels);
// Permutation from single-character labels, e.g. "asfp".
mg::Permutation perm_of(const mg::GroundSet& ground, const std::string& labels);

// Megagreedoid from "label-string:rank" entries, validated.
mg::Megagreedoid explicit_megagreedoid(const std::vector<std::string>& labels,
                                       const std::vector<std::pair<std::string, long>>& ranks);

// Uniform matroid U_{k,n} on "a", "b", ... as a greedoid rank table.
mg::RankTable uniform_matroid(int k, int n);

// Root joined to every element, plus the listed edges between elements.
mg::RootedMultigraph star_graph(int size, const std::vector<std::pair<int, int>>& extra);

// Fixed-seed corpus shared by the property suites.
const std::vector<mg::CorpusEntry>& corpus();

}  // namespace mgtest

namespace mg {

// Lets doctest print quasisymmetric values in failure messages.
inline std::ostream& operator<<(std::ostream& os, const QsymElement& q) { return os << render(q); }

}  // namespace mg
