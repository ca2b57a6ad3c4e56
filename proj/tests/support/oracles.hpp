#pragma once

#include <map>
#include <vector>

#include "megagreedoid/constructions.hpp"
#include "megagreedoid/megagreedoid.hpp"
#include "megagreedoid/qsym.hpp"
#include "megagreedoid/rational.hpp"

// Brute-force reference implementations. Each one works from definitions and
// touches the library only through plain accessors (is_feasible, rank, less).
namespace oracle {

// Every permutation of I checked prefix by prefix.
std::vector<mg::Permutation> feasible_permutations(const mg::Megagreedoid& m);

// Every set between x and y is feasible.
bool boolean_interval(const mg::Megagreedoid& m, mg::Subset x, mg::Subset y);
// Four-point law r(Z ∪ W) + r(Z ∩ W) = r(Z) + r(W) for all Z, W in [x, y].
bool four_point_modular(const mg::Megagreedoid& m, mg::Subset x, mg::Subset y);

// Level sets {f <= c} for each used value c, checked against the four-point law.
bool generic(const mg::Megagreedoid& m, const std::vector<long>& f);
mg::Integer generic_count(const mg::Megagreedoid& m, long n);

// Monomial expansion in `variables` commuting variables; keys are exponent
// vectors. Two quasisymmetric functions of degree <= k agree iff their
// expansions in k variables agree.
using Polynomial = std::map<std::vector<int>, mg::Rational>;
Polynomial expand(const mg::QsymElement& q, int variables);
Polynomial multiply(const Polynomial& a, const Polynomial& b);

// Linear extensions listed bottom-up.
std::vector<mg::Permutation> linear_extensions(const mg::Poset& p);
// Σ over linear extensions L of F_{Des_ω(L)} for an order-reversing labeling
// ω built from label strings, independent of the ground order.
mg::QsymElement gessel_expansion(const mg::Poset& p);
// f : P -> [n] with x < y implying f(x) < f(y).
mg::Integer strict_p_partitions(const mg::Poset& p, long n);

// Deletion-contraction on the graph induced on I (root and its edges dropped).
mg::Integer chromatic_polynomial(const mg::RootedMultigraph& g, long n);

// Orientations where a DFS finds no cycle and BFS from every vertex reaches
// the root.
mg::Integer rooted_acyclic_orientations(const mg::RootedMultigraph& g);

// Family by BFS from the root inside S; rank by direct edge counting.
mg::Megagreedoid graph_megagreedoid(const mg::RootedMultigraph& g);

}  // namespace oracle
