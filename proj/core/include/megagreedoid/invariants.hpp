#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "megagreedoid/constructions.hpp"
#include "megagreedoid/megagreedoid.hpp"
#include "megagreedoid/qsym.hpp"
#include "megagreedoid/rational.hpp"

namespace mg {

// Why a position of a feasible permutation is an r-descent. With
// P_j = {σ_1..σ_j} and Q_i = P_{i-1} ∪ {σ_{i+1}}:
enum class DescentCause : unsigned {
  kInfeasibleSwap = 1u << 0,  // Q_i ∉ A
  kRankDrop = 1u << 1,        // r(Q_i) < r(P_i)
  kTieOrder = 1u << 2,        // r(Q_i) = r(P_i) and σ_{i+1} precedes σ_i
  kNonModular = 1u << 3,      // r(P_i) - r(P_{i-1}) > r(P_{i+1}) - r(Q_i)
};

// kGreedySwap compares P_i against the swapped prefix Q_i. kLiteral compares
// consecutive prefixes P_i, P_{i+1} in the first two conditions; it is kept for
// diagnostics and does not reproduce the F-expansion.
enum class DescentRule { kGreedySwap, kLiteral };

struct DescentReport {
  Permutation permutation;
  DescentSet descent_set;
  // causes[i-1] is a DescentCause bitmask for position i.
  std::vector<unsigned> causes;

  bool has_cause(int position, DescentCause cause) const {
    return (causes.at(static_cast<std::size_t>(position - 1)) & static_cast<unsigned>(cause)) != 0;
  }
};

// Throws PreconditionError if sigma is not A-feasible.
DescentReport descents(const Megagreedoid& m, const Permutation& sigma,
                       DescentRule rule = DescentRule::kGreedySwap);

// Σ_{σ ∈ 𝔖(A)} F_{Des(σ), |I|}.
QsymElement chi_F(const Megagreedoid& m, DescentRule rule = DescentRule::kGreedySwap);

// Σ over chains ∅ = S_0 ⊂ ... ⊂ S_k = I of feasible sets whose consecutive
// intervals are boolean with modular local rank, of M_{{|S_1|..|S_{k-1}|}, |I|}.
QsymElement chi_flag(const Megagreedoid& m);

// Level sets of f: blocks f^{-1}(v) for the used values in increasing order,
// and the cumulative sets S_0 = ∅ ⊂ S_1 ⊂ ... ⊂ S_k = I.
struct LevelChain {
  std::vector<Subset> blocks;
  std::vector<Subset> cumulative;
};

// f holds one positive value per ground element, in ground order.
LevelChain level_chain(std::span<const long> f);

// Every level set {i : f(i) <= c} is feasible.
bool is_feasible_function(const Megagreedoid& m, std::span<const long> f);
// Every small perturbation stays feasible. A perturbation splits each level
// block in an arbitrary order, and every set between two consecutive level
// sets is a prefix of some split; so this holds iff each consecutive interval
// of the level chain is boolean.
bool is_strongly_feasible(const Megagreedoid& m, std::span<const long> f);
// Strongly feasible with modular local rank on every level interval.
bool is_generic(const Megagreedoid& m, std::span<const long> f);

// Brute force over all f : I -> [n].
Integer oracle_count_generic(const Megagreedoid& m, long n);

// Evaluates χ(M, n + k) and Σ_{S ∈ A} χ(M|_S, n) χ(M/S, k); true when equal.
bool convolution_check(const Megagreedoid& m, long n, long k);

// (-1)^{|I|} χ(M, -n).
Rational reciprocity_eval(const Megagreedoid& m, long n);

// Number of distinct greedy vertices v_σ (σ_i ↦ r(P_i) - r(P_{i-1})) over
// feasible σ along which f is weakly increasing.
std::size_t vertex_multiplicity(const Megagreedoid& m, std::span<const long> f);

// Σ of vertex_multiplicity over the r-feasible f : I -> [n].
Integer vertex_sum(const Megagreedoid& m, long n);

// Orientations of the full edges that are acyclic and in which every vertex
// has a directed path to the root. Throws UnsupportedInput on half-edges.
Integer count_rooted_acyclic_orientations(const RootedMultigraph& g);

}  // namespace mg
