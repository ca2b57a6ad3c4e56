#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "megagreedoid/ground_set.hpp"
#include "megagreedoid/rational.hpp"
#include "megagreedoid/subset.hpp"

namespace mg {

// A permutation of the ground set, as element indices.
using Permutation = std::vector<int>;

// A set family A ⊆ 2^I with a rational rank function on A, subject to
//   (1) every nonempty S ∈ A loses some x with S - x ∈ A, and every S ≠ I
//       in A gains some y with S + y ∈ A (∅ and I are members);
//   (2) for X ⊆ Y in A and z ∉ Y with X + z, Y + z ∈ A,
//       r(Y + z) - r(Y) <= r(X + z) - r(X).
// Ranks are normalized so that r(∅) = 0. Values are immutable.
class Megagreedoid {
 public:
  // The empty megagreedoid: I = ∅, A = {∅}.
  Megagreedoid();

  // Validating constructor: shifts ranks so r(∅) = 0, then throws
  // AxiomViolation (with the first witnesses) if check_axioms fails.
  static Megagreedoid create(GroundSet ground, const std::map<Subset, Rational>& ranks);

  // Trusted constructor for callers that guarantee the axioms themselves.
  // `feasible` and `rank` are indexed by mask and have size 2^|I|.
  static Megagreedoid from_table(GroundSet ground, std::vector<char> feasible,
                                 std::vector<Rational> rank);

  const GroundSet& ground() const { return ground_; }
  int size() const { return ground_.size(); }
  Subset all() const { return ground_.all(); }

  bool is_feasible(Subset s) const {
    return s.mask() < feasible_.size() && feasible_[s.mask()] != 0;
  }
  // Throws InfeasibleSet when s ∉ A.
  const Rational& rank(Subset s) const;

  // Feasible sets in increasing mask order.
  const std::vector<Subset>& family() const { return family_; }

  bool operator==(const Megagreedoid& other) const;

 private:
  GroundSet ground_;
  std::vector<char> feasible_;
  std::vector<Rational> rank_;
  std::vector<Subset> family_;
};

// Raw input to the axiom checker: a family and a (possibly partial) rank map.
struct MegagreedoidCandidate {
  GroundSet ground;
  std::vector<Subset> family;
  std::map<Subset, Rational> rank;
};

struct AxiomWitness {
  enum class Kind {
    kEmptySetMissing,
    kGroundSetMissing,
    kNoRemoval,        // axiom (1): S ≠ ∅ has no x with S - x ∈ A
    kNoAugmentation,   // axiom (1): S ≠ I has no y with S + y ∈ A
    kSubmodularity,    // axiom (2) fails at (X, Y, z)
  };
  Kind kind;
  Subset s;  // S for axiom (1), X for axiom (2)
  Subset y;
  int z = -1;

  int axiom() const { return kind == Kind::kSubmodularity ? 2 : 1; }
  std::string describe(const GroundSet& ground) const;
};

struct AxiomReport {
  std::vector<AxiomWitness> violations;
  bool passed() const { return violations.empty(); }
};

// Throws MalformedInput if a family member has no rank or uses bits outside I.
AxiomReport check_axioms(const MegagreedoidCandidate& candidate);
AxiomReport check_axioms(const Megagreedoid& m);

// M|_S. Ground set is reindexed to the elements of s in their original order.
Megagreedoid restrict(const Megagreedoid& m, Subset s);
// M/S on I - S with r/S(X) = r(X ∪ S) - r(S).
Megagreedoid contract(const Megagreedoid& m, Subset s);
// Ground order of the result is m's order followed by n's.
Megagreedoid direct_sum(const Megagreedoid& m, const Megagreedoid& n);

// Same structure, new labels (position-wise).
Megagreedoid relabel(const Megagreedoid& m, std::vector<std::string> labels);
// Same labels, ground order sorted lexicographically.
Megagreedoid canonical(const Megagreedoid& m);
// Text key of canonical(m); equal keys iff canonical forms are equal.
std::string canonical_encoding(const Megagreedoid& m);
// Renders the structure in m's own ground order, e.g. "<a,b|{}:0;{a}:1>".
std::string encode(const Megagreedoid& m);

// Every Z with x ⊆ Z ⊆ y is feasible. Throws PreconditionError unless
// x ⊆ y are both feasible.
bool is_boolean_interval(const Megagreedoid& m, Subset x, Subset y);
// r(x ∪ T) - r(x) = Σ_{t ∈ T} (r(x + t) - r(x)) for every T ⊆ y - x.
// Throws PreconditionError unless [x, y] is a boolean interval.
bool is_modular_on_interval(const Megagreedoid& m, Subset x, Subset y);
// Boolean and modular; the no-throw combination used by chain predicates.
bool is_good_interval(const Megagreedoid& m, Subset x, Subset y);

// Set of the first k entries of perm.
Subset prefix_set(const Permutation& perm, std::size_t k);

// The greedy order on A-feasible permutations: at the first position where
// they differ, the smaller prefix rank wins; ties go to the element that comes
// first in the ground order.
std::strong_ordering greedy_compare(const Megagreedoid& m, const Permutation& a,
                                    const Permutation& b);

// All A-feasible permutations, sorted by greedy_compare.
std::vector<Permutation> feasible_permutations(const Megagreedoid& m);

// Labels concatenated when all are single characters, space-separated otherwise.
std::string format_permutation(const GroundSet& ground, const Permutation& perm);

}  // namespace mg
