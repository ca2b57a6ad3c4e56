#pragma once

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "megagreedoid/constructions.hpp"
#include "megagreedoid/megagreedoid.hpp"
#include "megagreedoid/qsym.hpp"
#include "megagreedoid/rational.hpp"

namespace mg {

// A rational combination of megagreedoids on one ground set. Terms are held
// in canonical form (labels sorted) and keyed by canonical_encoding, so two
// sums are equal iff they agree up to reordering of the ground set.
class FormalSum {
 public:
  struct Term {
    Megagreedoid basis;
    Rational coefficient;
  };

  FormalSum() = default;
  explicit FormalSum(const Megagreedoid& m, const Rational& coefficient = 1);

  // Throws PreconditionError if m's label set differs from the sum's.
  void add(const Megagreedoid& m, const Rational& coefficient);
  FormalSum& operator+=(const FormalSum& other);
  FormalSum& operator*=(const Rational& scalar);

  bool is_zero() const { return terms_.empty(); }
  const std::map<std::string, Term>& terms() const { return terms_; }
  bool operator==(const FormalSum& other) const;

 private:
  std::vector<std::string> labels_;  // sorted; empty until the first term
  std::map<std::string, Term> terms_;
};

// Linear extension of direct_sum.
FormalSum product(const FormalSum& a, const FormalSum& b);

// Rational combination of pairs (left on S, right on T), both canonical.
class TensorSum {
 public:
  struct Term {
    Megagreedoid left;
    Megagreedoid right;
    Rational coefficient;
  };

  void add(const Megagreedoid& left, const Megagreedoid& right, const Rational& coefficient);
  bool is_zero() const { return terms_.empty(); }
  const std::map<std::pair<std::string, std::string>, Term>& terms() const { return terms_; }
  bool operator==(const TensorSum& other) const;

 private:
  std::map<std::pair<std::string, std::string>, Term> terms_;
};

// Δ_{S,T}(M) = M|_S ⊗ M/S when s is feasible, and 0 otherwise.
TensorSum coproduct(const Megagreedoid& m, Subset s);
// Linear extension; s is given in the sum's (sorted) label order.
TensorSum coproduct(const FormalSum& f, Subset s);

// s_I(f) = -Σ_{J ⊊ I, J ∈ A} s_J(f|_J) · f/J, with s_∅ the identity.
// Memoized within one call; safe to call concurrently.
FormalSum antipode(const Megagreedoid& m);
// Takeuchi's expansion: Σ_k (-1)^k Σ over set compositions (S_1, ..., S_k) of I
// with every S_1 ∪ ... ∪ S_j feasible, of the product of the successive minors.
FormalSum antipode_takeuchi(const Megagreedoid& m);
// Σ_{S ∈ A} s(m|_S) · m/S; zero for nonempty m by the antipode property.
FormalSum antipode_convolution(const Megagreedoid& m);

// 1 if A = 2^I and r is modular, else 0.
Rational character_zeta(const Megagreedoid& m);

using Character = std::function<Rational(const Megagreedoid&)>;
// Σ over feasible chains ∅ = S_0 ⊂ ... ⊂ S_k = I of
// Π ζ(m|_{S_i} / S_{i-1}) · M_{{|S_1|..|S_{k-1}|}, |I|}.
QsymElement basic_quasisymmetric(const Megagreedoid& m, const Character& zeta);

// The operations the axiom checker exercises; substitutable for mutation tests.
struct HopfOperations {
  std::function<Megagreedoid(const Megagreedoid&, const Megagreedoid&)> product = direct_sum;
  std::function<Megagreedoid(const Megagreedoid&, Subset)> restrict = mg::restrict;
  std::function<Megagreedoid(const Megagreedoid&, Subset)> contract = mg::contract;
};

struct HopfReport {
  std::size_t checks = 0;
  std::vector<std::string> failures;  // "<axiom>: <witness>"
  bool passed() const { return failures.empty(); }
};

// Associativity of the product (consecutive triples), coassociativity over all
// A ⊆ B ⊆ I, compatibility over all A ⊔ B = S ⊔ T for consecutive pairs, and
// multiplicativity of ζ. Operands are relabeled apart before multiplying.
HopfReport verify_hopf_axioms(std::span<const Megagreedoid> corpus, const HopfOperations& ops = {});

// g|_S ⊗ g/S for rooted graphs; nullopt (the zero tensor) when S ∪ {root}
// is not connected.
std::optional<std::pair<RootedMultigraph, RootedMultigraph>> rg_coproduct(const RootedMultigraph& g, Subset s);

// Rendering: one "<coefficient> <canonical encoding>" line per term; "0" when zero.
std::string render(const FormalSum& f);

}  // namespace mg
