#pragma once

#include <compare>
#include <string>
#include <vector>

#include "megagreedoid/megagreedoid.hpp"
#include "megagreedoid/qsym.hpp"

namespace mg {

// A face of the order complex of the proper part of A: a strictly increasing
// chain of feasible sets, none of them ∅ or I.
struct ChainFace {
  std::vector<Subset> sets;

  auto operator<=>(const ChainFace&) const = default;
};

// "({f},{f,p,a})"
std::string format(const GroundSet& ground, const ChainFace& face);

// Membership in Ψ = Σ(M) - Γ_r(M): padded with ∅ and I, every consecutive
// interval is boolean with modular local rank.
bool in_psi(const Megagreedoid& m, const ChainFace& chain);

// The prefix chain of a feasible permutation, with ∅ and I dropped.
ChainFace facet_of(const Permutation& sigma);
// Recovers the permutation from a full prefix chain.
Permutation permutation_of(const Megagreedoid& m, const ChainFace& facet);

// One facet per feasible permutation, in greedy order.
std::vector<ChainFace> facets(const Megagreedoid& m);

// The greedy order on facets; see core greedy_compare.
std::strong_ordering greedy_compare(const Megagreedoid& m, const ChainFace& a, const ChainFace& b);

struct ShellingStep {
  Permutation permutation;
  ChainFace facet;
  ChainFace restriction;        // R(F_i)
  DescentSet restriction_ranks;  // ρ(R(F_i)), ρ(S) = |S|
  std::size_t new_faces = 0;     // |Ψ_i - Ψ_{i-1}|
};

struct ShellingCertificate {
  int degree = 0;
  std::vector<ShellingStep> steps;
};

// Walks the facets in greedy order and checks that the faces each one adds to
// Ψ have a unique minimal element. Throws ShellingFailure with the offending
// facet and its minimal new faces otherwise.
ShellingCertificate verify_shelling(const Megagreedoid& m);

// Σ_{σ ∈ Ψ} M_{ρ(σ), |I|}, by direct enumeration of chains.
QsymElement face_qsym(const Megagreedoid& m);
// Σ_i F_{ρ(R(F_i)), |I|}.
QsymElement shelling_qsym(const ShellingCertificate& cert);

// One line per facet in greedy order: permutation, descent set, restriction face.
std::string render_certificate(const Megagreedoid& m, const ShellingCertificate& cert);

}  // namespace mg
