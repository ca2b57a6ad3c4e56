#include "megagreedoid/complex.hpp"

#include <bit>
#include <map>
#include <sstream>

#include "megagreedoid/errors.hpp"
#include "megagreedoid/invariants.hpp"

namespace mg {

std::string format(const GroundSet& ground, const ChainFace& face) {
  std::string out = "(";
  for (std::size_t i = 0; i < face.sets.size(); ++i) {
    if (i) out += ',';
    out += ground.format(face.sets[i]);
  }
  return out + ")";
}

bool in_psi(const Megagreedoid& m, const ChainFace& chain) {
  Subset prev;
  for (Subset s : chain.sets) {
    if (s.empty() || s == m.all() || !m.is_feasible(s) || !prev.is_subset_of(s) || prev == s) return false;
    if (!is_good_interval(m, prev, s)) return false;
    prev = s;
  }
  return is_good_interval(m, prev, m.all());
}

ChainFace facet_of(const Permutation& sigma) {
  ChainFace face;
  Subset prefix;
  for (std::size_t i = 0; i + 1 < sigma.size(); ++i) {
    prefix = prefix.with(sigma[i]);
    face.sets.push_back(prefix);
  }
  return face;
}

Permutation permutation_of(const Megagreedoid& m, const ChainFace& facet) {
  if (static_cast<int>(facet.sets.size()) + 1 != std::max(m.size(), 1)) {
    throw PreconditionError("not a full prefix chain");
  }
  Permutation sigma;
  Subset prev;
  std::vector<Subset> padded = facet.sets;
  if (m.size() > 0) padded.push_back(m.all());
  for (Subset s : padded) {
    const Subset step = s - prev;
    if (step.size() != 1 || !prev.is_subset_of(s)) throw PreconditionError("not a full prefix chain");
    sigma.push_back(std::countr_zero(step.mask()));
    prev = s;
  }
  return sigma;
}

std::vector<ChainFace> facets(const Megagreedoid& m) {
  std::vector<ChainFace> out;
  for (const auto& sigma : feasible_permutations(m)) out.push_back(facet_of(sigma));
  return out;
}

std::strong_ordering greedy_compare(const Megagreedoid& m, const ChainFace& a, const ChainFace& b) {
  return greedy_compare(m, permutation_of(m, a), permutation_of(m, b));
}

namespace {

using Bits = std::vector<std::uint64_t>;

bool any_below(const Bits& bits, std::size_t limit) {
  for (std::size_t w = 0; w * 64 < limit; ++w) {
    std::uint64_t word = bits[w];
    const std::size_t hi = limit - w * 64;
    if (hi < 64) word &= (std::uint64_t{1} << hi) - 1;
    if (word) return true;
  }
  return false;
}

}  // namespace

ShellingCertificate verify_shelling(const Megagreedoid& m) {
  const auto perms = feasible_permutations(m);
  const std::size_t count = perms.size();
  const std::size_t words = (count + 63) / 64;
  std::vector<ChainFace> chains;
  // Feasible set -> facets (by greedy index) that contain it.
  std::map<std::uint32_t, Bits> containing;
  for (std::size_t i = 0; i < count; ++i) {
    chains.push_back(facet_of(perms[i]));
    for (Subset s : chains.back().sets) {
      auto& bits = containing[s.mask()];
      if (bits.empty()) bits.assign(words, 0);
      bits[i / 64] |= std::uint64_t{1} << (i % 64);
    }
  }

  ShellingCertificate cert;
  cert.degree = m.size();
  const std::size_t positions = chains.empty() ? 0 : chains.front().sets.size();
  const std::uint32_t face_count = std::uint32_t{1} << positions;
  std::vector<char> is_new(face_count);
  for (std::size_t i = 0; i < count; ++i) {
    const ChainFace& facet = chains[i];
    std::size_t new_faces = 0;
    for (std::uint32_t b = 0; b < face_count; ++b) {
      is_new[b] = 0;
      ChainFace face;
      for (std::size_t j = 0; j < positions; ++j) {
        if ((b >> j) & 1u) face.sets.push_back(facet.sets[j]);
      }
      if (!in_psi(m, face)) continue;
      bool earlier = i > 0;
      if (!face.sets.empty()) {
        Bits common(words, ~std::uint64_t{0});
        for (Subset s : face.sets) {
          const Bits& bits = containing.at(s.mask());
          for (std::size_t w = 0; w < words; ++w) common[w] &= bits[w];
        }
        earlier = any_below(common, i);
      }
      if (!earlier) {
        is_new[b] = 1;
        ++new_faces;
      }
    }
    std::vector<std::uint32_t> minimal;
    for (std::uint32_t b = 0; b < face_count; ++b) {
      if (!is_new[b]) continue;
      bool has_smaller = false;
      // Proper submasks of b.
      for (std::uint32_t sub = (b - 1) & b; b != 0 && !has_smaller; sub = (sub - 1) & b) {
        has_smaller = is_new[sub] != 0;
        if (sub == 0) break;
      }
      if (!has_smaller) minimal.push_back(b);
    }
    auto face_of = [&](std::uint32_t b) {
      ChainFace face;
      for (std::size_t j = 0; j < positions; ++j) {
        if ((b >> j) & 1u) face.sets.push_back(facet.sets[j]);
      }
      return face;
    };
    if (minimal.size() != 1) {
      std::ostringstream msg;
      msg << "greedy order is not a shelling at facet " << i << " ("
          << format_permutation(m.ground(), perms[i]) << "): " << minimal.size() << " minimal new faces";
      for (std::uint32_t b : minimal) msg << ' ' << format(m.ground(), face_of(b));
      throw ShellingFailure(msg.str());
    }
    ShellingStep step;
    step.permutation = perms[i];
    step.facet = facet;
    step.restriction = face_of(minimal.front());
    for (Subset s : step.restriction.sets) step.restriction_ranks.insert(s.size());
    step.new_faces = new_faces;
    cert.steps.push_back(std::move(step));
  }
  return cert;
}

QsymElement face_qsym(const Megagreedoid& m) {
  QsymElement out(Basis::kMonomial);
  ChainFace chain;
  auto extend = [&](auto&& self, Subset last) -> void {
    if (in_psi(m, chain)) {
      DescentSet ranks;
      for (Subset s : chain.sets) ranks.insert(s.size());
      out.add(ranks, m.size(), 1);
    }
    for (Subset t : m.family()) {
      if (t == last || t == m.all() || !last.is_subset_of(t) || !is_good_interval(m, last, t)) continue;
      chain.sets.push_back(t);
      self(self, t);
      chain.sets.pop_back();
    }
  };
  extend(extend, Subset());
  return out;
}

QsymElement shelling_qsym(const ShellingCertificate& cert) {
  QsymElement out(Basis::kFundamental);
  for (const auto& step : cert.steps) out.add(step.restriction_ranks, cert.degree, 1);
  return out;
}

std::string render_certificate(const Megagreedoid& m, const ShellingCertificate& cert) {
  std::string out;
  for (const auto& step : cert.steps) {
    out += format_permutation(m.ground(), step.permutation);
    out += " des=" + format(descents(m, step.permutation).descent_set);
    out += " R=" + format(m.ground(), step.restriction);
    out += '\n';
  }
  return out;
}

}  // namespace mg
