#include <algorithm>

#include "doctest.h"
#include "fixtures.hpp"
#include "megagreedoid/complex.hpp"
#include "megagreedoid/errors.hpp"
#include "megagreedoid/invariants.hpp"

using namespace mg;
using mgtest::perm_of;
using mgtest::set_of;

namespace {

ChainFace face(const GroundSet& g, std::initializer_list<const char*> sets) {
  ChainFace f;
  for (const char* s : sets) f.sets.push_back(set_of(g, s));
  return f;
}

}  // namespace

TEST_CASE("membership in the relative complex") {
  const Megagreedoid m = mgtest::example_graph_megagreedoid();
  const GroundSet& g = m.ground();
  CHECK(in_psi(m, face(g, {"f", "fpa"})));
  CHECK(in_psi(m, face(g, {"a", "fsa"})));
  CHECK_FALSE(in_psi(m, face(g, {"fa"})));
  CHECK_FALSE(in_psi(m, ChainFace{}));
  CHECK_FALSE(in_psi(m, face(g, {"fpa", "f"})));
  CHECK_FALSE(in_psi(m, face(g, {"p"})));
  CHECK(format(g, face(g, {"f", "fpa"})) == "({f},{a,f,p})");
}

TEST_CASE("facets") {
  CHECK(facets(mgtest::example_graph_megagreedoid()).size() == 8);
  CHECK(facets(mgtest::example_greedoid()).size() == 4);
  const Megagreedoid boolean = mgtest::explicit_megagreedoid({"a", "b"}, {{"", 0}, {"a", 1}, {"b", 1}, {"ab", 2}});
  CHECK(facets(boolean).size() == 2);
  const Megagreedoid m = mgtest::example_graph_megagreedoid();
  for (const auto& sigma : feasible_permutations(m)) CHECK(permutation_of(m, facet_of(sigma)) == sigma);
  CHECK_THROWS_AS(permutation_of(m, face(m.ground(), {"f"})), PreconditionError);
}

TEST_CASE("greedy comparison of facets") {
  const Megagreedoid m = mgtest::example_greedoid();
  const GroundSet& g = m.ground();
  const ChainFace fun = facet_of(perm_of(g, "fun"));
  const ChainFace fnu = facet_of(perm_of(g, "fnu"));
  CHECK(greedy_compare(m, fun, fnu) == std::strong_ordering::less);
  CHECK(greedy_compare(m, fnu, fnu) == std::strong_ordering::equal);
  const auto all = facets(m);
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = 0; j < all.size(); ++j) {
      CHECK((greedy_compare(m, all[i], all[j]) == std::strong_ordering::less) == (i < j));
    }
  }
}

TEST_CASE("shelling certificate of the example rooted graph") {
  const Megagreedoid m = mgtest::example_graph_megagreedoid();
  const GroundSet& g = m.ground();
  const ShellingCertificate cert = verify_shelling(m);
  REQUIRE(cert.steps.size() == 8);
  int whole = 0;
  std::vector<ChainFace> edges;
  for (const auto& step : cert.steps) {
    CHECK(step.restriction_ranks == descents(m, step.permutation).descent_set);
    if (step.restriction == step.facet) {
      ++whole;
    } else {
      edges.push_back(step.restriction);
    }
  }
  CHECK(whole == 6);
  std::sort(edges.begin(), edges.end());
  std::vector<ChainFace> expected{face(g, {"f", "fpa"}), face(g, {"a", "fsa"})};
  std::sort(expected.begin(), expected.end());
  CHECK(edges == expected);
  CHECK(render(shelling_qsym(cert)) == "6*F[{1,2,3};4] + 2*F[{1,3};4]");
  CHECK(render(face_qsym(m)) == "8*M[{1,2,3};4] + 2*M[{1,3};4]");
  const std::string text = render_certificate(m, cert);
  CHECK(text.find("asfp des={1,2,3} R=({a},{a,s},{a,f,s})") != std::string::npos);
  CHECK(std::count(text.begin(), text.end(), '\n') == 8);
}

TEST_CASE("small certificates") {
  const Megagreedoid single = mgtest::explicit_megagreedoid({"v"}, {{"", 0}, {"v", 1}});
  const ShellingCertificate cert = verify_shelling(single);
  REQUIRE(cert.steps.size() == 1);
  CHECK(cert.steps.front().restriction.sets.empty());
  CHECK(render(face_qsym(Megagreedoid())) == "1*M[{};0]");
  CHECK(render(shelling_qsym(verify_shelling(Megagreedoid()))) == "1*F[{};0]");
}

TEST_CASE("corpus: face enumeration equals the flag expansion") {
  for (const auto& entry : mgtest::corpus()) {
    CAPTURE(entry.name);
    CHECK(face_qsym(entry.megagreedoid).terms() == chi_flag(entry.megagreedoid).terms());
  }
}

TEST_CASE("corpus: the relative complex is closed under refinement") {
  for (const auto& entry : mgtest::corpus()) {
    const Megagreedoid& m = entry.megagreedoid;
    CAPTURE(entry.name);
    for (const auto& f : facets(m)) {
      const std::uint32_t total = std::uint32_t{1} << f.sets.size();
      for (std::uint32_t b = 0; b < total; ++b) {
        ChainFace sub;
        for (std::size_t j = 0; j < f.sets.size(); ++j) {
          if ((b >> j) & 1u) sub.sets.push_back(f.sets[j]);
        }
        if (!in_psi(m, sub)) continue;
        // Γ is a subcomplex, so faces of Ψ stay in Ψ when vertices are added.
        for (std::size_t j = 0; j < f.sets.size(); ++j) {
          if ((b >> j) & 1u) continue;
          ChainFace refined = sub;
          refined.sets.insert(std::lower_bound(refined.sets.begin(), refined.sets.end(), f.sets[j],
                                               [](Subset x, Subset y) { return x.size() < y.size(); }),
                              f.sets[j]);
          CHECK(in_psi(m, refined));
        }
      }
    }
  }
}

TEST_CASE("corpus: a valid certificate reproduces the descent expansion") {
  int shelled = 0;
  for (const auto& entry : mgtest::corpus()) {
    CAPTURE(entry.name);
    const Megagreedoid& m = entry.megagreedoid;
    ShellingCertificate cert;
    try {
      cert = verify_shelling(m);
    } catch (const ShellingFailure&) {
      continue;
    }
    ++shelled;
    for (const auto& step : cert.steps) CHECK(step.restriction_ranks == descents(m, step.permutation).descent_set);
    CHECK(shelling_qsym(cert) == chi_F(m));
    CHECK(shelling_qsym(cert) == chi_flag(m));
  }
  CHECK(shelled > 0);
}
