#include "doctest.h"
#include "fixtures.hpp"
#include "megagreedoid/constructions.hpp"
#include "megagreedoid/corpus.hpp"
#include "megagreedoid/errors.hpp"
#include "megagreedoid/hopf.hpp"
#include "megagreedoid/invariants.hpp"

using namespace mg;
using mgtest::set_of;

namespace {

// Same structure with the top rank raised by one; keeps single-element and
// empty minors untouched so only genuinely composite terms change.
Megagreedoid bump_top(const Megagreedoid& m) {
  if (m.size() < 2) return m;
  const std::size_t total = std::size_t{1} << m.size();
  std::vector<char> feasible(total);
  std::vector<Rational> rank(total);
  for (Subset s : m.family()) {
    feasible[s.mask()] = 1;
    rank[s.mask()] = m.rank(s) + (s == m.all() ? 1 : 0);
  }
  return Megagreedoid::from_table(m.ground(), std::move(feasible), std::move(rank));
}

std::vector<Megagreedoid> small_corpus(int max_size) {
  std::vector<Megagreedoid> out{mgtest::example_graph_megagreedoid(), mgtest::example_greedoid(),
                                mgtest::example_polymatroid()};
  for (const auto& entry : mgtest::corpus()) {
    if (entry.megagreedoid.size() <= max_size) out.push_back(entry.megagreedoid);
  }
  return out;
}

bool integral(const FormalSum& f) {
  for (const auto& [key, term] : f.terms()) {
    if (!is_integer(term.coefficient)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("formal sums") {
  const Megagreedoid m = mgtest::example_greedoid();
  FormalSum f(m, 2);
  f.add(mgtest::example_polymatroid(), 1);
  f.add(relabel(m, {"f", "u", "n"}), -2);
  CHECK(f.terms().size() == 1);
  CHECK_THROWS_AS(f.add(mgtest::example_graph_megagreedoid(), 1), PreconditionError);
  FormalSum g(mgtest::example_polymatroid());
  CHECK(f == g);
  g *= Rational(0);
  CHECK(g.is_zero());
  CHECK(render(g) == "0");
  CHECK(render(FormalSum(Megagreedoid())) == "1 <|{}:0>");
}

TEST_CASE("coproduct of the example rooted graph") {
  const Megagreedoid m = mgtest::example_graph_megagreedoid();
  const GroundSet& g = m.ground();
  const TensorSum d = coproduct(m, set_of(g, "fp"));
  REQUIRE(d.terms().size() == 1);
  const auto& term = d.terms().begin()->second;
  CHECK(term.left == canonical(restrict(m, set_of(g, "fp"))));
  CHECK(term.right == canonical(contract(m, set_of(g, "fp"))));
  CHECK(term.coefficient == 1);
  const TensorSum unit = coproduct(m, Subset());
  REQUIRE(unit.terms().size() == 1);
  CHECK(unit.terms().begin()->second.left == Megagreedoid());
  CHECK(unit.terms().begin()->second.right == canonical(m));
  CHECK(coproduct(m, set_of(g, "p")).is_zero());
  CHECK_THROWS_AS(coproduct(m, Subset(0b10000)), PreconditionError);
  FormalSum sum(m, 3);
  CHECK(coproduct(sum, canonical(m).ground().subset_of(std::vector<std::string>{"f", "p"})).terms().begin()
            ->second.coefficient == 3);
}

TEST_CASE("Hopf axioms on the examples and the corpus") {
  const std::vector<Megagreedoid> all = small_corpus(5);
  const HopfReport report = verify_hopf_axioms(all);
  CHECK(report.passed());
  CHECK(report.checks > 1000);
  for (const auto& failure : report.failures) MESSAGE(failure);
  CHECK(verify_hopf_axioms(std::vector<Megagreedoid>{}).passed());
  CHECK(verify_hopf_axioms(std::vector<Megagreedoid>{Megagreedoid()}).passed());
}

TEST_CASE("mutated operations are caught") {
  const std::vector<Megagreedoid> all = small_corpus(4);
  SUBCASE("restriction") {
    HopfOperations ops;
    ops.restrict = [](const Megagreedoid& m, Subset s) { return bump_top(mg::restrict(m, s)); };
    const HopfReport report = verify_hopf_axioms(all, ops);
    REQUIRE_FALSE(report.passed());
    bool compatibility = false;
    for (const auto& f : report.failures) compatibility = compatibility || f.rfind("compatibility", 0) == 0;
    CHECK(compatibility);
    CHECK(report.failures.front().find("A=") != std::string::npos);
  }
  SUBCASE("contraction") {
    HopfOperations ops;
    ops.contract = [](const Megagreedoid& m, Subset s) { return bump_top(mg::contract(m, s)); };
    CHECK_FALSE(verify_hopf_axioms(all, ops).passed());
  }
  SUBCASE("product") {
    HopfOperations ops;
    ops.product = [](const Megagreedoid& a, const Megagreedoid& b) { return bump_top(direct_sum(a, b)); };
    CHECK_FALSE(verify_hopf_axioms(all, ops).passed());
  }
}

TEST_CASE("antipode base cases") {
  CHECK(antipode(Megagreedoid()) == FormalSum(Megagreedoid()));
  const Megagreedoid single = mgtest::explicit_megagreedoid({"v"}, {{"", 0}, {"v", 5}});
  CHECK(antipode(single) == FormalSum(single, -1));
  CHECK(antipode_takeuchi(single) == FormalSum(single, -1));
}

TEST_CASE("corpus: antipode identities") {
  for (const Megagreedoid& m : small_corpus(5)) {
    CAPTURE(encode(m));
    const FormalSum s = antipode(m);
    CHECK(integral(s));
    if (m.size() > 0) CHECK(antipode_convolution(m).is_zero());
    if (m.size() <= 4) CHECK(antipode_takeuchi(m) == s);
  }
}

TEST_CASE("antipode respects relabeling") {
  const Megagreedoid m = mgtest::example_graph_megagreedoid();
  CHECK(antipode(mgtest::example_graph_megagreedoid({"s", "a", "p", "f"})) == antipode(m));
}

TEST_CASE("the zeta character") {
  CHECK(character_zeta(Megagreedoid()) == 1);
  CHECK(character_zeta(mgtest::example_graph_megagreedoid()) == 0);
  CHECK(character_zeta(from_rooted_graph(mgtest::star_graph(3, {}))) == 1);
  CHECK(character_zeta(mgtest::example_polymatroid()) == 0);
  for (const auto& entry : mgtest::corpus()) {
    CAPTURE(entry.name);
    CHECK(basic_quasisymmetric(entry.megagreedoid, character_zeta) == chi_flag(entry.megagreedoid));
  }
}

TEST_CASE("rooted graph coproduct") {
  const RootedMultigraph g = mgtest::example_graph();
  const Subset s = set_of(g.ground(), "fp");
  const auto pair = rg_coproduct(g, s);
  REQUIRE(pair.has_value());
  CHECK(pair->first == graph_restrict(g, s));
  CHECK(pair->second == graph_contract(g, s));
  const Megagreedoid m = from_rooted_graph(g);
  const TensorSum d = coproduct(m, s);
  const auto& term = d.terms().begin()->second;
  CHECK(canonical(from_rooted_graph(pair->first)) == term.left);
  CHECK(canonical(from_rooted_graph(pair->second)) == term.right);
  const auto unit = rg_coproduct(g, Subset());
  REQUIRE(unit.has_value());
  CHECK(unit->first.ground().size() == 0);
  CHECK(unit->first.full_edges().empty());
  CHECK(unit->second == g);
  CHECK_FALSE(rg_coproduct(g, set_of(g.ground(), "p")).has_value());
}

TEST_CASE("submonoid embeddings respect the product") {
  Rng rng(17);
  for (int i = 0; i < 20; ++i) {
    const Poset p = random_poset(rng, 1 + i % 3);
    const Poset q0 = random_poset(rng, 1 + i % 2);
    std::vector<std::string> labels;
    for (const auto& l : q0.ground().labels()) labels.push_back("t" + l);
    const Poset q(GroundSet(labels), q0.covers());
    CHECK(from_poset(poset_product(p, q)) == direct_sum(from_poset(p), from_poset(q)));
    const RankTable t = random_coverage_polymatroid(rng, 2);
    const RankTable u0 = random_coverage_polymatroid(rng, 2);
    const RankTable u(GroundSet({"x", "y"}), u0.values());
    CHECK(from_polymatroid(table_product(t, u)) == direct_sum(from_polymatroid(t), from_polymatroid(u)));
  }
}
