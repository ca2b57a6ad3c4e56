#include "megagreedoid/hopf.hpp"

#include <algorithm>
#include <unordered_map>

#include "megagreedoid/errors.hpp"

namespace mg {

namespace {

std::vector<std::string> sorted_labels(const Megagreedoid& m) {
  std::vector<std::string> labels = m.ground().labels();
  std::sort(labels.begin(), labels.end());
  return labels;
}

Megagreedoid tagged(const Megagreedoid& m, const std::string& tag) {
  std::vector<std::string> labels;
  for (const auto& l : m.ground().labels()) labels.push_back(tag + l);
  return relabel(m, std::move(labels));
}

}  // namespace

FormalSum::FormalSum(const Megagreedoid& m, const Rational& coefficient) {
  labels_ = sorted_labels(m);
  add(m, coefficient);
}

void FormalSum::add(const Megagreedoid& m, const Rational& coefficient) {
  std::vector<std::string> labels = sorted_labels(m);
  if (labels_.empty() && terms_.empty()) {
    labels_ = labels;
  } else if (labels != labels_) {
    throw PreconditionError("formal sum terms must share one ground set");
  }
  if (coefficient == 0) return;
  Megagreedoid c = canonical(m);
  std::string key = encode(c);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), Term{std::move(c), coefficient});
    return;
  }
  it->second.coefficient += coefficient;
  if (it->second.coefficient == 0) terms_.erase(it);
}

FormalSum& FormalSum::operator+=(const FormalSum& other) {
  for (const auto& [key, term] : other.terms_) add(term.basis, term.coefficient);
  return *this;
}

FormalSum& FormalSum::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, term] : terms_) term.coefficient *= scalar;
  return *this;
}

bool FormalSum::operator==(const FormalSum& other) const {
  if (terms_.size() != other.terms_.size()) return false;
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  for (; a != terms_.end(); ++a, ++b) {
    if (a->first != b->first || a->second.coefficient != b->second.coefficient) return false;
  }
  return true;
}

FormalSum product(const FormalSum& a, const FormalSum& b) {
  FormalSum out;
  for (const auto& [ka, ta] : a.terms()) {
    for (const auto& [kb, tb] : b.terms()) out.add(direct_sum(ta.basis, tb.basis), ta.coefficient * tb.coefficient);
  }
  return out;
}

void TensorSum::add(const Megagreedoid& left, const Megagreedoid& right, const Rational& coefficient) {
  if (coefficient == 0) return;
  Megagreedoid l = canonical(left);
  Megagreedoid r = canonical(right);
  std::pair<std::string, std::string> key{encode(l), encode(r)};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), Term{std::move(l), std::move(r), coefficient});
    return;
  }
  it->second.coefficient += coefficient;
  if (it->second.coefficient == 0) terms_.erase(it);
}

bool TensorSum::operator==(const TensorSum& other) const {
  if (terms_.size() != other.terms_.size()) return false;
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  for (; a != terms_.end(); ++a, ++b) {
    if (a->first != b->first || a->second.coefficient != b->second.coefficient) return false;
  }
  return true;
}

TensorSum coproduct(const Megagreedoid& m, Subset s) {
  if (!m.ground().contains_mask(s)) throw PreconditionError("coproduct subset outside the ground set");
  TensorSum out;
  if (m.is_feasible(s)) out.add(restrict(m, s), contract(m, s), 1);
  return out;
}

TensorSum coproduct(const FormalSum& f, Subset s) {
  TensorSum out;
  for (const auto& [key, term] : f.terms()) {
    TensorSum piece = coproduct(term.basis, s);
    for (const auto& [k, t] : piece.terms()) out.add(t.left, t.right, t.coefficient * term.coefficient);
  }
  return out;
}

namespace {

class AntipodeSolver {
 public:
  // `c` must be canonical.
  const FormalSum& solve(const Megagreedoid& c) {
    std::string key = encode(c);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    FormalSum result;
    if (c.size() == 0) {
      result = FormalSum(c, 1);
    } else {
      for (Subset j : c.family()) {
        if (j == c.all()) continue;
        FormalSum left = solve(canonical(restrict(c, j)));
        FormalSum term = product(left, FormalSum(contract(c, j)));
        term *= Rational(-1);
        result += term;
      }
    }
    return memo_.emplace(std::move(key), std::move(result)).first->second;
  }

 private:
  std::unordered_map<std::string, FormalSum> memo_;
};

void takeuchi(const Megagreedoid& c, Subset placed, const Megagreedoid& acc, int blocks, FormalSum& out) {
  if (placed == c.all()) {
    out.add(acc, blocks % 2 == 0 ? Rational(1) : Rational(-1));
    return;
  }
  const Subset rest = c.all() - placed;
  for_each_between(Subset(), rest, [&](Subset block) {
    if (block.empty()) return;
    const Subset next = placed | block;
    if (!c.is_feasible(next)) return;
    const Megagreedoid upper = restrict(c, next);
    const Megagreedoid minor = contract(upper, compress(placed, next));
    takeuchi(c, next, direct_sum(acc, minor), blocks + 1, out);
  });
}

}  // namespace

FormalSum antipode(const Megagreedoid& m) {
  AntipodeSolver solver;
  return solver.solve(canonical(m));
}

FormalSum antipode_takeuchi(const Megagreedoid& m) {
  const Megagreedoid c = canonical(m);
  FormalSum out;
  takeuchi(c, Subset(), Megagreedoid(), 0, out);
  return out;
}

FormalSum antipode_convolution(const Megagreedoid& m) {
  AntipodeSolver solver;
  FormalSum out;
  for (Subset s : m.family()) {
    out += product(solver.solve(canonical(restrict(m, s))), FormalSum(contract(m, s)));
  }
  return out;
}

Rational character_zeta(const Megagreedoid& m) {
  if (m.family().size() != (std::size_t{1} << m.size())) return 0;
  return is_modular_on_interval(m, Subset(), m.all()) ? 1 : 0;
}

QsymElement basic_quasisymmetric(const Megagreedoid& m, const Character& zeta) {
  std::map<std::uint32_t, std::map<std::uint32_t, Rational>> weight;
  weight[0][0] = 1;
  for (Subset s : m.family()) {
    auto found = weight.find(s.mask());
    if (found == weight.end()) continue;
    const std::uint32_t step = s.empty() ? 0u : std::uint32_t{1} << (s.size() - 1);
    for (Subset t : m.family()) {
      if (t == s || !s.is_subset_of(t)) continue;
      const Rational z = zeta(contract(restrict(m, t), compress(s, t)));
      if (z == 0) continue;
      auto& target = weight[t.mask()];
      for (const auto& [sizes, w] : found->second) target[sizes | step] += w * z;
    }
  }
  QsymElement out(Basis::kMonomial);
  for (const auto& [sizes, w] : weight[m.all().mask()]) out.add(DescentSet::from_mask(sizes), m.size(), w);
  return out;
}

HopfReport verify_hopf_axioms(std::span<const Megagreedoid> corpus, const HopfOperations& ops) {
  HopfReport report;
  const std::size_t n = corpus.size();
  auto fail = [&](const std::string& axiom, const std::string& witness) {
    report.failures.push_back(axiom + ": " + witness);
  };

  for (std::size_t i = 0; i < n; ++i) {
    const Megagreedoid a = tagged(corpus[i], "1:");
    const Megagreedoid b = tagged(corpus[(i + 1) % n], "2:");
    const Megagreedoid c = tagged(corpus[(i + 2) % n], "3:");
    ++report.checks;
    if (canonical_encoding(ops.product(ops.product(a, b), c)) !=
        canonical_encoding(ops.product(a, ops.product(b, c)))) {
      fail("associativity", "corpus triple starting at " + std::to_string(i));
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    const Megagreedoid& m = corpus[i];
    for_each_between(Subset(), m.all(), [&](Subset b) {
      for_each_between(Subset(), b, [&](Subset a) {
        ++report.checks;
        std::optional<std::string> lhs;
        std::optional<std::string> rhs;
        if (m.is_feasible(b)) {
          const Megagreedoid mb = ops.restrict(m, b);
          const Subset a_in_b = compress(a, b);
          if (mb.is_feasible(a_in_b)) {
            lhs = canonical_encoding(ops.restrict(mb, a_in_b)) + "|" +
                  canonical_encoding(ops.contract(mb, a_in_b)) + "|" + canonical_encoding(ops.contract(m, b));
          }
        }
        if (m.is_feasible(a)) {
          const Megagreedoid ma = ops.contract(m, a);
          const Subset rest_in = compress(b - a, m.all() - a);
          if (ma.is_feasible(rest_in)) {
            rhs = canonical_encoding(ops.restrict(m, a)) + "|" + canonical_encoding(ops.restrict(ma, rest_in)) +
                  "|" + canonical_encoding(ops.contract(ma, rest_in));
          }
        }
        if (lhs != rhs) {
          fail("coassociativity", "corpus " + std::to_string(i) + " A=" + m.ground().format(a) +
                                      " B=" + m.ground().format(b));
        }
      });
    }
    );
  }

  for (std::size_t i = 0; i < n; ++i) {
    const Megagreedoid f = tagged(corpus[i], "L:");
    const Megagreedoid g = tagged(corpus[(i + 1) % n], "R:");
    const Megagreedoid fg = ops.product(f, g);
    const int shift = f.size();
    const Subset low = f.all();
    ++report.checks;
    if (character_zeta(fg) != character_zeta(f) * character_zeta(g)) {
      fail("character multiplicativity", "corpus pair starting at " + std::to_string(i));
    }
    for_each_between(Subset(), fg.all(), [&](Subset a) {
      ++report.checks;
      const Subset as = a & low;
      const Subset at(a.mask() >> shift);
      const bool left_zero = !fg.is_feasible(a);
      const bool right_zero = !f.is_feasible(as) || !g.is_feasible(at);
      const std::string witness = "pair " + std::to_string(i) + " A=" + fg.ground().format(a);
      if (left_zero != right_zero) {
        fail("compatibility", witness + " (feasibility)");
        return;
      }
      if (left_zero) return;
      if (canonical_encoding(ops.restrict(fg, a)) !=
          canonical_encoding(ops.product(ops.restrict(f, as), ops.restrict(g, at)))) {
        fail("compatibility", witness + " (restriction)");
      }
      if (canonical_encoding(ops.contract(fg, a)) !=
          canonical_encoding(ops.product(ops.contract(f, as), ops.contract(g, at)))) {
        fail("compatibility", witness + " (contraction)");
      }
    });
  }
  return report;
}

std::optional<std::pair<RootedMultigraph, RootedMultigraph>> rg_coproduct(const RootedMultigraph& g, Subset s) {
  if (!g.ground().contains_mask(s) || !g.is_connected_with_root(s)) return std::nullopt;
  return std::make_pair(graph_restrict(g, s), graph_contract(g, s));
}

std::string render(const FormalSum& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [key, term] : f.terms()) {
    if (!out.empty()) out += '\n';
    out += to_string(term.coefficient) + " " + key;
  }
  return out;
}

}  // namespace mg
