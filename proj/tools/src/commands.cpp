#include "mgcli/commands.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "megagreedoid/complex.hpp"
#include "megagreedoid/corpus.hpp"
#include "megagreedoid/errors.hpp"
#include "megagreedoid/hopf.hpp"
#include "megagreedoid/invariants.hpp"
#include "megagreedoid/qsym.hpp"
#include "mgcli/document.hpp"

namespace mgcli {

namespace {

struct Options {
  std::string input = "-";
  std::string basis = "F";
  std::string method = "descents";
  std::string antipode_method = "recursive";
  bool literal = false;
  bool show_descents = false;
  std::vector<long> at;
  std::string fn;
  long count = 0;
  long reciprocity_n = 1;
  long max_n = 0;
  std::uint64_t seed = 1;
  std::size_t size = 10;
  int max_elements = 5;
};

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << in.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw mg::MalformedInput("cannot open '" + path + "'");
  buffer << file.rdbuf();
  return buffer.str();
}

mg::DescentRule rule_of(const Options& o) {
  return o.literal ? mg::DescentRule::kLiteral : mg::DescentRule::kGreedySwap;
}

std::vector<long> parse_values(const std::string& text) {
  std::vector<long> values;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw mg::MalformedInput("--fn: '" + item + "' is not an integer");
    values.push_back(v);
  }
  return values;
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

class Table {
 public:
  void row(const std::string& check, bool ok) {
    rows_.emplace_back(check, ok);
    if (ok) ++passed_;
  }
  bool all_passed() const { return passed_ == rows_.size(); }
  void print(std::ostream& out) const {
    std::size_t width = 5;
    for (const auto& [check, ok] : rows_) width = std::max(width, check.size());
    out << pad("check", width + 2) << "result\n";
    for (const auto& [check, ok] : rows_) out << pad(check, width + 2) << (ok ? "pass" : "FAIL") << '\n';
    out << "summary: " << passed_ << " pass, " << rows_.size() - passed_ << " fail\n";
  }

 private:
  std::vector<std::pair<std::string, bool>> rows_;
  std::size_t passed_ = 0;
};

int cmd_check(const StructureDocument& doc, std::ostream& out) {
  try {
    const mg::Megagreedoid m = build(doc);
    out << "valid megagreedoid: " << m.size() << " elements, " << m.family().size() << " feasible sets\n";
    return kExitOk;
  } catch (const mg::AxiomViolation& e) {
    out << "invalid: " << e.what() << '\n';
  } catch (const mg::InvalidGreedoid& e) {
    out << "invalid: " << e.what() << '\n';
  } catch (const mg::InvalidPolymatroid& e) {
    out << "invalid: " << e.what() << '\n';
  } catch (const mg::InvalidPoset& e) {
    out << "invalid: " << e.what() << '\n';
  } catch (const mg::ConnectivityError& e) {
    out << "invalid: " << e.what() << '\n';
  }
  return kExitVerificationFailed;
}

int cmd_chi(const mg::Megagreedoid& m, const Options& o, std::ostream& out) {
  const mg::QsymElement chi = o.method == "flag" ? mg::chi_flag(m) : mg::chi_F(m, rule_of(o));
  out << mg::render(mg::to_basis(chi, o.basis == "M" ? mg::Basis::kMonomial : mg::Basis::kFundamental)) << '\n';
  return kExitOk;
}

int cmd_poly(const mg::Megagreedoid& m, const Options& o, std::ostream& out) {
  const mg::CountingPolynomial p = mg::specialize_poly(mg::chi_F(m, rule_of(o)));
  if (o.at.empty()) {
    out << mg::render(p) << '\n';
    return kExitOk;
  }
  for (long n : o.at) out << mg::to_string(p(mg::Rational(n))) << '\n';
  return kExitOk;
}

int cmd_perms(const mg::Megagreedoid& m, const Options& o, std::ostream& out) {
  for (const auto& sigma : mg::feasible_permutations(m)) {
    out << mg::format_permutation(m.ground(), sigma);
    if (o.show_descents) out << ' ' << mg::format(mg::descents(m, sigma, rule_of(o)).descent_set);
    out << '\n';
  }
  return kExitOk;
}

int cmd_generic(const mg::Megagreedoid& m, const Options& o, std::ostream& out) {
  if (o.fn.empty() == (o.count == 0)) throw mg::MalformedInput("generic needs exactly one of --fn and --count");
  if (o.count != 0) {
    if (o.count < 0) throw mg::MalformedInput("--count must be positive");
    out << mg::oracle_count_generic(m, o.count) << '\n';
    return kExitOk;
  }
  const std::vector<long> f = parse_values(o.fn);
  if (static_cast<int>(f.size()) != m.size()) {
    throw mg::MalformedInput("--fn needs " + std::to_string(m.size()) + " values, one per element of the order");
  }
  auto yes = [](bool b) { return b ? "true" : "false"; };
  out << "feasible " << yes(mg::is_feasible_function(m, f)) << '\n';
  out << "strongly_feasible " << yes(mg::is_strongly_feasible(m, f)) << '\n';
  out << "generic " << yes(mg::is_generic(m, f)) << '\n';
  return kExitOk;
}

int cmd_shelling(const mg::Megagreedoid& m, std::ostream& out, std::ostream& err) {
  try {
    out << mg::render_certificate(m, mg::verify_shelling(m));
    return kExitOk;
  } catch (const mg::ShellingFailure& e) {
    err << "shelling failed: " << e.what() << '\n';
    return kExitVerificationFailed;
  }
}

int cmd_reciprocity(const mg::Megagreedoid& m, const Options& o, std::ostream& out) {
  if (o.reciprocity_n < 1) throw mg::MalformedInput("--n must be positive");
  const mg::Rational lhs = mg::reciprocity_eval(m, o.reciprocity_n);
  const mg::Integer rhs = mg::vertex_sum(m, o.reciprocity_n);
  out << "polynomial " << mg::to_string(lhs) << '\n' << "vertex_sum " << rhs << '\n';
  const bool ok = lhs == mg::Rational(rhs);
  out << (ok ? "agree" : "disagree") << '\n';
  return ok ? kExitOk : kExitVerificationFailed;
}

int cmd_orientations(const StructureDocument& doc, const mg::Megagreedoid& m, std::ostream& out) {
  const auto g = rooted_graph_of(doc);
  if (!g) throw mg::UnsupportedInput("orientations needs a rooted_graph document");
  const mg::Integer count = mg::count_rooted_acyclic_orientations(*g);
  const mg::Rational value = mg::reciprocity_eval(m, 1);
  out << "orientations " << count << '\n' << "polynomial " << mg::to_string(value) << '\n';
  const bool ok = value == mg::Rational(count);
  out << (ok ? "agree" : "disagree") << '\n';
  return ok ? kExitOk : kExitVerificationFailed;
}

int cmd_antipode(const mg::Megagreedoid& m, const Options& o, std::ostream& out) {
  out << mg::render(o.antipode_method == "takeuchi" ? mg::antipode_takeuchi(m) : mg::antipode(m)) << '\n';
  return kExitOk;
}

int cmd_hopf_verify(const mg::Megagreedoid& m, std::ostream& out) {
  const std::vector<mg::Megagreedoid> corpus{m};
  const mg::HopfReport report = mg::verify_hopf_axioms(corpus);
  std::vector<std::string> failures = report.failures;
  std::size_t checks = report.checks;
  const mg::FormalSum s = mg::antipode(m);
  ++checks;
  if (m.size() > 0 && !mg::antipode_convolution(m).is_zero()) failures.push_back("antipode convolution: nonzero");
  ++checks;
  for (const auto& [key, term] : s.terms()) {
    if (!mg::is_integer(term.coefficient)) {
      failures.push_back("antipode integrality: coefficient " + mg::to_string(term.coefficient));
      break;
    }
  }
  if (m.size() <= 4) {
    ++checks;
    if (!(s == mg::antipode_takeuchi(m))) failures.push_back("antipode: recursive and set-composition forms differ");
  }
  out << "checks " << checks << ", failures " << failures.size() << '\n';
  for (const auto& f : failures) out << f << '\n';
  return failures.empty() ? kExitOk : kExitVerificationFailed;
}

int cmd_oracle(const mg::Megagreedoid& m, const Options& o, std::ostream& out) {
  Table table;
  const mg::QsymElement chi = mg::chi_F(m, rule_of(o));
  const mg::QsymElement flag = mg::chi_flag(m);
  table.row("chi_flag = chi_F", mg::to_basis(flag, mg::Basis::kFundamental) == chi);
  table.row("face_qsym = chi_flag", mg::face_qsym(m) == flag);
  try {
    const mg::ShellingCertificate cert = mg::verify_shelling(m);
    table.row("greedy order is a shelling", true);
    table.row("shelling_qsym = chi_F", mg::shelling_qsym(cert) == chi);
    bool rho = true;
    for (const auto& step : cert.steps) rho = rho && step.restriction_ranks == mg::descents(m, step.permutation).descent_set;
    table.row("restriction ranks = descent sets", rho);
  } catch (const mg::ShellingFailure&) {
    table.row("greedy order is a shelling", false);
  }
  const long max_n = o.max_n > 0 ? o.max_n : m.size() + 1;
  for (long n = 1; n <= max_n; ++n) {
    const mg::Rational predicted = mg::count_specialize(chi, n);
    const mg::Integer counted = mg::oracle_count_generic(m, n);
    std::ostringstream label;
    label << "count n=" << n << ": chi_F " << mg::to_string(predicted) << ", brute force " << counted;
    table.row(label.str(), predicted == mg::Rational(counted));
  }
  table.print(out);
  return table.all_passed() ? kExitOk : kExitVerificationFailed;
}

int cmd_corpus(const Options& o, std::ostream& out) {
  if (o.max_elements < 1 || o.max_elements > mg::GroundSet::kMaxSize) {
    throw mg::MalformedInput("--max-elements out of range");
  }
  const auto corpus = mg::generate_corpus(o.seed, o.size, o.max_elements);
  out << "[\n";
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    std::string text = render_document(document_of(corpus[i]));
    text.pop_back();
    out << text << (i + 1 < corpus.size() ? ",\n" : "\n");
  }
  out << "]\n";
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Megagreedoid invariants, shellings and Hopf monoid checks", "mgtool"};
  app.require_subcommand(1);
  Options o;

  auto with_input = [&](CLI::App* sub) {
    sub->add_option("input", o.input, "Structure document (JSON); '-' reads standard input");
    return sub;
  };
  auto with_rule = [&](CLI::App* sub) {
    sub->add_flag("--literal-descents", o.literal, "Use the literal chain-comparison descent conditions");
    return sub;
  };

  auto* check = with_input(app.add_subcommand("check", "Validate a structure document"));
  auto* chi = with_rule(with_input(app.add_subcommand("chi", "Quasisymmetric invariant")));
  chi->add_option("--basis", o.basis, "Output basis")->check(CLI::IsMember({"F", "M"}));
  chi->add_option("--method", o.method, "descents: sum over feasible permutations; flag: sum over chains")
      ->check(CLI::IsMember({"descents", "flag"}));
  auto* poly = with_rule(with_input(app.add_subcommand("poly", "Counting polynomial")));
  poly->add_option("--at", o.at, "Evaluate at n (repeatable, negatives allowed)")->allow_extra_args(false);
  auto* perms = with_rule(with_input(app.add_subcommand("perms", "Feasible permutations in greedy order")));
  perms->add_flag("--descents", o.show_descents, "Print descent sets");
  auto* generic = with_input(app.add_subcommand("generic", "Feasibility predicates and brute-force counts"));
  generic->add_option("--fn", o.fn, "Comma-separated values, one per element of the order");
  generic->add_option("--count", o.count, "Count generic functions into [n]");
  auto* shelling = with_input(app.add_subcommand("shelling", "Verify the greedy shelling and print its certificate"));
  auto* reciprocity = with_input(app.add_subcommand("reciprocity", "Compare the polynomial at -n with the vertex sum"));
  reciprocity->add_option("--n", o.reciprocity_n, "Number of colors");
  auto* orientations = with_input(app.add_subcommand("orientations", "Count root-reaching acyclic orientations"));
  auto* antipode = with_input(app.add_subcommand("antipode", "Antipode as a formal sum"));
  antipode->add_option("--method", o.antipode_method, "recursive or takeuchi")
      ->check(CLI::IsMember({"recursive", "takeuchi"}));
  auto* hopf = with_input(app.add_subcommand("hopf-verify", "Check the Hopf monoid axioms on one structure"));
  auto* oracle = with_rule(with_input(app.add_subcommand("oracle", "Run the cross-check battery")));
  oracle->add_option("--max-n", o.max_n, "Largest number of colors to brute-force (default |I|+1)");
  auto* corpus = app.add_subcommand("corpus", "Print seeded random structure documents");
  corpus->add_option("--seed", o.seed, "Random seed");
  corpus->add_option("--size", o.size, "Number of documents");
  corpus->add_option("--max-elements", o.max_elements, "Largest ground set");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (corpus->parsed()) return cmd_corpus(o, out);
    const StructureDocument doc = parse_document(read_input(o.input, in));
    if (check->parsed()) return cmd_check(doc, out);
    const mg::Megagreedoid m = build(doc);
    if (chi->parsed()) return cmd_chi(m, o, out);
    if (poly->parsed()) return cmd_poly(m, o, out);
    if (perms->parsed()) return cmd_perms(m, o, out);
    if (generic->parsed()) return cmd_generic(m, o, out);
    if (shelling->parsed()) return cmd_shelling(m, out, err);
    if (reciprocity->parsed()) return cmd_reciprocity(m, o, out);
    if (orientations->parsed()) return cmd_orientations(doc, m, out);
    if (antipode->parsed()) return cmd_antipode(m, o, out);
    if (hopf->parsed()) return cmd_hopf_verify(m, out);
    if (oracle->parsed()) return cmd_oracle(m, o, out);
  } catch (const mg::Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace mgcli
