#include <fstream>
#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "megagreedoid/corpus.hpp"
#include "megagreedoid/errors.hpp"
#include "mgcli/commands.hpp"
#include "mgcli/document.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = mgcli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(MG_DATA_DIR) + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

const char* kBrokenAxiom =
    R"({"name":"x","order":["a","b"],"structure":{"kind":"explicit","family":[[[],"0"],[["a"],"1"]]}})";

}  // namespace

TEST_CASE("golden outputs on the example documents") {
  CHECK(run({"chi", "--basis", "F", data("rooted_graph.json")}).out == "6*F[{1,2,3};4] + 2*F[{1,3};4]\n");
  CHECK(run({"chi", "--basis", "M", data("rooted_graph.json")}).out == "8*M[{1,2,3};4] + 2*M[{1,3};4]\n");
  CHECK(run({"chi", "--method", "flag", data("rooted_graph.json")}).out == "6*F[{1,2,3};4] + 2*F[{1,3};4]\n");
  CHECK(run({"chi", "--method", "flag", "--basis", "M", data("rooted_graph.json")}).out ==
        "8*M[{1,2,3};4] + 2*M[{1,3};4]\n");
  CHECK(run({"poly", "--at", "-1", data("rooted_graph.json")}).out == "6\n");
  CHECK(run({"poly", "--at", "1", "--at", "3", "--at", "4", data("rooted_graph.json")}).out == "0\n2\n16\n");
  CHECK(run({"perms", "--descents", data("greedoid.json")}).out == "fun {1,2}\nfnu {2}\nnfu {1,2}\nnuf {1,2}\n");
  CHECK(run({"chi", data("greedoid.json")}).out == "3*F[{1,2};3] + 1*F[{2};3]\n");
  CHECK(run({"chi", data("polymatroid.json")}).out == "5*F[{1,2};3] + 1*F[{2};3]\n");
  CHECK(run({"check", data("rooted_graph.json")}).out == "valid megagreedoid: 4 elements, 11 feasible sets\n");
  CHECK(run({"generic", "--count", "4", data("rooted_graph.json")}).out == "16\n");
  CHECK(run({"orientations", data("rooted_graph.json")}).out == "orientations 6\npolynomial 6\nagree\n");
  CHECK(run({"reciprocity", "--n", "1", data("rooted_graph.json")}).out == "polynomial 6\nvertex_sum 6\nagree\n");
}

TEST_CASE("generic reports each level of the definition") {
  const Result r = run({"generic", "--fn", "2,1,1,2", data("rooted_graph.json")});
  CHECK(r.code == mgcli::kExitOk);
  CHECK(r.out == "feasible true\nstrongly_feasible false\ngeneric false\n");
  CHECK(run({"generic", "--fn", "1,2", data("rooted_graph.json")}).code == mgcli::kExitInputError);
}

TEST_CASE("shelling prints one line per facet") {
  const Result r = run({"shelling", data("rooted_graph.json")});
  CHECK(r.code == mgcli::kExitOk);
  CHECK(r.out.find("faps des={1,3} R=({f},{a,f,p})\n") != std::string::npos);
  CHECK(r.out.find("afsp des={1,3} R=({a},{a,f,s})\n") != std::string::npos);
}

TEST_CASE("verification commands pass on the examples") {
  for (const char* doc : {"rooted_graph.json", "greedoid.json", "polymatroid.json"}) {
    CAPTURE(doc);
    const Result oracle = run({"oracle", "--max-n", "3", data(doc)});
    CHECK(oracle.code == mgcli::kExitOk);
    CHECK(oracle.out.find(" 0 fail\n") != std::string::npos);
    const Result hopf = run({"hopf-verify", data(doc)});
    CHECK(hopf.code == mgcli::kExitOk);
    CHECK(hopf.out.find("failures 0") != std::string::npos);
    CHECK(run({"antipode", "--method", "takeuchi", data(doc)}).out == run({"antipode", data(doc)}).out);
  }
}

TEST_CASE("standard input") {
  const std::string text = slurp(data("rooted_graph.json"));
  CHECK(run({"chi"}, text).out == "6*F[{1,2,3};4] + 2*F[{1,3};4]\n");
  CHECK(run({"chi", "-"}, text).out == "6*F[{1,2,3};4] + 2*F[{1,3};4]\n");
}

TEST_CASE("exit codes") {
  SUBCASE("input errors") {
    const Result syntax = run({"check"}, "{\"name\": \"x\",\n  \"order\": [");
    CHECK(syntax.code == mgcli::kExitInputError);
    CHECK(syntax.err.find("line 2") != std::string::npos);
    CHECK(run({"check", "/nonexistent/file.json"}).code == mgcli::kExitInputError);
    CHECK(run({"nonsense"}).code == mgcli::kExitInputError);
    CHECK(run({}).code == mgcli::kExitInputError);
    CHECK(run({"orientations", data("greedoid.json")}).code == mgcli::kExitInputError);
    CHECK(run({"chi", "--basis", "Q", data("greedoid.json")}).code == mgcli::kExitInputError);
    CHECK(run({"chi"}, kBrokenAxiom).code == mgcli::kExitInputError);
    const Result schema =
        run({"check"}, R"({"name":"x","order":["a"],"structure":{"kind":"poset","covers":[["a","z"]]}})");
    CHECK(schema.code == mgcli::kExitInputError);
    CHECK(schema.err.find("structure.covers[0][1]") != std::string::npos);
    const Result rational =
        run({"check"}, R"({"name":"x","order":[],"structure":{"kind":"explicit","family":[[[],"1/0"]]}})");
    CHECK(rational.err == "error: field 'structure.family[0][1]': zero denominator in '1/0'\n");
  }
  SUBCASE("verification failures") {
    const Result axiom = run({"check"}, kBrokenAxiom);
    CHECK(axiom.code == mgcli::kExitVerificationFailed);
    CHECK(axiom.out.find("axiom 1") != std::string::npos);
    mgcli::StructureDocument doc = mgcli::parse_document(slurp(data("polymatroid.json")));
    doc.table.back().second = 9;
    const Result poly = run({"check"}, mgcli::render_document(doc));
    CHECK(poly.code == mgcli::kExitVerificationFailed);
    CHECK(poly.out.find("X=") != std::string::npos);
    CHECK(poly.out.find("Y=") != std::string::npos);
    const char* mislabeled =
        R"({"name":"p","order":["a","b","c","d"],"structure":{"kind":"poset","covers":[["c","a"],["c","b"],["a","d"]]}})";
    const Result shelling = run({"shelling"}, mislabeled);
    CHECK(shelling.code == mgcli::kExitVerificationFailed);
    CHECK(shelling.err.find("not a shelling") != std::string::npos);
    const Result oracle = run({"oracle"}, mislabeled);
    CHECK(oracle.code == mgcli::kExitVerificationFailed);
  }
}

TEST_CASE("documents") {
  SUBCASE("the rooted graph document builds the example") {
    const mgcli::StructureDocument doc = mgcli::parse_document(slurp(data("rooted_graph.json")));
    CHECK(doc.kind == mgcli::StructureKind::kRootedGraph);
    CHECK(mgcli::build(doc) == mgtest::example_graph_megagreedoid());
    CHECK(mgcli::build(mgcli::parse_document(slurp(data("greedoid.json")))) == mgtest::example_greedoid());
    CHECK(mgcli::build(mgcli::parse_document(slurp(data("polymatroid.json")))) == mgtest::example_polymatroid());
  }
  SUBCASE("the name is optional") {
    CHECK(mgcli::parse_document(R"({"order":[],"structure":{"kind":"explicit","family":[[[],"0"]]}})").name.empty());
  }
  SUBCASE("empty ground set") {
    const auto doc = mgcli::parse_document(
        R"({"name":"empty","order":[],"structure":{"kind":"explicit","family":[[[],"0"]]}})");
    CHECK(mgcli::build(doc) == mg::Megagreedoid());
  }
  SUBCASE("label sets are normalized to ground order") {
    const auto a = mgcli::parse_document(
        R"({"name":"x","order":["b","a"],"structure":{"kind":"explicit","family":[[["a","b"],"2"],[[],"0"],[["b"],"1"]]}})");
    const auto b = mgcli::parse_document(
        R"({"name":"x","order":["b","a"],"structure":{"kind":"explicit","family":[[[],"0"],[["b"],"1"],[["b","a"],"2"]]}})");
    CHECK(a == b);
  }
  SUBCASE("rejections") {
    for (const char* bad : {
             R"({"name":"x","structure":{"kind":"explicit","family":[[[],"0"]]}})",
             R"({"name":"x","order":["a","a"],"structure":{"kind":"explicit","family":[[[],"0"]]}})",
             R"({"name":"x","order":["a"],"structure":{"kind":"explicit","family":[[[],0]]}})",
             R"({"name":"x","order":["a"],"structure":{"kind":"explicit","family":[[[],"0.5"]]}})",
             R"({"name":"x","order":["a"],"structure":{"kind":"explicit","family":[[[],"0"],[[],"1"]]}})",
             R"({"name":"x","order":["a"],"structure":{"kind":"greedoid","ranks":[[[],"0"]]}})",
             R"({"name":"x","order":["a"],"structure":{"kind":"rooted_graph","root":"a","edges":[]}})",
             R"({"name":"x","order":["a"],"structure":{"kind":"unknown"}})",
         }) {
      CAPTURE(bad);
      CHECK_THROWS_AS(mgcli::parse_document(bad), mg::MalformedInput);
    }
  }
}

TEST_CASE("corpus documents round-trip") {
  for (const auto& entry : mg::generate_corpus(3, 40, 5)) {
    CAPTURE(entry.name);
    const mgcli::StructureDocument doc = mgcli::document_of(entry);
    const mgcli::StructureDocument back = mgcli::parse_document(mgcli::render_document(doc));
    CHECK(back == doc);
    CHECK(mgcli::build(back) == entry.megagreedoid);
  }
}

TEST_CASE("output is deterministic") {
  const Result a = run({"corpus", "--seed", "9", "--size", "8"});
  const Result b = run({"corpus", "--seed", "9", "--size", "8"});
  CHECK(a.code == mgcli::kExitOk);
  CHECK(a.out == b.out);
  CHECK_FALSE(a.out == run({"corpus", "--seed", "10", "--size", "8"}).out);
  const Result first = run({"antipode", data("rooted_graph.json")});
  CHECK(first.out == run({"antipode", data("rooted_graph.json")}).out);
}

TEST_CASE("corpus documents feed every command") {
  const Result corpus = run({"corpus", "--seed", "2", "--size", "6", "--max-elements", "3"});
  REQUIRE(corpus.code == mgcli::kExitOk);
  for (const auto& entry : mg::generate_corpus(2, 6, 3)) {
    std::string text = mgcli::render_document(mgcli::document_of(entry));
    CHECK(corpus.out.find(text.substr(0, text.size() - 1)) != std::string::npos);
    CHECK(run({"check"}, text).code == mgcli::kExitOk);
    CHECK(run({"hopf-verify"}, text).code == mgcli::kExitOk);
    CHECK(run({"antipode"}, text).code == mgcli::kExitOk);
  }
}
