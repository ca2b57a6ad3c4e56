#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "megagreedoid/constructions.hpp"
#include "megagreedoid/corpus.hpp"
#include "megagreedoid/megagreedoid.hpp"
#include "megagreedoid/rational.hpp"

namespace mgcli {

enum class StructureKind { kExplicit, kRootedGraph, kPoset, kGreedoid, kPolymatroid };

std::string kind_name(StructureKind kind);

using LabelSet = std::vector<std::string>;

// One input structure. Label sets are held in ground order and table entries
// sorted by subset mask, so equal documents compare equal after parsing.
struct StructureDocument {
  std::string name;
  std::vector<std::string> order;
  StructureKind kind = StructureKind::kExplicit;

  // explicit: the family with ranks. greedoid, polymatroid: all of 2^I.
  std::vector<std::pair<LabelSet, mg::Rational>> table;

  // rooted_graph
  std::string root;
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::string> half_edges;

  // poset: pairs (a, b) meaning a < b.
  std::vector<std::pair<std::string, std::string>> covers;

  bool operator==(const StructureDocument&) const = default;
};

// Throws mg::MalformedInput with "line L, column C" for JSON syntax errors and
// the offending field path for schema errors.
StructureDocument parse_document(std::string_view text);

// Pretty-printed JSON accepted by parse_document.
std::string render_document(const StructureDocument& doc);

// Runs the ingestion checks of the matching constructor.
mg::Megagreedoid build(const StructureDocument& doc);

// The rooted multigraph of a rooted_graph document.
std::optional<mg::RootedMultigraph> rooted_graph_of(const StructureDocument& doc);

StructureDocument document_of(const mg::CorpusEntry& entry);

}  // namespace mgcli
