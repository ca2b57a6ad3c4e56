#include "mgcli/document.hpp"

#include <algorithm>
#include <map>

#include "json.hpp"

#include "megagreedoid/errors.hpp"

namespace mgcli {

using nlohmann::json;

std::string kind_name(StructureKind kind) {
  switch (kind) {
    case StructureKind::kExplicit: return "explicit";
    case StructureKind::kRootedGraph: return "rooted_graph";
    case StructureKind::kPoset: return "poset";
    case StructureKind::kGreedoid: return "greedoid";
    case StructureKind::kPolymatroid: return "polymatroid";
  }
  return "unknown";
}

namespace {

[[noreturn]] void schema_error(const std::string& path, const std::string& message) {
  throw mg::MalformedInput("field '" + path + "': " + message);
}

const json& member(const json& object, const std::string& key, const std::string& path) {
  auto it = object.find(key);
  if (it == object.end()) schema_error(path + key, "missing");
  return *it;
}

std::string as_string(const json& value, const std::string& path) {
  if (!value.is_string()) schema_error(path, "expected a string");
  return value.get<std::string>();
}

const json& as_array(const json& value, const std::string& path) {
  if (!value.is_array()) schema_error(path, "expected an array");
  return value;
}

std::string indexed(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

class Reader {
 public:
  explicit Reader(const std::vector<std::string>& order) : ground_(order) {}

  std::string label(const json& value, const std::string& path, bool allow_root = false) const {
    std::string l = as_string(value, path);
    if (allow_root && l == root_) return l;
    if (!ground_.index_of(l)) schema_error(path, "label '" + l + "' is not in the order");
    return l;
  }

  LabelSet label_set(const json& value, const std::string& path) const {
    mg::Subset s;
    const json& array = as_array(value, path);
    for (std::size_t i = 0; i < array.size(); ++i) {
      const int x = *ground_.index_of(label(array[i], indexed(path, i)));
      if (s.contains(x)) schema_error(indexed(path, i), "duplicate label");
      s = s.with(x);
    }
    LabelSet out;
    for (int x : s.elements()) out.push_back(ground_.labels()[static_cast<std::size_t>(x)]);
    return out;
  }

  std::pair<std::string, std::string> label_pair(const json& value, const std::string& path, bool allow_root) const {
    const json& array = as_array(value, path);
    if (array.size() != 2) schema_error(path, "expected a pair of labels");
    return {label(array[0], indexed(path, 0), allow_root), label(array[1], indexed(path, 1), allow_root)};
  }

  std::vector<std::pair<LabelSet, mg::Rational>> table(const json& value, const std::string& path) const {
    std::map<std::uint32_t, std::pair<LabelSet, mg::Rational>> rows;
    const json& array = as_array(value, path);
    for (std::size_t i = 0; i < array.size(); ++i) {
      const std::string at = indexed(path, i);
      const json& row = as_array(array[i], at);
      if (row.size() != 2) schema_error(at, "expected [labels, rational]");
      LabelSet labels = label_set(row[0], indexed(at, 0));
      const std::string text = as_string(row[1], indexed(at, 1));
      mg::Rational rank;
      try {
        rank = mg::parse_rational(text);
      } catch (const mg::MalformedInput& e) {
        schema_error(indexed(at, 1), e.what());
      }
      const std::uint32_t mask = ground_.subset_of(labels).mask();
      if (!rows.emplace(mask, std::make_pair(std::move(labels), std::move(rank))).second) {
        schema_error(at, "subset listed twice");
      }
    }
    std::vector<std::pair<LabelSet, mg::Rational>> out;
    for (auto& [mask, row] : rows) out.push_back(std::move(row));
    return out;
  }

  void set_root(std::string root) { root_ = std::move(root); }

 private:
  mg::GroundSet ground_;
  std::string root_;
};

std::size_t line_of(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

std::size_t column_of(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  const std::size_t newline = text.rfind('\n', byte == 0 ? 0 : byte - 1);
  return newline == std::string_view::npos || byte == 0 ? byte : byte - newline - 1;
}

}  // namespace

StructureDocument parse_document(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw mg::MalformedInput("line " + std::to_string(line_of(text, e.byte)) + ", column " +
                             std::to_string(column_of(text, e.byte)) + ": invalid JSON");
  }
  if (!root.is_object()) schema_error("", "expected an object");

  StructureDocument doc;
  if (auto it = root.find("name"); it != root.end()) doc.name = as_string(*it, "name");
  const json& order = as_array(member(root, "order", ""), "order");
  if (order.size() > static_cast<std::size_t>(mg::GroundSet::kMaxSize)) {
    schema_error("order", "ground set has " + std::to_string(order.size()) + " elements; at most " +
                              std::to_string(mg::GroundSet::kMaxSize) + " are supported");
  }
  for (std::size_t i = 0; i < order.size(); ++i) doc.order.push_back(as_string(order[i], indexed("order", i)));
  try {
    mg::GroundSet check(doc.order);
  } catch (const mg::MalformedInput& e) {
    schema_error("order", e.what());
  }
  Reader reader(doc.order);

  const json& structure = member(root, "structure", "");
  if (!structure.is_object()) schema_error("structure", "expected an object");
  const std::string kind = as_string(member(structure, "kind", "structure."), "structure.kind");
  if (kind == "explicit") {
    doc.kind = StructureKind::kExplicit;
    doc.table = reader.table(member(structure, "family", "structure."), "structure.family");
  } else if (kind == "greedoid" || kind == "polymatroid") {
    doc.kind = kind == "greedoid" ? StructureKind::kGreedoid : StructureKind::kPolymatroid;
    doc.table = reader.table(member(structure, "ranks", "structure."), "structure.ranks");
    if (doc.table.size() != (std::size_t{1} << doc.order.size())) {
      schema_error("structure.ranks", "a rank is required for every subset of the ground set");
    }
  } else if (kind == "rooted_graph") {
    doc.kind = StructureKind::kRootedGraph;
    doc.root = as_string(member(structure, "root", "structure."), "structure.root");
    if (std::find(doc.order.begin(), doc.order.end(), doc.root) != doc.order.end()) {
      schema_error("structure.root", "root label must not be in the order");
    }
    reader.set_root(doc.root);
    const json& edges = as_array(member(structure, "edges", "structure."), "structure.edges");
    for (std::size_t i = 0; i < edges.size(); ++i) {
      doc.edges.push_back(reader.label_pair(edges[i], indexed("structure.edges", i), true));
    }
    if (auto it = structure.find("half_edges"); it != structure.end()) {
      const json& half = as_array(*it, "structure.half_edges");
      for (std::size_t i = 0; i < half.size(); ++i) {
        doc.half_edges.push_back(reader.label(half[i], indexed("structure.half_edges", i)));
      }
    }
  } else if (kind == "poset") {
    doc.kind = StructureKind::kPoset;
    const json& covers = as_array(member(structure, "covers", "structure."), "structure.covers");
    for (std::size_t i = 0; i < covers.size(); ++i) {
      doc.covers.push_back(reader.label_pair(covers[i], indexed("structure.covers", i), false));
    }
  } else {
    schema_error("structure.kind", "unknown kind '" + kind + "'");
  }
  return doc;
}

std::string render_document(const StructureDocument& doc) {
  // Rows of a payload go on one line each; json::dump handles escaping.
  std::string out = "{\n";
  out += "  \"name\": " + json(doc.name).dump() + ",\n";
  out += "  \"order\": " + json(doc.order).dump() + ",\n";
  out += "  \"structure\": {\n";
  out += "    \"kind\": " + json(kind_name(doc.kind)).dump();
  auto rows = [&](const std::string& key, const std::vector<json>& items) {
    out += ",\n    " + json(key).dump() + ": [";
    for (std::size_t i = 0; i < items.size(); ++i) out += (i ? ",\n      " : "\n      ") + items[i].dump();
    out += items.empty() ? "]" : "\n    ]";
  };
  auto pairs = [](const std::vector<std::pair<std::string, std::string>>& list) {
    std::vector<json> items;
    for (const auto& [a, b] : list) items.push_back(json::array({a, b}));
    return items;
  };
  auto table = [&] {
    std::vector<json> items;
    for (const auto& [labels, rank] : doc.table) items.push_back(json::array({labels, mg::to_string(rank)}));
    return items;
  };
  switch (doc.kind) {
    case StructureKind::kExplicit:
      rows("family", table());
      break;
    case StructureKind::kGreedoid:
    case StructureKind::kPolymatroid:
      rows("ranks", table());
      break;
    case StructureKind::kRootedGraph: {
      out += ",\n    \"root\": " + json(doc.root).dump();
      rows("edges", pairs(doc.edges));
      if (!doc.half_edges.empty()) out += ",\n    \"half_edges\": " + json(doc.half_edges).dump();
      break;
    }
    case StructureKind::kPoset:
      rows("covers", pairs(doc.covers));
      break;
  }
  out += "\n  }\n}\n";
  return out;
}

std::optional<mg::RootedMultigraph> rooted_graph_of(const StructureDocument& doc) {
  if (doc.kind != StructureKind::kRootedGraph) return std::nullopt;
  mg::GroundSet ground(doc.order);
  auto endpoint = [&](const std::string& label) {
    return label == doc.root ? mg::GraphEdge::kRoot : ground.require_index(label);
  };
  std::vector<mg::GraphEdge> edges;
  for (const auto& [a, b] : doc.edges) edges.push_back({endpoint(a), endpoint(b)});
  std::vector<int> half;
  for (const auto& l : doc.half_edges) half.push_back(ground.require_index(l));
  return mg::RootedMultigraph(ground, doc.root, std::move(edges), std::move(half));
}

mg::Megagreedoid build(const StructureDocument& doc) {
  mg::GroundSet ground(doc.order);
  switch (doc.kind) {
    case StructureKind::kExplicit: {
      std::map<mg::Subset, mg::Rational> ranks;
      for (const auto& [labels, rank] : doc.table) ranks.emplace(ground.subset_of(labels), rank);
      return mg::Megagreedoid::create(ground, ranks);
    }
    case StructureKind::kGreedoid:
    case StructureKind::kPolymatroid: {
      std::vector<mg::Rational> values(std::size_t{1} << ground.size());
      for (const auto& [labels, rank] : doc.table) values[ground.subset_of(labels).mask()] = rank;
      mg::RankTable table(ground, std::move(values));
      return doc.kind == StructureKind::kGreedoid ? mg::from_greedoid(table) : mg::from_polymatroid(table);
    }
    case StructureKind::kRootedGraph:
      return mg::from_rooted_graph(*rooted_graph_of(doc));
    case StructureKind::kPoset: {
      std::vector<std::pair<int, int>> relations;
      for (const auto& [a, b] : doc.covers) relations.emplace_back(ground.require_index(a), ground.require_index(b));
      return mg::from_poset(mg::Poset(ground, std::move(relations)));
    }
  }
  throw mg::MalformedInput("unknown structure kind");
}

StructureDocument document_of(const mg::CorpusEntry& entry) {
  StructureDocument doc;
  doc.name = entry.name;
  doc.order = entry.megagreedoid.ground().labels();
  const mg::GroundSet& ground = entry.megagreedoid.ground();
  auto labels_of = [&](mg::Subset s) {
    LabelSet out;
    for (int x : s.elements()) out.push_back(ground.labels()[static_cast<std::size_t>(x)]);
    return out;
  };
  if (const auto* g = std::get_if<mg::RootedMultigraph>(&entry.source)) {
    doc.kind = StructureKind::kRootedGraph;
    doc.root = g->root();
    auto label = [&](int v) { return v == mg::GraphEdge::kRoot ? g->root() : ground.labels()[static_cast<std::size_t>(v)]; };
    for (const auto& e : g->full_edges()) doc.edges.emplace_back(label(e.u), label(e.v));
    for (int h : g->half_edges()) doc.half_edges.push_back(label(h));
  } else if (const auto* p = std::get_if<mg::Poset>(&entry.source)) {
    doc.kind = StructureKind::kPoset;
    for (const auto& [a, b] : p->covers()) {
      doc.covers.emplace_back(ground.labels()[static_cast<std::size_t>(a)], ground.labels()[static_cast<std::size_t>(b)]);
    }
  } else {
    const auto& t = std::get<mg::RankTable>(entry.source);
    doc.kind = entry.kind == mg::CorpusKind::kPolymatroid ? StructureKind::kPolymatroid : StructureKind::kGreedoid;
    for (std::uint32_t mask = 0; mask < t.values().size(); ++mask) {
      doc.table.emplace_back(labels_of(mg::Subset(mask)), t(mg::Subset(mask)));
    }
  }
  return doc;
}

}  // namespace mgcli
