#include "semnet/network.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "semnet/casefold.hpp"

namespace semnet {

using nlohmann::json;

LinkWeightConfig::LinkWeightConfig(double default_weight, std::map<std::string, double> weights)
    : default_weight_(default_weight), weights_(std::move(weights)) {
  if (default_weight_ < 0) {
    throw ValidationError("negative default weight: " + std::to_string(default_weight_));
  }
  for (const auto& [type, w] : weights_) {
    if (w < 0) {
      throw ValidationError("negative weight for link type \"" + type + "\"");
    }
  }
}

LinkWeightConfig LinkWeightConfig::load(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(std::string("weight config: invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) {
    throw ParseError("weight config: top-level value must be an object");
  }
  double def = 1.0;
  if (doc.contains("default")) {
    if (!doc["default"].is_number()) {
      throw ParseError("weight config: \"default\" must be a number");
    }
    def = doc["default"].get<double>();
  }
  std::map<std::string, double> weights;
  if (doc.contains("weights")) {
    if (!doc["weights"].is_object()) {
      throw ParseError("weight config: \"weights\" must be an object");
    }
    for (const auto& [type, value] : doc["weights"].items()) {
      if (!value.is_number()) {
        throw ParseError("weight config: weight of \"" + type + "\" must be a number");
      }
      weights[type] = value.get<double>();
    }
  }
  return LinkWeightConfig(def, std::move(weights));
}

LinkWeightConfig LinkWeightConfig::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open weight config file: " + path);
  return load(in);
}

double LinkWeightConfig::weight(std::string_view link_type) const {
  auto it = weights_.find(std::string(link_type));
  return it == weights_.end() ? default_weight_ : it->second;
}

LinkWeightConfig LinkWeightConfig::scaled(double k) const {
  std::map<std::string, double> scaled_weights;
  for (const auto& [type, w] : weights_) scaled_weights[type] = w * k;
  return LinkWeightConfig(default_weight_ * k, std::move(scaled_weights));
}

double edge_weight(const Edge& edge, const LinkWeightConfig& config) {
  return config.weight(edge.link_type);
}

namespace {

NodeKind parse_kind(const std::string& s, const std::string& node_id) {
  if (s == "concept") return NodeKind::Concept;
  if (s == "word") return NodeKind::Word;
  throw ParseError("node \"" + node_id + "\": kind must be \"concept\" or \"word\", got \"" + s + "\"");
}

std::string require_string(const json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key) || !obj[key].is_string()) {
    throw ParseError(where + ": missing or non-string \"" + key + "\"");
  }
  return obj[key].get<std::string>();
}

}  // namespace

SemanticNetwork SemanticNetwork::load(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(std::string("network: invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("nodes") || !doc.contains("edges") ||
      !doc["nodes"].is_array() || !doc["edges"].is_array()) {
    throw ParseError("network: expected top-level object with \"nodes\" and \"edges\" arrays");
  }

  std::vector<Node> nodes;
  nodes.reserve(doc["nodes"].size());
  std::size_t i = 0;
  for (const auto& jn : doc["nodes"]) {
    const std::string where = "node #" + std::to_string(i++);
    if (!jn.is_object()) throw ParseError(where + ": not an object");
    Node n;
    n.id = require_string(jn, "id", where);
    n.label = require_string(jn, "label", "node \"" + n.id + "\"");
    n.kind = parse_kind(require_string(jn, "kind", "node \"" + n.id + "\""), n.id);
    if (jn.contains("lang")) {
      if (!jn["lang"].is_string()) {
        throw ParseError("node \"" + n.id + "\": \"lang\" must be a string");
      }
      n.lang = fold_case(jn["lang"].get<std::string>());
    }
    nodes.push_back(std::move(n));
  }

  std::vector<Edge> edges;
  edges.reserve(doc["edges"].size());
  i = 0;
  for (const auto& je : doc["edges"]) {
    const std::string where = "edge #" + std::to_string(i++);
    if (!je.is_object()) throw ParseError(where + ": not an object");
    Edge e;
    e.child = require_string(je, "child", where);
    e.parent = require_string(je, "parent", where);
    e.link_type = require_string(je, "type", where);
    edges.push_back(std::move(e));
  }

  return from_parts(std::move(nodes), std::move(edges));
}

SemanticNetwork SemanticNetwork::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open network file: " + path);
  return load(in);
}

SemanticNetwork SemanticNetwork::from_parts(std::vector<Node> nodes, std::vector<Edge> edges) {
  SemanticNetwork net;
  net.nodes_ = std::move(nodes);

  for (NodeIndex n = 0; n < net.nodes_.size(); ++n) {
    const Node& node = net.nodes_[n];
    if (node.id.empty()) {
      throw ValidationError("node #" + std::to_string(n) + ": empty id");
    }
    if (!net.index_by_id_.emplace(node.id, n).second) {
      throw ValidationError("duplicate node id: \"" + node.id + "\"");
    }
    if (node.kind == NodeKind::Concept && !node.lang.empty()) {
      throw ValidationError("concept node \"" + node.id + "\" carries a language code");
    }
  }

  net.edge_children_.reserve(edges.size());
  net.edge_parents_.reserve(edges.size());
  net.edge_types_.reserve(edges.size());
  for (const Edge& e : edges) {
    auto child = net.find(e.child);
    if (!child) throw ValidationError("edge child is not a node: \"" + e.child + "\"");
    auto parent = net.find(e.parent);
    if (!parent) throw ValidationError("edge parent is not a node: \"" + e.parent + "\"");
    if (*child == *parent) {
      throw ValidationError("self-loop on node \"" + e.child + "\"");
    }
    auto [it, inserted] = net.type_by_name_.emplace(e.link_type,
                                                    static_cast<std::uint32_t>(net.link_types_.size()));
    if (inserted) net.link_types_.push_back(e.link_type);
    net.edge_children_.push_back(*child);
    net.edge_parents_.push_back(*parent);
    net.edge_types_.push_back(it->second);
  }

  // Duplicate (child, parent, type) triples. Same endpoints with distinct
  // types are legal; distance uses the cheapest arc.
  {
    std::vector<std::uint64_t> keys;
    keys.reserve(edges.size());
    const std::uint64_t t = net.link_types_.empty() ? 1 : net.link_types_.size();
    for (std::size_t k = 0; k < net.edge_children_.size(); ++k) {
      keys.push_back((static_cast<std::uint64_t>(net.edge_children_[k]) * net.nodes_.size() +
                      net.edge_parents_[k]) *
                         t +
                     net.edge_types_[k]);
    }
    std::vector<std::uint64_t> sorted = keys;
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end()) {
      auto k = static_cast<std::size_t>(std::find(keys.begin(), keys.end(), *dup) - keys.begin());
      throw ValidationError("duplicate edge: \"" + net.nodes_[net.edge_children_[k]].id + "\" -> \"" +
                            net.nodes_[net.edge_parents_[k]].id + "\" [" +
                            net.link_types_[net.edge_types_[k]] + "]");
    }
  }

  net.build_indexes();
  net.validate();
  return net;
}

void SemanticNetwork::build_indexes() {
  const std::size_t n = nodes_.size();
  parent_offsets_.assign(n + 1, 0);
  child_offsets_.assign(n + 1, 0);
  for (std::size_t k = 0; k < edge_children_.size(); ++k) {
    ++parent_offsets_[edge_children_[k] + 1];
    ++child_offsets_[edge_parents_[k] + 1];
  }
  for (std::size_t v = 0; v < n; ++v) {
    parent_offsets_[v + 1] += parent_offsets_[v];
    child_offsets_[v + 1] += child_offsets_[v];
  }
  parent_arcs_.resize(edge_children_.size());
  child_arcs_.resize(edge_children_.size());
  std::vector<std::uint32_t> pfill(parent_offsets_.begin(), parent_offsets_.end() - 1);
  std::vector<std::uint32_t> cfill(child_offsets_.begin(), child_offsets_.end() - 1);
  for (std::size_t k = 0; k < edge_children_.size(); ++k) {
    parent_arcs_[pfill[edge_children_[k]]++] = Arc{edge_parents_[k], edge_types_[k]};
    child_arcs_[cfill[edge_parents_[k]]++] = Arc{edge_children_[k], edge_types_[k]};
  }

  for (NodeIndex v = 0; v < n; ++v) {
    if (nodes_[v].kind == NodeKind::Word) {
      words_by_label_[fold_case(nodes_[v].label)].push_back(v);
    }
  }
}

void SemanticNetwork::validate() {
  const std::size_t n = nodes_.size();
  if (n == 0) {
    throw ValidationError("network has no nodes, hence no root");
  }

  // Acyclicity first: a cycle would also corrupt the root diagnostics.
  // Iterative DFS over parent arcs, reporting one concrete cycle.
  {
    enum : std::uint8_t { White, Grey, Black };
    std::vector<std::uint8_t> color(n, White);
    std::vector<NodeIndex> stack;
    std::vector<std::uint32_t> arc_pos(n, 0);
    for (NodeIndex start = 0; start < n; ++start) {
      if (color[start] != White) continue;
      stack.push_back(start);
      color[start] = Grey;
      while (!stack.empty()) {
        NodeIndex v = stack.back();
        auto arcs = parents(v);
        if (arc_pos[v] < arcs.size()) {
          NodeIndex next = arcs[arc_pos[v]++].node;
          if (color[next] == Grey) {
            // The stack is the current DFS path; the cycle runs from the
            // earlier occurrence of `next` back to it.
            std::string msg = "cycle:";
            for (auto it = std::find(stack.begin(), stack.end(), next); it != stack.end(); ++it) {
              msg += " \"" + nodes_[*it].id + "\" ->";
            }
            msg += " \"" + nodes_[next].id + "\"";
            throw ValidationError(msg);
          }
          if (color[next] == White) {
            color[next] = Grey;
            stack.push_back(next);
          }
        } else {
          color[v] = Black;
          stack.pop_back();
        }
      }
    }
  }

  std::vector<NodeIndex> roots;
  for (NodeIndex v = 0; v < n; ++v) {
    if (parents(v).empty()) roots.push_back(v);
  }
  if (roots.empty()) {
    throw ValidationError("network has no root: every node has a parent");
  }
  if (roots.size() > 1) {
    std::string msg = "multiple roots:";
    for (NodeIndex r : roots) msg += " \"" + nodes_[r].id + "\"";
    throw ValidationError(msg);
  }
  root_ = roots.front();

  // Everything must reach the root, i.e. be reachable from it downward.
  std::vector<char> seen(n, 0);
  std::vector<NodeIndex> queue{root_};
  seen[root_] = 1;
  std::size_t visited = 0;
  while (visited < queue.size()) {
    NodeIndex v = queue[visited++];
    for (const Arc& a : children(v)) {
      if (!seen[a.node]) {
        seen[a.node] = 1;
        queue.push_back(a.node);
      }
    }
  }
  for (NodeIndex v = 0; v < n; ++v) {
    if (!seen[v]) {
      throw ValidationError("node does not reach the root: \"" + nodes_[v].id + "\"");
    }
  }
}

std::vector<Edge> SemanticNetwork::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_children_.size());
  for (std::size_t k = 0; k < edge_children_.size(); ++k) {
    out.push_back(Edge{nodes_[edge_children_[k]].id, nodes_[edge_parents_[k]].id,
                       link_types_[edge_types_[k]]});
  }
  return out;
}

void SemanticNetwork::save(std::ostream& out) const {
  json jnodes = json::array();
  for (const Node& n : nodes_) {
    json jn{{"id", n.id},
            {"label", n.label},
            {"kind", n.kind == NodeKind::Concept ? "concept" : "word"}};
    if (!n.lang.empty()) jn["lang"] = n.lang;
    jnodes.push_back(std::move(jn));
  }
  json jedges = json::array();
  for (std::size_t k = 0; k < edge_children_.size(); ++k) {
    jedges.push_back(json{{"child", nodes_[edge_children_[k]].id},
                          {"parent", nodes_[edge_parents_[k]].id},
                          {"type", link_types_[edge_types_[k]]}});
  }
  json doc{{"nodes", std::move(jnodes)}, {"edges", std::move(jedges)}};
  out << doc.dump(2) << '\n';
}

std::optional<NodeIndex> SemanticNetwork::find(std::string_view id) const {
  auto it = index_by_id_.find(std::string(id));
  if (it == index_by_id_.end()) return std::nullopt;
  return it->second;
}

NodeIndex SemanticNetwork::index_of(std::string_view id) const {
  auto idx = find(id);
  if (!idx) throw Error("unknown node: \"" + std::string(id) + "\"");
  return *idx;
}

std::span<const Arc> SemanticNetwork::parents(NodeIndex n) const {
  return {parent_arcs_.data() + parent_offsets_[n],
          parent_arcs_.data() + parent_offsets_[n + 1]};
}

std::span<const Arc> SemanticNetwork::children(NodeIndex n) const {
  return {child_arcs_.data() + child_offsets_[n],
          child_arcs_.data() + child_offsets_[n + 1]};
}

std::vector<NodeIndex> SemanticNetwork::lookup_word(std::string_view label,
                                                    std::optional<std::string_view> lang) const {
  auto it = words_by_label_.find(fold_case(label));
  if (it == words_by_label_.end()) return {};
  if (!lang) return it->second;
  const std::string want = fold_case(*lang);
  std::vector<NodeIndex> out;
  for (NodeIndex n : it->second) {
    if (nodes_[n].lang == want) out.push_back(n);
  }
  return out;
}

std::optional<std::uint32_t> SemanticNetwork::link_type_id(std::string_view name) const {
  auto it = type_by_name_.find(std::string(name));
  if (it == type_by_name_.end()) return std::nullopt;
  return it->second;
}

std::vector<double> SemanticNetwork::type_weights(const LinkWeightConfig& config) const {
  std::vector<double> out;
  out.reserve(link_types_.size());
  for (const std::string& t : link_types_) out.push_back(config.weight(t));
  return out;
}

}  // namespace semnet
