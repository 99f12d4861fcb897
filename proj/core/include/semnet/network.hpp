#ifndef SEMNET_NETWORK_HPP
#define SEMNET_NETWORK_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "semnet/errors.hpp"

namespace semnet {

/// Dense index of a node inside one SemanticNetwork. Stable for the
/// lifetime of the network (networks are immutable after load).
using NodeIndex = std::uint32_t;

enum class NodeKind : std::uint8_t { Concept, Word };

struct Node {
  std::string id;     // unique, nonempty
  std::string label;
  NodeKind kind = NodeKind::Concept;
  std::string lang;   // empty = unspecified; concepts never carry one

  bool operator==(const Node&) const = default;
};

/// A typed child -> parent link, in file terms.
struct Edge {
  std::string child;
  std::string parent;
  std::string link_type;

  bool operator==(const Edge&) const = default;
};

/// Per-link-type weights driving every distance computation. Types
/// without an explicit entry fall back to the default weight.
class LinkWeightConfig {
 public:
  LinkWeightConfig() = default;
  LinkWeightConfig(double default_weight, std::map<std::string, double> weights);

  static LinkWeightConfig load(std::istream& in);
  static LinkWeightConfig load_file(const std::string& path);

  double weight(std::string_view link_type) const;
  double default_weight() const { return default_weight_; }
  const std::map<std::string, double>& weights() const { return weights_; }

  /// Same config with every weight (and the default) multiplied by k.
  LinkWeightConfig scaled(double k) const;

 private:
  double default_weight_ = 1.0;
  std::map<std::string, double> weights_;
};

/// Weight of one edge under a config: the mapped value for its link type,
/// or the default.
double edge_weight(const Edge& edge, const LinkWeightConfig& config);

/// Resolved adjacency entry: neighbor node plus interned link type.
struct Arc {
  NodeIndex node;
  std::uint32_t type;
};

/// Immutable single-rooted DAG of concept and word nodes with typed
/// child -> parent edges. Construction validates every structural
/// invariant; afterwards all members are pure reads and the object is
/// safe to share across threads.
class SemanticNetwork {
 public:
  /// Parses the JSON network format and validates. Throws ParseError on
  /// malformed content, ValidationError on invariant violations.
  static SemanticNetwork load(std::istream& in);
  static SemanticNetwork load_file(const std::string& path);

  /// Builds directly from parts, applying the same validation as load().
  static SemanticNetwork from_parts(std::vector<Node> nodes, std::vector<Edge> edges);

  /// Writes the JSON form. load(save(n)) preserves nodes, edges and root.
  void save(std::ostream& out) const;

  std::size_t node_count() const { return nodes_.size(); }
  std::size_t edge_count() const { return edge_children_.size(); }
  std::size_t link_type_count() const { return link_types_.size(); }
  NodeIndex root() const { return root_; }

  const Node& node(NodeIndex n) const { return nodes_[n]; }
  const std::vector<Node>& nodes() const { return nodes_; }

  /// Edges in original declaration order.
  std::vector<Edge> edges() const;

  std::optional<NodeIndex> find(std::string_view id) const;
  /// Like find() but throws Error naming the id when absent.
  NodeIndex index_of(std::string_view id) const;

  /// Direct neighbors along child -> parent arcs (and the reverse).
  std::span<const Arc> parents(NodeIndex n) const;
  std::span<const Arc> children(NodeIndex n) const;

  /// All word nodes whose label matches after case folding, optionally
  /// restricted to one language. Empty result signals a miss.
  std::vector<NodeIndex> lookup_word(std::string_view label,
                                     std::optional<std::string_view> lang = std::nullopt) const;

  const std::string& link_type_name(std::uint32_t t) const { return link_types_[t]; }
  std::optional<std::uint32_t> link_type_id(std::string_view name) const;

  /// Weight per interned link type under the given config.
  std::vector<double> type_weights(const LinkWeightConfig& config) const;

 private:
  SemanticNetwork() = default;
  void build_indexes();
  void validate();

  std::vector<Node> nodes_;
  std::unordered_map<std::string, NodeIndex> index_by_id_;
  std::vector<std::string> link_types_;
  std::unordered_map<std::string, std::uint32_t> type_by_name_;

  // Edges in declaration order, as resolved indices.
  std::vector<NodeIndex> edge_children_;
  std::vector<NodeIndex> edge_parents_;
  std::vector<std::uint32_t> edge_types_;

  // CSR adjacency, both directions.
  std::vector<std::uint32_t> parent_offsets_;
  std::vector<Arc> parent_arcs_;
  std::vector<std::uint32_t> child_offsets_;
  std::vector<Arc> child_arcs_;

  std::unordered_map<std::string, std::vector<NodeIndex>> words_by_label_;
  NodeIndex root_ = 0;
};

}  // namespace semnet

#endif  // SEMNET_NETWORK_HPP
