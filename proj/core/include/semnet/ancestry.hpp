#ifndef SEMNET_ANCESTRY_HPP
#define SEMNET_ANCESTRY_HPP

#include <span>
#include <utility>
#include <vector>

#include "semnet/network.hpp"

namespace semnet {

/// A single node or an aggregate of nodes (a profile, a sentence). All
/// ancestry operations accept either uniformly: the ancestor set of an
/// aggregate is the union of its members' ancestor sets, its arc set the
/// union of their arc sets, and its distance to an ancestor the minimum
/// over members.
class Subject {
 public:
  /*implicit*/ Subject(NodeIndex node) : members_{node} {}

  /// Aggregate over a nonempty member set. Throws Error on an empty
  /// set or an out-of-range index. Duplicates collapse.
  static Subject aggregate(const SemanticNetwork& net, std::span<const NodeIndex> members);

  std::span<const NodeIndex> members() const { return members_; }
  bool single() const { return members_.size() == 1; }

  bool operator==(const Subject&) const = default;

 private:
  Subject() = default;
  std::vector<NodeIndex> members_;  // sorted, unique
};

/// Set of child -> parent arcs with the link type erased.
struct ArcSet {
  std::vector<std::pair<NodeIndex, NodeIndex>> arcs;  // sorted, unique

  bool contains(NodeIndex child, NodeIndex parent) const;
  bool operator==(const ArcSet&) const = default;
};

/// Ancestor closure: every node reachable by walking child -> parent
/// arcs from a member, the members themselves excluded (a member can
/// still appear if it is an ancestor of another member). Sorted.
std::vector<NodeIndex> ancestors(const SemanticNetwork& net, const Subject& subject);

/// All arcs on upward paths from the subject to the root: arcs whose
/// child is a member or an ancestor of one.
ArcSet ancestor_arcs(const SemanticNetwork& net, const Subject& subject);

struct NcaResult {
  std::vector<NodeIndex> nodes;  // sorted
  /// True when the arc-set intersection was empty for two distinct
  /// subjects and the result fell back to the root.
  bool fallback_root = false;
};

/// Nearest common ancestors: with E the intersection of the two arc
/// sets, the child endpoints of E that are not also parent endpoints.
/// Symmetric in its arguments. When E is empty the root stands in as
/// the one common ancestor (flagged), except that equal subjects are
/// their own unique result.
NcaResult nca(const SemanticNetwork& net, const Subject& a, const Subject& b);

/// Asymmetric nearest common ancestors from a to b: parent endpoints of
/// the arc-set intersection, minus the nca set, that have a direct child
/// lying under a (member or ancestor) but not under b. Directional.
std::vector<NodeIndex> anca(const SemanticNetwork& net, const Subject& a, const Subject& b);

/// Minimum total edge weight over upward paths linking the subject and
/// the target, in whichever direction the ancestor relation holds (the
/// result is symmetric). Throws Error when neither is an ancestor of
/// the other.
double distance(const SemanticNetwork& net, const Subject& subject, NodeIndex target,
                const LinkWeightConfig& config);

namespace detail {

/// Reusable single-source-set upward search: computes the reach set
/// (members plus ancestors) and, when weights are supplied, the minimum
/// upward distance from the member set to every reached node. Buffers
/// are epoch-stamped so repeated runs over one network avoid re-zeroing.
class UpwardSearch {
 public:
  explicit UpwardSearch(const SemanticNetwork& net);

  /// Reach plus shortest distances (Dijkstra over nonnegative weights).
  void run(std::span<const NodeIndex> members, std::span<const double> type_weights);
  /// Reach only; distances are left unset.
  void run_unweighted(std::span<const NodeIndex> members);

  bool reached(NodeIndex n) const { return stamp_[n] == epoch_; }
  double dist(NodeIndex n) const { return dist_[n]; }
  std::span<const NodeIndex> reach() const { return order_; }

 private:
  const SemanticNetwork* net_;
  std::vector<std::uint32_t> stamp_;
  std::vector<std::uint32_t> settled_;
  std::vector<double> dist_;
  std::vector<NodeIndex> order_;
  std::uint32_t epoch_ = 0;
};

/// NCA/ANCA on precomputed reach sets; shared by the public functions
/// and the measure engine so both compute the same sets.
NcaResult nca_from_reach(const SemanticNetwork& net, const UpwardSearch& a, const UpwardSearch& b,
                         bool subjects_equal);
std::vector<NodeIndex> anca_from_reach(const SemanticNetwork& net, const UpwardSearch& a,
                                       const UpwardSearch& b, const NcaResult& nca);

}  // namespace detail

}  // namespace semnet

#endif  // SEMNET_ANCESTRY_HPP
