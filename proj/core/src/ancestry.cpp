#include "semnet/ancestry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

namespace semnet {

Subject Subject::aggregate(const SemanticNetwork& net, std::span<const NodeIndex> members) {
  if (members.empty()) throw Error("aggregate over an empty node set");
  Subject s;
  s.members_.assign(members.begin(), members.end());
  std::sort(s.members_.begin(), s.members_.end());
  s.members_.erase(std::unique(s.members_.begin(), s.members_.end()), s.members_.end());
  for (NodeIndex m : s.members_) {
    if (m >= net.node_count()) {
      throw Error("aggregate member out of range: " + std::to_string(m));
    }
  }
  return s;
}

bool ArcSet::contains(NodeIndex child, NodeIndex parent) const {
  return std::binary_search(arcs.begin(), arcs.end(), std::make_pair(child, parent));
}

namespace detail {

UpwardSearch::UpwardSearch(const SemanticNetwork& net)
    : net_(&net),
      stamp_(net.node_count(), 0),
      settled_(net.node_count(), 0),
      dist_(net.node_count(), 0.0) {}

void UpwardSearch::run_unweighted(std::span<const NodeIndex> members) {
  ++epoch_;
  order_.clear();
  for (NodeIndex m : members) {
    if (stamp_[m] != epoch_) {
      stamp_[m] = epoch_;
      order_.push_back(m);
    }
  }
  // order_ doubles as the BFS queue.
  for (std::size_t head = 0; head < order_.size(); ++head) {
    for (const Arc& a : net_->parents(order_[head])) {
      if (stamp_[a.node] != epoch_) {
        stamp_[a.node] = epoch_;
        order_.push_back(a.node);
      }
    }
  }
}

void UpwardSearch::run(std::span<const NodeIndex> members, std::span<const double> type_weights) {
  ++epoch_;
  order_.clear();
  using Entry = std::pair<double, NodeIndex>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> frontier;
  // stamp == epoch means a tentative distance exists; settled_ == epoch
  // means the distance is final and the node was appended to order_.
  for (NodeIndex m : members) {
    if (stamp_[m] != epoch_) {
      stamp_[m] = epoch_;
      dist_[m] = 0.0;
      frontier.emplace(0.0, m);
    }
  }
  while (!frontier.empty()) {
    auto [d, v] = frontier.top();
    frontier.pop();
    if (settled_[v] == epoch_ || d > dist_[v]) continue;  // stale entry
    settled_[v] = epoch_;
    order_.push_back(v);
    for (const Arc& a : net_->parents(v)) {
      const double nd = d + type_weights[a.type];
      if (stamp_[a.node] != epoch_ || nd < dist_[a.node]) {
        stamp_[a.node] = epoch_;
        dist_[a.node] = nd;
        frontier.emplace(nd, a.node);
      }
    }
  }
}

NcaResult nca_from_reach(const SemanticNetwork& net, const UpwardSearch& a, const UpwardSearch& b,
                         bool subjects_equal) {
  // E = c(A) ∩ c(B) consists of every arc whose child lies in both reach
  // sets; its child endpoints are that intersection minus the root, its
  // parent endpoints the parents of intersection members.
  const auto& smaller = a.reach().size() <= b.reach().size() ? a : b;
  const auto& other = (&smaller == &a) ? b : a;

  std::vector<NodeIndex> common;
  for (NodeIndex v : smaller.reach()) {
    if (other.reached(v)) common.push_back(v);
  }

  NcaResult result;
  const NodeIndex root = net.root();
  if (common.size() <= 1) {
    // Only the root is shared: the arc-set intersection is empty. The
    // root is still a common ancestor (or the subject itself), so it
    // stands in; flag the fallback unless the subjects coincide.
    result.nodes.push_back(root);
    result.fallback_root = !subjects_equal;
    return result;
  }

  std::vector<char> is_parent_endpoint(net.node_count(), 0);
  for (NodeIndex v : common) {
    for (const Arc& arc : net.parents(v)) {
      is_parent_endpoint[arc.node] = 1;
    }
  }
  for (NodeIndex v : common) {
    if (v != root && !is_parent_endpoint[v]) result.nodes.push_back(v);
  }
  std::sort(result.nodes.begin(), result.nodes.end());
  return result;
}

std::vector<NodeIndex> anca_from_reach(const SemanticNetwork& net, const UpwardSearch& a,
                                       const UpwardSearch& b, const NcaResult& nca) {
  if (nca.fallback_root) return {};  // empty intersection has no parent endpoints

  const auto& smaller = a.reach().size() <= b.reach().size() ? a : b;
  const auto& other = (&smaller == &a) ? b : a;

  // Parent endpoints of E, minus the nca set.
  std::vector<NodeIndex> parent_endpoints;
  {
    std::vector<char> seen(net.node_count(), 0);
    for (NodeIndex v : smaller.reach()) {
      if (!other.reached(v)) continue;
      for (const Arc& arc : net.parents(v)) {
        if (!seen[arc.node]) {
          seen[arc.node] = 1;
          parent_endpoints.push_back(arc.node);
        }
      }
    }
  }
  std::sort(parent_endpoints.begin(), parent_endpoints.end());
  std::vector<NodeIndex> candidates;
  std::set_difference(parent_endpoints.begin(), parent_endpoints.end(), nca.nodes.begin(),
                      nca.nodes.end(), std::back_inserter(candidates));

  std::vector<NodeIndex> result;  // stays sorted: candidates are sorted
  for (NodeIndex n : candidates) {
    for (const Arc& arc : net.children(n)) {
      if (a.reached(arc.node) && !b.reached(arc.node)) {
        result.push_back(n);
        break;
      }
    }
  }
  return result;
}

}  // namespace detail

std::vector<NodeIndex> ancestors(const SemanticNetwork& net, const Subject& subject) {
  // h(M) = ∪ h(m_i) with each h(m) excluding m itself: a member shows up
  // only when it is a strict ancestor of another member.
  std::vector<char> in_closure(net.node_count(), 0);
  std::vector<NodeIndex> queue;
  for (NodeIndex m : subject.members()) {
    for (const Arc& a : net.parents(m)) {
      if (!in_closure[a.node]) {
        in_closure[a.node] = 1;
        queue.push_back(a.node);
      }
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const Arc& a : net.parents(queue[head])) {
      if (!in_closure[a.node]) {
        in_closure[a.node] = 1;
        queue.push_back(a.node);
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

ArcSet ancestor_arcs(const SemanticNetwork& net, const Subject& subject) {
  detail::UpwardSearch search(net);
  search.run_unweighted(subject.members());
  ArcSet out;
  for (NodeIndex v : search.reach()) {
    for (const Arc& a : net.parents(v)) {
      out.arcs.emplace_back(v, a.node);
    }
  }
  std::sort(out.arcs.begin(), out.arcs.end());
  out.arcs.erase(std::unique(out.arcs.begin(), out.arcs.end()), out.arcs.end());
  return out;
}

NcaResult nca(const SemanticNetwork& net, const Subject& a, const Subject& b) {
  detail::UpwardSearch ra(net);
  detail::UpwardSearch rb(net);
  ra.run_unweighted(a.members());
  rb.run_unweighted(b.members());
  return detail::nca_from_reach(net, ra, rb, a == b);
}

std::vector<NodeIndex> anca(const SemanticNetwork& net, const Subject& a, const Subject& b) {
  detail::UpwardSearch ra(net);
  detail::UpwardSearch rb(net);
  ra.run_unweighted(a.members());
  rb.run_unweighted(b.members());
  NcaResult common = detail::nca_from_reach(net, ra, rb, a == b);
  return detail::anca_from_reach(net, ra, rb, common);
}

double distance(const SemanticNetwork& net, const Subject& subject, NodeIndex target,
                const LinkWeightConfig& config) {
  if (target >= net.node_count()) {
    throw Error("unknown node index: " + std::to_string(target));
  }
  const std::vector<double> weights = net.type_weights(config);

  double best = std::numeric_limits<double>::infinity();
  detail::UpwardSearch search(net);

  // Target above the subject.
  search.run(subject.members(), weights);
  if (search.reached(target)) best = std::min(best, search.dist(target));

  // Subject member above the target.
  const NodeIndex single[]{target};
  search.run(single, weights);
  for (NodeIndex m : subject.members()) {
    if (search.reached(m)) best = std::min(best, search.dist(m));
  }

  if (!std::isfinite(best)) {
    throw Error("nodes are not related: \"" + net.node(target).id +
                "\" is neither ancestor nor descendant of the subject");
  }
  return best;
}

}  // namespace semnet
