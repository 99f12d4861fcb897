#include "semnet/measures.hpp"

namespace semnet {

Subject aggregate(const SemanticNetwork& net, std::span<const std::string> ids) {
  if (ids.empty()) throw Error("aggregate over an empty node set");
  std::vector<NodeIndex> members;
  members.reserve(ids.size());
  for (const std::string& id : ids) members.push_back(net.index_of(id));
  return Subject::aggregate(net, members);
}

MeasureEngine::MeasureEngine(const SemanticNetwork& net, const LinkWeightConfig& config)
    : net_(&net), type_weights_(net.type_weights(config)), reach_a_(net), reach_b_(net) {}

MeasureResult MeasureEngine::measure(const Subject& a, const Subject& b, bool with_anca) {
  reach_a_.run(a.members(), type_weights_);
  reach_b_.run(b.members(), type_weights_);

  MeasureResult result;
  NcaResult common = detail::nca_from_reach(*net_, reach_a_, reach_b_, a == b);
  result.fallback_root = common.fallback_root;

  // Every nca/anca node sits in both reach sets, so both distances exist.
  double sum = 0.0;
  for (NodeIndex n : common.nodes) {
    sum += reach_a_.dist(n) + reach_b_.dist(n);
  }
  result.score = sum / static_cast<double>(common.nodes.size());

  if (with_anca) {
    result.anca_used = detail::anca_from_reach(*net_, reach_a_, reach_b_, common);
    if (!result.anca_used.empty()) {
      double asym = 0.0;
      for (NodeIndex n : result.anca_used) {
        asym += reach_a_.dist(n) + reach_b_.dist(n);
      }
      result.score += asym / static_cast<double>(result.anca_used.size());
    }
  }
  result.nca_used = std::move(common.nodes);
  return result;
}

MeasureResult MeasureEngine::activation(const Subject& a, const Subject& b) {
  return measure(a, b, /*with_anca=*/false);
}

MeasureResult MeasureEngine::proximity(const Subject& a, const Subject& b) {
  return measure(a, b, /*with_anca=*/true);
}

MeasureResult activation(const SemanticNetwork& net, const Subject& a, const Subject& b,
                         const LinkWeightConfig& config) {
  MeasureEngine engine(net, config);
  return engine.activation(a, b);
}

MeasureResult proximity(const SemanticNetwork& net, const Subject& a, const Subject& b,
                        const LinkWeightConfig& config) {
  MeasureEngine engine(net, config);
  return engine.proximity(a, b);
}

}  // namespace semnet
