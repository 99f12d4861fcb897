#ifndef SEMNET_MEASURES_HPP
#define SEMNET_MEASURES_HPP

#include <span>
#include <string>
#include <vector>

#include "semnet/ancestry.hpp"
#include "semnet/network.hpp"

namespace semnet {

struct MeasureResult {
  double score = 0.0;
  std::vector<NodeIndex> nca_used;   // sorted
  std::vector<NodeIndex> anca_used;  // sorted; empty for activation
  bool fallback_root = false;        // the empty-intersection root fallback fired
};

/// Builds an aggregate subject from node ids. Throws Error on an empty
/// set or an unknown id. A singleton aggregate behaves exactly like the
/// bare node under every measure.
Subject aggregate(const SemanticNetwork& net, std::span<const std::string> ids);

/// Scores a pair of subjects against one immutable network. Holds the
/// compiled per-type weights and reusable search buffers, so one engine
/// instance amortizes allocation across many queries. Engines are cheap
/// to create and must not be shared between threads; the network can be.
class MeasureEngine {
 public:
  MeasureEngine(const SemanticNetwork& net, const LinkWeightConfig& config);

  /// Activation: the mean, over the nearest common ancestors of the two
  /// subjects, of the summed distances from each subject to the
  /// ancestor. Symmetric; counts shared features only.
  MeasureResult activation(const Subject& a, const Subject& b);

  /// Proximity: activation plus the mean of the summed distances to the
  /// asymmetric nearest common ancestors from a to b (zero when that set
  /// is empty). Directional; also counts differences.
  MeasureResult proximity(const Subject& a, const Subject& b);

  const SemanticNetwork& network() const { return *net_; }

 private:
  MeasureResult measure(const Subject& a, const Subject& b, bool with_anca);

  const SemanticNetwork* net_;
  std::vector<double> type_weights_;
  detail::UpwardSearch reach_a_;
  detail::UpwardSearch reach_b_;
};

/// One-shot conveniences over a temporary engine.
MeasureResult activation(const SemanticNetwork& net, const Subject& a, const Subject& b,
                         const LinkWeightConfig& config);
MeasureResult proximity(const SemanticNetwork& net, const Subject& a, const Subject& b,
                        const LinkWeightConfig& config);

}  // namespace semnet

#endif  // SEMNET_MEASURES_HPP
