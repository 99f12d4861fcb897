#ifndef SEMNET_TEXTPROC_HPP
#define SEMNET_TEXTPROC_HPP

#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "semnet/network.hpp"

namespace semnet {

struct Sentence {
  std::size_t id = 0;              // dense, ordered by document position
  std::string raw;                 // original text, surrounding whitespace trimmed
  std::vector<std::string> tokens; // case-folded, punctuation-split
};

/// Splits text into case-folded word tokens on whitespace and punctuation.
std::vector<std::string> tokenize(std::string_view text);

/// Splits text into sentences on terminal punctuation (. ! ?) followed by
/// whitespace, or on newlines in line-per-sentence mode. Whitespace-only
/// stretches produce no sentence.
std::vector<Sentence> segment(std::string_view text, bool line_sentences = false);

/// Case-insensitive stopword set ("empty words").
class StopList {
 public:
  StopList() = default;
  explicit StopList(const std::vector<std::string>& words);

  /// One word per line.
  static StopList load(std::istream& in);
  static StopList load_file(const std::string& path);

  bool contains(std::string_view word) const;
  std::size_t size() const { return words_.size(); }

 private:
  std::unordered_set<std::string> words_;  // folded
};

/// Surface-token replacement applied before resolution, e.g. mapping
/// entity names to their type word. Loading rejects maps whose range
/// overlaps their domain, keeping application idempotent.
class NormalizationMap {
 public:
  NormalizationMap() = default;
  explicit NormalizationMap(const std::vector<std::pair<std::string, std::string>>& pairs);

  /// Two-column tab-separated lines: surface TAB replacement.
  static NormalizationMap load(std::istream& in);
  static NormalizationMap load_file(const std::string& path);

  bool empty() const { return map_.empty(); }
  std::optional<std::string> replacement(std::string_view token) const;

 private:
  std::unordered_map<std::string, std::string> map_;  // folded -> folded
};

/// Token set minus the stoplist; duplicates collapse.
std::set<std::string> content_words(const std::vector<std::string>& tokens, const StopList& stop);
std::set<std::string> content_words(const Sentence& sentence, const StopList& stop);

/// Applies the map tokenwise, preserving order and length.
std::vector<std::string> normalize(const std::vector<std::string>& tokens,
                                   const NormalizationMap& map);

struct Resolution {
  std::vector<NodeIndex> nodes;        // union over all matching senses, sorted
  std::vector<std::string> unresolved; // words with no matching node, sorted
};

/// Maps words onto word nodes via the label index. Every sense of a word
/// is kept; misses are reported, never dropped silently.
Resolution resolve(const std::set<std::string>& words, const SemanticNetwork& net,
                   std::optional<std::string_view> lang = std::nullopt);

}  // namespace semnet

#endif  // SEMNET_TEXTPROC_HPP
