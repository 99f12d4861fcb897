#ifndef SEMNET_APPS_HPP
#define SEMNET_APPS_HPP

#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "semnet/measures.hpp"
#include "semnet/network.hpp"
#include "semnet/textproc.hpp"

namespace semnet {

/// Named word-set definition of a domain of interest.
struct Profile {
  std::string id;
  std::vector<std::string> definition;  // nonempty
};

/// JSON array of {"id": ..., "definition": [words...]}.
std::vector<Profile> load_profiles(std::istream& in);
std::vector<Profile> load_profiles_file(const std::string& path);

/// Sentence filtering outcome. A sentence whose content words resolve to
/// no node at all is unresolvable: its score is +infinity and it ranks
/// after every scored sentence.
struct ScoredSentence {
  std::size_t id = 0;
  double score = 0.0;  // +inf marks UNRESOLVABLE
  bool kept = false;

  bool resolvable() const;
};

/// Scores every sentence by activation against the profile, ranks
/// ascending (closest first, ties by sentence id), and keeps the first
/// ceil(keep_fraction * N) resolvable sentences, further bounded by
/// max_score when given. Returns the ranking order.
std::vector<ScoredSentence> filter_sentences(const SemanticNetwork& net,
                                             const LinkWeightConfig& config,
                                             const Profile& profile,
                                             const std::vector<Sentence>& corpus,
                                             double keep_fraction, const StopList& stop,
                                             const NormalizationMap& norm,
                                             std::optional<double> max_score = std::nullopt);

struct EvalRow {
  double keep_fraction = 0.0;
  double precision = 1.0;  // TP / kept; 1.0 when nothing was kept
  double recall = 1.0;     // TP / relevant; 1.0 when nothing is relevant
  std::size_t true_positives = 0;
  std::size_t kept_count = 0;
  std::size_t relevant_count = 0;
  bool vacuous_precision = false;  // kept_count == 0
  bool vacuous_recall = false;     // relevant_count == 0
};

struct EvalReport {
  std::vector<EvalRow> rows;  // ascending keep fraction
};

inline const std::vector<double> kDefaultEvalGrid{0.1, 0.2, 0.3, 0.4, 0.5};

/// Precision/recall against a reference id set, re-deriving the kept set
/// from the score ranking at every grid fraction. Throws Error when a
/// reference id does not occur in the scored list.
EvalReport evaluate(const std::vector<ScoredSentence>& scored,
                    const std::set<std::size_t>& reference,
                    const std::vector<double>& grid = kDefaultEvalGrid);

struct ProfileScore {
  std::string id;
  double score = 0.0;  // +inf when the profile resolves to nothing
};

/// Ranks profiles by proximity of the document to each profile,
/// ascending (best score is the lowest), ties by profile id.
std::vector<ProfileScore> classify(const SemanticNetwork& net, const LinkWeightConfig& config,
                                   std::string_view document,
                                   const std::vector<Profile>& profiles, const StopList& stop,
                                   const NormalizationMap& norm);

struct TermScore {
  std::string word;
  double score = 0.0;
};

/// Scores each distinct resolvable content word by proximity to the
/// aggregate of all other resolved words and returns the k closest,
/// ascending, ties alphabetical. Needs at least two resolvable words.
std::vector<TermScore> spot_terms(const SemanticNetwork& net, const LinkWeightConfig& config,
                                  std::string_view document, std::size_t k, const StopList& stop,
                                  const NormalizationMap& norm);

enum class Mechanism {
  Alias,
  Synonyms,
  Hypernyms,
  Hyponyms,
  Inflected,
  Derived,
  Geographic,
  Translation,
};

std::optional<Mechanism> parse_mechanism(std::string_view name);
std::string_view mechanism_name(Mechanism m);

struct ExpansionRequest {
  std::string word;
  std::vector<Mechanism> mechanisms;  // nonempty
  std::optional<std::string> lang;    // target language for Translation
};

/// (label, lang) pairs per mechanism; lang is empty for language-less
/// nodes. Mechanisms whose link types are absent from the network come
/// back empty, never as an error.
using ExpansionSet = std::set<std::pair<std::string, std::string>>;
std::map<Mechanism, ExpansionSet> expand(const SemanticNetwork& net,
                                         const ExpansionRequest& request);

/// Shortest decimal form that round-trips; infinity prints as "inf".
std::string format_score(double value);

/// Tab-separated scored-sentence rows: id, score ("inf" when
/// unresolvable), kept flag as 0/1.
void write_scored(std::ostream& out, std::span<const ScoredSentence> scored);
std::vector<ScoredSentence> read_scored(std::istream& in);

/// Tab-separated table with a `keep precision recall tp kept relevant`
/// header row.
void write_eval_report(std::ostream& out, const EvalReport& report);

/// One relevant sentence id per line.
std::set<std::size_t> read_reference(std::istream& in);

}  // namespace semnet

#endif  // SEMNET_APPS_HPP
