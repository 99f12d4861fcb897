#include "semnet/apps.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "semnet/casefold.hpp"

namespace semnet {

using nlohmann::json;

namespace {

constexpr double kUnresolvable = std::numeric_limits<double>::infinity();

// ceil(fraction * n) computed away from representation noise: 0.1 * 100
// must stay 10, not tip over to 11.
std::size_t keep_count(double fraction, std::size_t n) {
  if (n == 0) return 0;
  const double raw = fraction * static_cast<double>(n);
  const double up = std::ceil(raw - 1e-9);
  auto k = up < 1.0 ? std::size_t{1} : static_cast<std::size_t>(up);
  return std::min(k, n);
}

std::vector<NodeIndex> resolve_pipeline(const SemanticNetwork& net,
                                        const std::vector<std::string>& tokens,
                                        const StopList& stop, const NormalizationMap& norm) {
  const std::vector<std::string> normalized = normalize(tokens, norm);
  const std::set<std::string> words = content_words(normalized, stop);
  return resolve(words, net).nodes;
}

// Profiles are curated word sets: folded for lookup but neither
// stop-filtered nor normalized.
std::vector<NodeIndex> resolve_profile(const SemanticNetwork& net, const Profile& profile) {
  std::set<std::string> words;
  for (const std::string& w : profile.definition) words.insert(fold_case(w));
  return resolve(words, net).nodes;
}

void rank_scored(std::vector<ScoredSentence>& scored) {
  std::sort(scored.begin(), scored.end(), [](const ScoredSentence& a, const ScoredSentence& b) {
    if (a.score != b.score) return a.score < b.score;
    return a.id < b.id;
  });
}

}  // namespace

bool ScoredSentence::resolvable() const { return std::isfinite(score); }

std::vector<Profile> load_profiles(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(std::string("profiles: invalid JSON: ") + e.what());
  }
  if (!doc.is_array()) throw ParseError("profiles: expected a top-level array");
  std::vector<Profile> profiles;
  std::set<std::string> ids;
  for (const auto& jp : doc) {
    if (!jp.is_object() || !jp.contains("id") || !jp["id"].is_string() ||
        !jp.contains("definition") || !jp["definition"].is_array()) {
      throw ParseError("profiles: each entry needs a string \"id\" and a \"definition\" array");
    }
    Profile p;
    p.id = jp["id"].get<std::string>();
    for (const auto& jw : jp["definition"]) {
      if (!jw.is_string()) {
        throw ParseError("profile \"" + p.id + "\": definition words must be strings");
      }
      p.definition.push_back(jw.get<std::string>());
    }
    if (p.definition.empty()) {
      throw ValidationError("profile \"" + p.id + "\": empty definition");
    }
    if (!ids.insert(p.id).second) {
      throw ValidationError("duplicate profile id: \"" + p.id + "\"");
    }
    profiles.push_back(std::move(p));
  }
  return profiles;
}

std::vector<Profile> load_profiles_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open profiles file: " + path);
  return load_profiles(in);
}

std::vector<ScoredSentence> filter_sentences(const SemanticNetwork& net,
                                             const LinkWeightConfig& config,
                                             const Profile& profile,
                                             const std::vector<Sentence>& corpus,
                                             double keep_fraction, const StopList& stop,
                                             const NormalizationMap& norm,
                                             std::optional<double> max_score) {
  if (!(keep_fraction > 0.0 && keep_fraction <= 1.0)) {
    throw Error("keep fraction must lie in (0, 1]");
  }
  if (corpus.empty()) throw Error("empty corpus: nothing to filter");

  const std::vector<NodeIndex> profile_nodes = resolve_profile(net, profile);
  if (profile_nodes.empty()) {
    throw Error("profile \"" + profile.id + "\" resolves to no node in the network");
  }
  const Subject profile_subject = Subject::aggregate(net, profile_nodes);

  MeasureEngine engine(net, config);
  std::vector<ScoredSentence> scored;
  scored.reserve(corpus.size());
  std::size_t resolvable = 0;
  for (const Sentence& s : corpus) {
    const std::vector<NodeIndex> nodes = resolve_pipeline(net, s.tokens, stop, norm);
    ScoredSentence row{s.id, kUnresolvable, false};
    if (!nodes.empty()) {
      row.score = engine.activation(profile_subject, Subject::aggregate(net, nodes)).score;
      ++resolvable;
    }
    scored.push_back(row);
  }

  rank_scored(scored);
  const std::size_t quota = std::min(keep_count(keep_fraction, scored.size()), resolvable);
  for (std::size_t i = 0; i < quota; ++i) {
    if (max_score && scored[i].score > *max_score) break;  // ranking is ascending
    scored[i].kept = true;
  }
  return scored;
}

EvalReport evaluate(const std::vector<ScoredSentence>& scored,
                    const std::set<std::size_t>& reference, const std::vector<double>& grid) {
  std::set<std::size_t> ids;
  for (const ScoredSentence& s : scored) ids.insert(s.id);
  for (std::size_t ref : reference) {
    if (!ids.count(ref)) {
      throw Error("reference id out of range: " + std::to_string(ref));
    }
  }

  std::vector<ScoredSentence> ranking = scored;
  rank_scored(ranking);
  const auto resolvable = static_cast<std::size_t>(
      std::count_if(ranking.begin(), ranking.end(),
                    [](const ScoredSentence& s) { return s.resolvable(); }));

  std::vector<double> fractions = grid;
  std::sort(fractions.begin(), fractions.end());
  fractions.erase(std::unique(fractions.begin(), fractions.end()), fractions.end());

  EvalReport report;
  for (double f : fractions) {
    if (!(f > 0.0 && f <= 1.0)) throw Error("grid fraction must lie in (0, 1]");
    EvalRow row;
    row.keep_fraction = f;
    row.kept_count = std::min(keep_count(f, ranking.size()), resolvable);
    for (std::size_t i = 0; i < row.kept_count; ++i) {
      if (reference.count(ranking[i].id)) ++row.true_positives;
    }
    row.relevant_count = reference.size();
    row.vacuous_precision = row.kept_count == 0;
    row.vacuous_recall = row.relevant_count == 0;
    row.precision = row.vacuous_precision
                        ? 1.0
                        : static_cast<double>(row.true_positives) /
                              static_cast<double>(row.kept_count);
    row.recall = row.vacuous_recall ? 1.0
                                    : static_cast<double>(row.true_positives) /
                                          static_cast<double>(row.relevant_count);
    report.rows.push_back(row);
  }
  return report;
}

std::vector<ProfileScore> classify(const SemanticNetwork& net, const LinkWeightConfig& config,
                                   std::string_view document,
                                   const std::vector<Profile>& profiles, const StopList& stop,
                                   const NormalizationMap& norm) {
  if (profiles.empty()) throw Error("no profiles to classify against");
  const std::vector<NodeIndex> doc_nodes =
      resolve_pipeline(net, tokenize(document), stop, norm);
  if (doc_nodes.empty()) {
    throw Error("document resolves to no node in the network");
  }
  const Subject doc_subject = Subject::aggregate(net, doc_nodes);

  MeasureEngine engine(net, config);
  std::vector<ProfileScore> result;
  result.reserve(profiles.size());
  for (const Profile& p : profiles) {
    const std::vector<NodeIndex> nodes = resolve_profile(net, p);
    double score = kUnresolvable;
    if (!nodes.empty()) {
      score = engine.proximity(doc_subject, Subject::aggregate(net, nodes)).score;
    }
    result.push_back(ProfileScore{p.id, score});
  }
  std::sort(result.begin(), result.end(), [](const ProfileScore& a, const ProfileScore& b) {
    if (a.score != b.score) return a.score < b.score;
    return a.id < b.id;
  });
  return result;
}

std::vector<TermScore> spot_terms(const SemanticNetwork& net, const LinkWeightConfig& config,
                                  std::string_view document, std::size_t k, const StopList& stop,
                                  const NormalizationMap& norm) {
  if (k == 0) throw Error("term count must be positive");
  const std::vector<std::string> tokens = normalize(tokenize(document), norm);
  const std::set<std::string> words = content_words(tokens, stop);

  // Per-word sense sets; words sharing no node with the network drop out.
  std::vector<std::pair<std::string, std::vector<NodeIndex>>> resolved;
  for (const std::string& w : words) {
    std::vector<NodeIndex> senses = net.lookup_word(w);
    if (!senses.empty()) resolved.emplace_back(w, std::move(senses));
  }
  if (resolved.size() < 2) {
    throw Error("term spotting needs at least two resolvable words, got " +
                std::to_string(resolved.size()));
  }

  MeasureEngine engine(net, config);
  std::vector<TermScore> result;
  result.reserve(resolved.size());
  for (std::size_t i = 0; i < resolved.size(); ++i) {
    std::vector<NodeIndex> others;
    for (std::size_t j = 0; j < resolved.size(); ++j) {
      if (j != i) others.insert(others.end(), resolved[j].second.begin(), resolved[j].second.end());
    }
    const double score = engine
                             .proximity(Subject::aggregate(net, resolved[i].second),
                                        Subject::aggregate(net, others))
                             .score;
    result.push_back(TermScore{resolved[i].first, score});
  }
  std::sort(result.begin(), result.end(), [](const TermScore& a, const TermScore& b) {
    if (a.score != b.score) return a.score < b.score;
    return a.word < b.word;
  });
  if (result.size() > k) result.resize(k);
  return result;
}

std::string format_score(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

void write_scored(std::ostream& out, std::span<const ScoredSentence> scored) {
  for (const ScoredSentence& s : scored) {
    out << s.id << '\t' << format_score(s.score) << '\t' << (s.kept ? 1 : 0) << '\n';
  }
}

std::vector<ScoredSentence> read_scored(std::istream& in) {
  std::vector<ScoredSentence> scored;
  std::set<std::size_t> seen;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string id_s, score_s, kept_s;
    if (!std::getline(fields, id_s, '\t') || !std::getline(fields, score_s, '\t') ||
        !std::getline(fields, kept_s, '\t')) {
      throw ParseError("scored file line " + std::to_string(lineno) +
                       ": expected id TAB score TAB kept");
    }
    ScoredSentence s;
    try {
      s.id = std::stoull(id_s);
    } catch (const std::exception&) {
      throw ParseError("scored file line " + std::to_string(lineno) + ": bad sentence id \"" +
                       id_s + "\"");
    }
    if (score_s == "inf") {
      s.score = kUnresolvable;
    } else {
      double parsed = 0.0;
      auto [ptr, ec] = std::from_chars(score_s.data(), score_s.data() + score_s.size(), parsed);
      if (ec != std::errc{} || ptr != score_s.data() + score_s.size()) {
        throw ParseError("scored file line " + std::to_string(lineno) + ": bad score \"" +
                         score_s + "\"");
      }
      s.score = parsed;
    }
    if (kept_s != "0" && kept_s != "1") {
      throw ParseError("scored file line " + std::to_string(lineno) + ": kept flag must be 0 or 1");
    }
    s.kept = kept_s == "1";
    if (!seen.insert(s.id).second) {
      throw ParseError("scored file line " + std::to_string(lineno) + ": duplicate sentence id " +
                       id_s);
    }
    scored.push_back(s);
  }
  return scored;
}

void write_eval_report(std::ostream& out, const EvalReport& report) {
  out << "keep\tprecision\trecall\ttp\tkept\trelevant\n";
  for (const EvalRow& row : report.rows) {
    out << format_score(row.keep_fraction) << '\t' << format_score(row.precision) << '\t'
        << format_score(row.recall) << '\t' << row.true_positives << '\t' << row.kept_count
        << '\t' << row.relevant_count << '\n';
  }
}

std::set<std::size_t> read_reference(std::istream& in) {
  std::set<std::size_t> reference;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string trimmed;
    for (char c : line) {
      if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
    }
    if (trimmed.empty()) continue;
    try {
      reference.insert(std::stoull(trimmed));
    } catch (const std::exception&) {
      throw ParseError("reference file line " + std::to_string(lineno) + ": bad sentence id \"" +
                       trimmed + "\"");
    }
  }
  return reference;
}

}  // namespace semnet
