#include "semnet/apps.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "gtest/gtest.h"
#include "support/fixtures.hpp"
#include "support/oracle.hpp"

namespace semnet {
namespace {

using testing::load_fixture_network;
using testing::OracleGraph;

std::vector<Sentence> as_sentences(const std::vector<std::string>& lines) {
  std::string joined;
  for (const auto& line : lines) {
    joined += line;
    joined += '\n';
  }
  return segment(joined, /*line_sentences=*/true);
}

std::set<std::size_t> kept_ids(const std::vector<ScoredSentence>& scored) {
  std::set<std::size_t> out;
  for (const auto& s : scored) {
    if (s.kept) out.insert(s.id);
  }
  return out;
}

class FilterFig1 : public ::testing::Test {
 protected:
  FilterFig1() : net(load_fixture_network("fig1.json")) {}

  SemanticNetwork net;
  LinkWeightConfig unit_weights;
  StopList stop;
  NormalizationMap norm;
  Profile profile{"commerce", {"seller", "florist"}};
};

TEST_F(FilterFig1, KeepsTheClosestFraction) {
  // Sentences 0, 3 and 7 carry profile words (activation 0); the rest
  // carry "sell" (activation 2) or nothing resolvable at all.
  const auto corpus = as_sentences({
      "the seller was here",   // 0
      "people sell things",    // 1
      "nothing to see",        // 2
      "a florist arranges",    // 3
      "they sell flowers",     // 4
      "quiet afternoon",       // 5
      "more to sell",          // 6
      "seller meets florist",  // 7
      "sell sell sell",        // 8
      "unrelated words only",  // 9
  });
  const auto scored =
      filter_sentences(net, unit_weights, profile, corpus, 0.3, stop, norm);

  EXPECT_EQ(kept_ids(scored), (std::set<std::size_t>{0, 3, 7}));

  // Brute-force recomputation of every score.
  const OracleGraph oracle(net);
  const std::vector<NodeIndex> profile_nodes{net.index_of("seller"), net.index_of("florist")};
  for (const auto& row : scored) {
    const auto& sentence = corpus[row.id];
    const auto words = content_words(sentence, stop);
    const auto res = resolve(words, net);
    if (res.nodes.empty()) {
      EXPECT_FALSE(row.resolvable());
      EXPECT_FALSE(row.kept);
    } else {
      EXPECT_EQ(row.score, oracle.activation(profile_nodes, res.nodes, unit_weights));
    }
  }
}

TEST_F(FilterFig1, RankingPutsUnresolvableLast) {
  const auto corpus = as_sentences({"zebra crossing", "the seller", "sell it"});
  const auto scored = filter_sentences(net, unit_weights, profile, corpus, 1.0, stop, norm);

  ASSERT_EQ(scored.size(), 3u);
  EXPECT_EQ(scored[0].id, 1u);
  EXPECT_EQ(scored[1].id, 2u);
  EXPECT_EQ(scored[2].id, 0u);
  EXPECT_FALSE(scored[2].resolvable());

  // Full keep marks every resolvable sentence, never the unresolvable one.
  EXPECT_EQ(kept_ids(scored), (std::set<std::size_t>{1, 2}));
}

TEST_F(FilterFig1, IdentityCorpusScoresZero) {
  const auto corpus = as_sentences({"seller florist"});
  const auto scored = filter_sentences(net, unit_weights, profile, corpus, 1.0, stop, norm);
  ASSERT_EQ(scored.size(), 1u);
  EXPECT_EQ(scored[0].score, 0.0);
  EXPECT_TRUE(scored[0].kept);
}

TEST_F(FilterFig1, MaxScoreCutsTheQuota) {
  const auto corpus = as_sentences({"the seller", "sell it", "sell more"});
  const auto scored =
      filter_sentences(net, unit_weights, profile, corpus, 1.0, stop, norm, 1.0);
  EXPECT_EQ(kept_ids(scored), (std::set<std::size_t>{0}));
}

TEST_F(FilterFig1, InputErrors) {
  const auto corpus = as_sentences({"the seller"});
  EXPECT_THROW(filter_sentences(net, unit_weights, profile, corpus, 0.0, stop, norm), Error);
  EXPECT_THROW(filter_sentences(net, unit_weights, profile, corpus, 1.5, stop, norm), Error);
  EXPECT_THROW(filter_sentences(net, unit_weights, profile, {}, 0.5, stop, norm), Error);

  const Profile ghost{"ghost", {"zebra", "quux"}};
  EXPECT_THROW(filter_sentences(net, unit_weights, ghost, corpus, 0.5, stop, norm), Error);
}

TEST(Evaluate, PrecisionRecallByDefinition) {
  // Ranking puts 0, 3, 7, 9 first; at 40% of ten sentences those are kept.
  std::vector<ScoredSentence> scored;
  const std::vector<std::size_t> order{0, 3, 7, 9, 1, 2, 4, 5, 6, 8};
  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    scored.push_back({order[rank], 0.1 * static_cast<double>(rank + 1), false});
  }
  const auto report = evaluate(scored, {0, 3, 7, 8, 2}, {0.4});
  ASSERT_EQ(report.rows.size(), 1u);
  EXPECT_EQ(report.rows[0].true_positives, 3u);
  EXPECT_DOUBLE_EQ(report.rows[0].precision, 0.75);
  EXPECT_DOUBLE_EQ(report.rows[0].recall, 0.6);
  EXPECT_EQ(report.rows[0].kept_count, 4u);
  EXPECT_EQ(report.rows[0].relevant_count, 5u);
}

TEST(Evaluate, VacuousConventions) {
  std::vector<ScoredSentence> scored{{0, 1.0, false}, {1, 2.0, false}};
  const auto empty_ref = evaluate(scored, {});
  for (const auto& row : empty_ref.rows) {
    EXPECT_DOUBLE_EQ(row.recall, 1.0);
    EXPECT_TRUE(row.vacuous_recall);
    EXPECT_FALSE(row.vacuous_precision);
  }

  // Nothing resolvable: nothing kept, precision by convention 1.0.
  std::vector<ScoredSentence> unresolvable{
      {0, std::numeric_limits<double>::infinity(), false}};
  const auto report = evaluate(unresolvable, {0});
  for (const auto& row : report.rows) {
    EXPECT_EQ(row.kept_count, 0u);
    EXPECT_TRUE(row.vacuous_precision);
    EXPECT_DOUBLE_EQ(row.precision, 1.0);
    EXPECT_DOUBLE_EQ(row.recall, 0.0);
  }
}

TEST(Evaluate, ReferenceIdsMustExist) {
  std::vector<ScoredSentence> scored{{0, 1.0, false}};
  EXPECT_THROW(evaluate(scored, {5}), Error);
}

TEST(Evaluate, ArithmeticInvariants) {
  std::vector<ScoredSentence> scored;
  for (std::size_t i = 0; i < 40; ++i) {
    scored.push_back({i, static_cast<double>((i * 7) % 13), false});
  }
  const std::set<std::size_t> reference{1, 3, 5, 7, 11, 13, 17, 19, 23, 29};
  const auto report = evaluate(scored, reference);

  double previous_recall = 0.0;
  for (const auto& row : report.rows) {
    EXPECT_LE(row.true_positives, std::min(row.kept_count, row.relevant_count));
    EXPECT_DOUBLE_EQ(row.precision * static_cast<double>(row.kept_count),
                     static_cast<double>(row.true_positives));
    EXPECT_DOUBLE_EQ(row.recall * static_cast<double>(row.relevant_count),
                     static_cast<double>(row.true_positives));
    EXPECT_GE(row.recall, previous_recall);
    previous_recall = row.recall;
  }
}

TEST(Classify, OrderingMatchesTheOracle) {
  const auto net = load_fixture_network("fig1.json");
  const LinkWeightConfig unit;
  const StopList stop;
  const NormalizationMap norm;

  const std::vector<Profile> profiles{{"p1", {"seller"}}, {"p2", {"sell"}}};
  const auto ranked = classify(net, unit, "florist", profiles, stop, norm);
  ASSERT_EQ(ranked.size(), 2u);

  const OracleGraph oracle(net);
  const std::vector<NodeIndex> doc{net.index_of("florist")};
  const double to_seller =
      oracle.proximity(doc, std::vector<NodeIndex>{net.index_of("seller")}, unit);
  const double to_sell = oracle.proximity(doc, std::vector<NodeIndex>{net.index_of("sell")}, unit);

  // Both proximities are 6 on this fixture; the tie breaks on profile id.
  EXPECT_DOUBLE_EQ(to_seller, ranked[0].id == "p1" ? ranked[0].score : ranked[1].score);
  EXPECT_DOUBLE_EQ(to_sell, ranked[0].id == "p2" ? ranked[0].score : ranked[1].score);
  EXPECT_EQ(ranked[0].id, "p1");
  EXPECT_LE(ranked[0].score, ranked[1].score);
}

TEST(Classify, IdentityAndSingleProfile) {
  const auto net = load_fixture_network("fig1.json");
  const LinkWeightConfig unit;

  const std::vector<Profile> single{{"only", {"sell"}}};
  const auto one = classify(net, unit, "unrelated sell words", single, {}, {});
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].id, "only");

  const std::vector<Profile> both{{"match", {"seller", "florist"}}, {"other", {"sell"}}};
  const auto ranked = classify(net, unit, "seller florist", both, {}, {});
  EXPECT_EQ(ranked[0].id, "match");
  EXPECT_DOUBLE_EQ(ranked[0].score, 0.0);
}

TEST(Classify, UnresolvableCases) {
  const auto net = load_fixture_network("fig1.json");
  const LinkWeightConfig unit;

  const std::vector<Profile> profiles{{"ok", {"seller"}}, {"ghost", {"zebra"}}};
  const auto ranked = classify(net, unit, "florist", profiles, {}, {});
  ASSERT_EQ(ranked.size(), 2u);
  EXPECT_EQ(ranked[1].id, "ghost");
  EXPECT_TRUE(std::isinf(ranked[1].score));

  EXPECT_THROW(classify(net, unit, "zebra xylophone", profiles, {}, {}), Error);
  EXPECT_THROW(classify(net, unit, "florist", {}, {}, {}), Error);
}

TEST(SpotTerms, LeaveOneOutRankingMatchesOracle) {
  const auto net = load_fixture_network("fig1.json");
  const LinkWeightConfig unit;
  const OracleGraph oracle(net);

  const auto ranked = spot_terms(net, unit, "seller florist sell", 10, {}, {});
  ASSERT_EQ(ranked.size(), 3u);

  const auto senses = [&](const std::string& w) { return net.lookup_word(w); };
  const auto others = [&](const std::string& w) {
    std::vector<NodeIndex> out;
    for (const std::string& o : {"seller", "florist", "sell"}) {
      if (o != w) {
        const auto s = senses(o);
        out.insert(out.end(), s.begin(), s.end());
      }
    }
    return out;
  };
  std::vector<std::pair<std::string, double>> expected;
  for (const std::string& w : {"seller", "florist", "sell"}) {
    expected.emplace_back(w, oracle.proximity(senses(w), others(w), unit));
  }
  std::sort(expected.begin(), expected.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second < b.second;
    return a.first < b.first;
  });
  for (std::size_t i = 0; i < expected.size(); ++i) {
    EXPECT_EQ(ranked[i].word, expected[i].first);
    EXPECT_EQ(ranked[i].score, expected[i].second);
  }

  const auto top2 = spot_terms(net, unit, "seller florist sell", 2, {}, {});
  ASSERT_EQ(top2.size(), 2u);
  EXPECT_EQ(top2[0].word, ranked[0].word);
  EXPECT_EQ(top2[1].word, ranked[1].word);
}

TEST(SpotTerms, NeedsTwoResolvableWords) {
  const auto net = load_fixture_network("fig1.json");
  const LinkWeightConfig unit;
  EXPECT_THROW(spot_terms(net, unit, "seller zebra quux", 5, {}, {}), Error);
  EXPECT_THROW(spot_terms(net, unit, "seller florist", 0, {}, {}), Error);
  EXPECT_EQ(spot_terms(net, unit, "seller florist", 5, {}, {}).size(), 2u);
}

TEST(Expand, StructuralMechanisms) {
  const auto net = load_fixture_network("fig1.json");

  ExpansionRequest request{"florist", {Mechanism::Hypernyms, Mechanism::Hyponyms,
                                       Mechanism::Geographic}, std::nullopt};
  const auto result = expand(net, request);

  const ExpansionSet expected_up{{"\\Sell", ""}, {"\\Person", ""}, {"\\Flower", ""}};
  EXPECT_EQ(result.at(Mechanism::Hypernyms), expected_up);
  EXPECT_TRUE(result.at(Mechanism::Hyponyms).empty());
  // No "geographic" links anywhere in this network: empty, not an error.
  EXPECT_TRUE(result.at(Mechanism::Geographic).empty());

  const auto leaf = expand(net, {"sell", {Mechanism::Hyponyms}, std::nullopt});
  EXPECT_TRUE(leaf.at(Mechanism::Hyponyms).empty());

  EXPECT_THROW(expand(net, {"zebra", {Mechanism::Hypernyms}, std::nullopt}), Error);
  EXPECT_THROW(expand(net, {"florist", {}, std::nullopt}), Error);
}

TEST(Expand, LexicalMechanismsOnBilingualFixture) {
  const auto net = load_fixture_network("bilingual.json");

  const auto synonyms = expand(net, {"florist", {Mechanism::Synonyms}, std::nullopt});
  EXPECT_EQ(synonyms.at(Mechanism::Synonyms), (ExpansionSet{{"flowerseller", "en"}}));

  const auto translation =
      expand(net, {"florist", {Mechanism::Translation}, std::optional<std::string>("fr")});
  EXPECT_EQ(translation.at(Mechanism::Translation), (ExpansionSet{{"fleuriste", "fr"}}));

  EXPECT_THROW(expand(net, {"florist", {Mechanism::Translation}, std::nullopt}), Error);

  const auto alias = expand(net, {"florist", {Mechanism::Alias}, std::nullopt});
  EXPECT_EQ(alias.at(Mechanism::Alias), (ExpansionSet{{"floryst", "en"}}));

  // The alias word reaches back to its canonical form the same way.
  const auto back = expand(net, {"floryst", {Mechanism::Alias}, std::nullopt});
  EXPECT_EQ(back.at(Mechanism::Alias), (ExpansionSet{{"florist", "en"}}));
}

TEST(Expand, MechanismNames) {
  EXPECT_EQ(parse_mechanism("hypernyms"), Mechanism::Hypernyms);
  EXPECT_EQ(parse_mechanism("translation"), Mechanism::Translation);
  EXPECT_FALSE(parse_mechanism("bogus").has_value());
  EXPECT_EQ(mechanism_name(Mechanism::Geographic), "geographic");
}

TEST(Profiles, LoadAndValidate) {
  std::istringstream in(R"([
    {"id": "a", "definition": ["one", "two"]},
    {"id": "b", "definition": ["three"]}
  ])");
  const auto profiles = load_profiles(in);
  ASSERT_EQ(profiles.size(), 2u);
  EXPECT_EQ(profiles[0].id, "a");
  EXPECT_EQ(profiles[1].definition, (std::vector<std::string>{"three"}));

  std::istringstream dup(R"([{"id": "a", "definition": ["x"]}, {"id": "a", "definition": ["y"]}])");
  EXPECT_THROW(load_profiles(dup), ValidationError);

  std::istringstream empty_def(R"([{"id": "a", "definition": []}])");
  EXPECT_THROW(load_profiles(empty_def), ValidationError);

  std::istringstream not_array(R"({"id": "a"})");
  EXPECT_THROW(load_profiles(not_array), ParseError);
}

TEST(ScoredIo, RoundTripAndFormat) {
  std::vector<ScoredSentence> scored{
      {0, 0.0, true}, {1, 1.5, true}, {2, std::numeric_limits<double>::infinity(), false}};
  std::ostringstream out;
  write_scored(out, scored);
  EXPECT_EQ(out.str(), "0\t0\t1\n1\t1.5\t1\n2\tinf\t0\n");

  std::istringstream in(out.str());
  const auto back = read_scored(in);
  ASSERT_EQ(back.size(), 3u);
  EXPECT_EQ(back[0].id, 0u);
  EXPECT_TRUE(back[0].kept);
  EXPECT_DOUBLE_EQ(back[1].score, 1.5);
  EXPECT_FALSE(back[2].resolvable());

  std::istringstream bad("0\tnot-a-number\t1\n");
  EXPECT_THROW(read_scored(bad), ParseError);
  std::istringstream dup("0\t1\t0\n0\t2\t0\n");
  EXPECT_THROW(read_scored(dup), ParseError);
}

TEST(ScoredIo, EvalReportShape) {
  std::vector<ScoredSentence> scored;
  for (std::size_t i = 0; i < 10; ++i) scored.push_back({i, static_cast<double>(i), false});
  const auto report = evaluate(scored, {0, 1, 2});

  std::ostringstream out;
  write_eval_report(out, report);
  std::istringstream lines(out.str());
  std::string header;
  std::getline(lines, header);
  EXPECT_EQ(header, "keep\tprecision\trecall\ttp\tkept\trelevant");
  std::string row;
  std::size_t rows = 0;
  while (std::getline(lines, row)) ++rows;
  EXPECT_EQ(rows, 5u);

  EXPECT_EQ(format_score(2.0), "2");
  EXPECT_EQ(format_score(0.75), "0.75");
  EXPECT_EQ(format_score(std::numeric_limits<double>::infinity()), "inf");
}

TEST(Reference, ReadsIdsOnePerLine) {
  std::istringstream in("3\n1\n\n17\r\n");
  EXPECT_EQ(read_reference(in), (std::set<std::size_t>{1, 3, 17}));

  std::istringstream bad("x\n");
  EXPECT_THROW(read_reference(bad), ParseError);
}

}  // namespace
}  // namespace semnet
