// semnet: command-line front end for the semantic network toolkit.
//
// Subcommands: filter, eval, classify, terms, expand, inspect.
// Exit codes: 0 success, 1 input error, 2 network/config validation error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "semnet/ancestry.hpp"
#include "semnet/apps.hpp"
#include "semnet/casefold.hpp"
#include "semnet/measures.hpp"
#include "semnet/network.hpp"
#include "semnet/textproc.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw semnet::Error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::string> split_list(const std::string& csv) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(csv);
  while (std::getline(in, item, ',')) {
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) {
      item.erase(item.begin());
    }
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) {
      item.pop_back();
    }
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

semnet::StopList load_stoplist(const std::string& path) {
  return path.empty() ? semnet::StopList{} : semnet::StopList::load_file(path);
}

semnet::NormalizationMap load_normalization(const std::string& path) {
  return path.empty() ? semnet::NormalizationMap{} : semnet::NormalizationMap::load_file(path);
}

// A node id, or failing that a word label (all senses aggregated).
semnet::Subject resolve_subject(const semnet::SemanticNetwork& net, const std::string& token) {
  if (auto idx = net.find(token)) return semnet::Subject(*idx);
  std::vector<semnet::NodeIndex> senses = net.lookup_word(token);
  if (senses.empty()) throw semnet::Error("unknown node or word: \"" + token + "\"");
  return semnet::Subject::aggregate(net, senses);
}

std::string describe(const semnet::SemanticNetwork& net, const semnet::Subject& subject) {
  std::vector<std::string> ids;
  for (semnet::NodeIndex m : subject.members()) ids.push_back(net.node(m).id);
  std::sort(ids.begin(), ids.end());
  std::string out = "{";
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += ", ";
    out += ids[i];
  }
  return out + "}";
}

std::string format_node_set(const semnet::SemanticNetwork& net,
                            const std::vector<semnet::NodeIndex>& nodes) {
  std::vector<std::string> ids;
  ids.reserve(nodes.size());
  for (semnet::NodeIndex n : nodes) ids.push_back(net.node(n).id);
  std::sort(ids.begin(), ids.end());
  std::string out = "{";
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += ", ";
    out += ids[i];
  }
  return out + "}";
}

struct FilterArgs {
  std::string network, weights, profile, corpus, stoplist, normalize, out;
  bool line_sentences = false;
  double keep = 0.1;
  double max_score = 0.0;
  bool has_max_score = false;
};

struct EvalArgs {
  std::string scored, reference;
  std::string grid;
};

struct ClassifyArgs {
  std::string network, weights, profiles, document, stoplist, normalize;
};

struct TermsArgs {
  std::string network, weights, document, stoplist, normalize;
  std::size_t top = 20;
};

struct ExpandArgs {
  std::string network, word, mechanisms, lang;
};

struct InspectArgs {
  std::string network, nodes, weights;
};

int run_filter(const FilterArgs& args) {
  const auto net = semnet::SemanticNetwork::load_file(args.network);
  const auto config = semnet::LinkWeightConfig::load_file(args.weights);
  const auto stop = load_stoplist(args.stoplist);
  const auto norm = load_normalization(args.normalize);
  const auto sentences = semnet::segment(read_file(args.corpus), args.line_sentences);

  semnet::Profile profile{"profile", split_list(args.profile)};
  if (profile.definition.empty()) throw semnet::Error("--profile names no words");

  std::optional<double> max_score;
  if (args.has_max_score) max_score = args.max_score;
  const auto scored =
      semnet::filter_sentences(net, config, profile, sentences, args.keep, stop, norm, max_score);

  std::ofstream out(args.out, std::ios::binary);
  if (!out) throw semnet::Error("cannot open output file: " + args.out);
  semnet::write_scored(out, scored);
  return 0;
}

int run_eval(const EvalArgs& args) {
  std::ifstream scored_in(args.scored);
  if (!scored_in) throw semnet::Error("cannot open scored file: " + args.scored);
  const auto scored = semnet::read_scored(scored_in);

  std::ifstream ref_in(args.reference);
  if (!ref_in) throw semnet::Error("cannot open reference file: " + args.reference);
  const auto reference = semnet::read_reference(ref_in);

  std::vector<double> grid = semnet::kDefaultEvalGrid;
  if (!args.grid.empty()) {
    grid.clear();
    for (const std::string& item : split_list(args.grid)) {
      try {
        grid.push_back(std::stod(item));
      } catch (const std::exception&) {
        throw semnet::Error("bad grid fraction: \"" + item + "\"");
      }
    }
    if (grid.empty()) throw semnet::Error("--grid names no fractions");
  }

  semnet::write_eval_report(std::cout, semnet::evaluate(scored, reference, grid));
  return 0;
}

int run_classify(const ClassifyArgs& args) {
  const auto net = semnet::SemanticNetwork::load_file(args.network);
  const auto config = semnet::LinkWeightConfig::load_file(args.weights);
  const auto profiles = semnet::load_profiles_file(args.profiles);
  const auto stop = load_stoplist(args.stoplist);
  const auto norm = load_normalization(args.normalize);

  const auto ranked =
      semnet::classify(net, config, read_file(args.document), profiles, stop, norm);
  for (const auto& entry : ranked) {
    std::cout << entry.id << '\t' << semnet::format_score(entry.score) << '\n';
  }
  return 0;
}

int run_terms(const TermsArgs& args) {
  const auto net = semnet::SemanticNetwork::load_file(args.network);
  const auto config = semnet::LinkWeightConfig::load_file(args.weights);
  const auto stop = load_stoplist(args.stoplist);
  const auto norm = load_normalization(args.normalize);

  const auto terms =
      semnet::spot_terms(net, config, read_file(args.document), args.top, stop, norm);
  for (const auto& entry : terms) {
    std::cout << entry.word << '\t' << semnet::format_score(entry.score) << '\n';
  }
  return 0;
}

int run_expand(const ExpandArgs& args) {
  const auto net = semnet::SemanticNetwork::load_file(args.network);

  semnet::ExpansionRequest request;
  request.word = args.word;
  for (const std::string& name : split_list(args.mechanisms)) {
    auto m = semnet::parse_mechanism(name);
    if (!m) throw semnet::Error("unknown expansion mechanism: \"" + name + "\"");
    request.mechanisms.push_back(*m);
  }
  if (request.mechanisms.empty()) throw semnet::Error("--mechanisms names no mechanism");
  if (!args.lang.empty()) request.lang = args.lang;

  const auto expansion = semnet::expand(net, request);
  for (const auto& [mechanism, entries] : expansion) {
    for (const auto& [label, lang] : entries) {
      std::cout << semnet::mechanism_name(mechanism) << '\t' << label << '\t'
                << (lang.empty() ? "-" : lang) << '\n';
    }
  }
  return 0;
}

int run_inspect(const InspectArgs& args) {
  const auto net = semnet::SemanticNetwork::load_file(args.network);
  const auto config = args.weights.empty() ? semnet::LinkWeightConfig{}
                                           : semnet::LinkWeightConfig::load_file(args.weights);

  const auto tokens = split_list(args.nodes);
  if (tokens.size() != 2) throw semnet::Error("--nodes expects exactly two comma-separated nodes");
  const semnet::Subject a = resolve_subject(net, tokens[0]);
  const semnet::Subject b = resolve_subject(net, tokens[1]);

  std::cout << "A = " << describe(net, a) << '\n';
  std::cout << "B = " << describe(net, b) << '\n';
  std::cout << "ancestors(A) = " << format_node_set(net, semnet::ancestors(net, a)) << '\n';
  std::cout << "ancestors(B) = " << format_node_set(net, semnet::ancestors(net, b)) << '\n';

  auto print_arcs = [&net](const char* name, const semnet::ArcSet& arcs) {
    std::vector<std::string> rendered;
    rendered.reserve(arcs.arcs.size());
    for (const auto& [child, parent] : arcs.arcs) {
      rendered.push_back("(" + net.node(child).id + " -> " + net.node(parent).id + ")");
    }
    std::sort(rendered.begin(), rendered.end());
    std::cout << name << " = {";
    for (std::size_t i = 0; i < rendered.size(); ++i) {
      if (i) std::cout << ", ";
      std::cout << rendered[i];
    }
    std::cout << "}\n";
  };
  print_arcs("arcs(A)", semnet::ancestor_arcs(net, a));
  print_arcs("arcs(B)", semnet::ancestor_arcs(net, b));

  const auto common = semnet::nca(net, a, b);
  std::cout << "nca(A,B) = " << format_node_set(net, common.nodes)
            << (common.fallback_root ? "  [root fallback]" : "") << '\n';
  std::cout << "anca(A,B) = " << format_node_set(net, semnet::anca(net, a, b)) << '\n';
  std::cout << "anca(B,A) = " << format_node_set(net, semnet::anca(net, b, a)) << '\n';

  semnet::MeasureEngine engine(net, config);
  std::cout << "activation(A,B) = " << semnet::format_score(engine.activation(a, b).score) << '\n';
  std::cout << "proximity(A,B) = " << semnet::format_score(engine.proximity(a, b).score) << '\n';
  std::cout << "proximity(B,A) = " << semnet::format_score(engine.proximity(b, a).score) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"semantic network toolkit: differential similarity measures on a typed concept DAG"};
  app.require_subcommand(1);

  FilterArgs filter_args;
  auto* filter = app.add_subcommand("filter", "score and filter corpus sentences against a profile");
  filter->add_option("--network", filter_args.network, "network JSON file")->required();
  filter->add_option("--weights", filter_args.weights, "link weight config JSON file")->required();
  filter->add_option("--profile", filter_args.profile, "comma-separated profile words")->required();
  filter->add_option("--corpus", filter_args.corpus, "corpus text file")->required();
  filter->add_flag("--line-sentences", filter_args.line_sentences, "one sentence per line");
  filter->add_option("--stoplist", filter_args.stoplist, "stopword file, one word per line");
  filter->add_option("--normalize", filter_args.normalize, "entity normalization map (TSV)");
  filter->add_option("--keep", filter_args.keep, "fraction of sentences to keep, in (0,1]")
      ->required();
  filter->add_option("--max-score", filter_args.max_score, "absolute score cutoff for kept sentences")
      ->each([&filter_args](const std::string&) { filter_args.has_max_score = true; });
  filter->add_option("--out", filter_args.out, "output file for scored sentences")->required();

  EvalArgs eval_args;
  auto* eval = app.add_subcommand("eval", "precision/recall of a scored run against a reference");
  eval->add_option("--scored", eval_args.scored, "scored sentences file (filter output)")->required();
  eval->add_option("--reference", eval_args.reference, "relevant sentence ids, one per line")
      ->required();
  eval->add_option("--grid", eval_args.grid, "comma-separated keep fractions (default 0.1..0.5)");

  ClassifyArgs classify_args;
  auto* classify = app.add_subcommand("classify", "rank profiles by proximity to a document");
  classify->add_option("--network", classify_args.network, "network JSON file")->required();
  classify->add_option("--weights", classify_args.weights, "link weight config JSON file")->required();
  classify->add_option("--profiles", classify_args.profiles, "profiles JSON file")->required();
  classify->add_option("--document", classify_args.document, "document text file")->required();
  classify->add_option("--stoplist", classify_args.stoplist, "stopword file");
  classify->add_option("--normalize", classify_args.normalize, "entity normalization map (TSV)");

  TermsArgs terms_args;
  auto* terms = app.add_subcommand("terms", "spot the words closest to the document itself");
  terms->add_option("--network", terms_args.network, "network JSON file")->required();
  terms->add_option("--weights", terms_args.weights, "link weight config JSON file")->required();
  terms->add_option("--document", terms_args.document, "document text file")->required();
  terms->add_option("--top", terms_args.top, "number of terms to report (default 20)");
  terms->add_option("--stoplist", terms_args.stoplist, "stopword file");
  terms->add_option("--normalize", terms_args.normalize, "entity normalization map (TSV)");

  ExpandArgs expand_args;
  auto* expand = app.add_subcommand("expand", "expand a word over the network's typed links");
  expand->add_option("--network", expand_args.network, "network JSON file")->required();
  expand->add_option("--word", expand_args.word, "word to expand")->required();
  expand->add_option("--mechanisms", expand_args.mechanisms,
                     "comma-separated subset of alias,synonyms,hypernyms,hyponyms,inflected,"
                     "derived,geographic,translation")
      ->required();
  expand->add_option("--lang", expand_args.lang, "target language for translation");

  InspectArgs inspect_args;
  auto* inspect = app.add_subcommand("inspect", "print ancestry sets and measures for two nodes");
  inspect->add_option("--network", inspect_args.network, "network JSON file")->required();
  inspect->add_option("--nodes", inspect_args.nodes, "two comma-separated node ids or words")
      ->required();
  inspect->add_option("--weights", inspect_args.weights, "link weight config (default: unit)");

  try {
    app.parse(argc, argv);
    if (filter->parsed()) return run_filter(filter_args);
    if (eval->parsed()) return run_eval(eval_args);
    if (classify->parsed()) return run_classify(classify_args);
    if (terms->parsed()) return run_terms(terms_args);
    if (expand->parsed()) return run_expand(expand_args);
    if (inspect->parsed()) return run_inspect(inspect_args);
    return 1;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const semnet::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
