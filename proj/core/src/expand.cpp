#include <algorithm>

#include "semnet/apps.hpp"
#include "semnet/casefold.hpp"

namespace semnet {

namespace {

struct MechanismName {
  Mechanism mechanism;
  std::string_view name;
};

constexpr MechanismName kMechanismNames[] = {
    {Mechanism::Alias, "alias"},           {Mechanism::Synonyms, "synonyms"},
    {Mechanism::Hypernyms, "hypernyms"},   {Mechanism::Hyponyms, "hyponyms"},
    {Mechanism::Inflected, "inflected"},   {Mechanism::Derived, "derived"},
    {Mechanism::Geographic, "geographic"}, {Mechanism::Translation, "translation"},
};

// Link type labels the lexical mechanisms traverse.
std::string_view link_type_for(Mechanism m) {
  switch (m) {
    case Mechanism::Alias: return "alias";
    case Mechanism::Synonyms: return "synonym";
    case Mechanism::Inflected: return "inflected";
    case Mechanism::Derived: return "derived";
    case Mechanism::Geographic: return "geographic";
    default: return {};
  }
}

void add(ExpansionSet& out, const Node& node) { out.emplace(node.label, node.lang); }

bool is_sense(const std::vector<NodeIndex>& senses, NodeIndex n) {
  return std::binary_search(senses.begin(), senses.end(), n);
}

// Word nodes reachable over edges of one explicit link type, in either
// direction.
void typed_neighbors(const SemanticNetwork& net, const std::vector<NodeIndex>& senses,
                     std::uint32_t type, ExpansionSet& out) {
  for (NodeIndex s : senses) {
    for (const Arc& a : net.parents(s)) {
      if (a.type == type && !is_sense(senses, a.node) && net.node(a.node).kind == NodeKind::Word) {
        add(out, net.node(a.node));
      }
    }
    for (const Arc& a : net.children(s)) {
      if (a.type == type && !is_sense(senses, a.node) && net.node(a.node).kind == NodeKind::Word) {
        add(out, net.node(a.node));
      }
    }
  }
}

// Word nodes sharing a parent (a sense node) with one of the senses,
// restricted by language: `lang` empty means "same language as the
// sense", otherwise the given target language.
void co_attached_words(const SemanticNetwork& net, const std::vector<NodeIndex>& senses,
                       std::optional<std::string_view> target_lang, ExpansionSet& out) {
  for (NodeIndex s : senses) {
    const std::string& own_lang = net.node(s).lang;
    for (const Arc& up : net.parents(s)) {
      for (const Arc& down : net.children(up.node)) {
        if (is_sense(senses, down.node)) continue;
        const Node& sibling = net.node(down.node);
        if (sibling.kind != NodeKind::Word) continue;
        if (target_lang ? sibling.lang == fold_case(*target_lang) : sibling.lang == own_lang) {
          add(out, sibling);
        }
      }
    }
  }
}

}  // namespace

std::optional<Mechanism> parse_mechanism(std::string_view name) {
  for (const auto& entry : kMechanismNames) {
    if (entry.name == name) return entry.mechanism;
  }
  return std::nullopt;
}

std::string_view mechanism_name(Mechanism m) {
  for (const auto& entry : kMechanismNames) {
    if (entry.mechanism == m) return entry.name;
  }
  return {};
}

std::map<Mechanism, ExpansionSet> expand(const SemanticNetwork& net,
                                         const ExpansionRequest& request) {
  if (request.mechanisms.empty()) throw Error("expansion request names no mechanism");
  std::vector<NodeIndex> senses = net.lookup_word(request.word);
  if (senses.empty()) {
    throw Error("unknown word: \"" + request.word + "\"");
  }
  std::sort(senses.begin(), senses.end());

  std::map<Mechanism, ExpansionSet> result;
  for (Mechanism m : request.mechanisms) {
    ExpansionSet& out = result[m];  // requested mechanisms always appear, possibly empty
    switch (m) {
      case Mechanism::Hypernyms:
        for (NodeIndex s : senses) {
          for (const Arc& a : net.parents(s)) add(out, net.node(a.node));
        }
        break;
      case Mechanism::Hyponyms:
        for (NodeIndex s : senses) {
          for (const Arc& a : net.children(s)) add(out, net.node(a.node));
        }
        break;
      case Mechanism::Synonyms: {
        if (auto type = net.link_type_id(link_type_for(m))) {
          typed_neighbors(net, senses, *type, out);
        }
        co_attached_words(net, senses, std::nullopt, out);
        break;
      }
      case Mechanism::Translation: {
        if (!request.lang) {
          throw Error("translation expansion needs a target language");
        }
        co_attached_words(net, senses, *request.lang, out);
        break;
      }
      case Mechanism::Alias:
      case Mechanism::Inflected:
      case Mechanism::Derived:
      case Mechanism::Geographic: {
        if (auto type = net.link_type_id(link_type_for(m))) {
          typed_neighbors(net, senses, *type, out);
        }
        break;
      }
    }
  }
  return result;
}

}  // namespace semnet
