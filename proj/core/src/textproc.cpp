#include "semnet/textproc.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "semnet/casefold.hpp"

namespace semnet {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_terminal(char c) { return c == '.' || c == '!' || c == '?'; }

}  // namespace

std::vector<std::string> tokenize(std::string_view text) {
  const std::string folded = fold_case(text);
  std::vector<std::string> tokens;
  std::string current;
  std::size_t i = 0;
  while (i < folded.size()) {
    const auto b0 = static_cast<unsigned char>(folded[i]);
    std::size_t len = 1;
    std::uint32_t cp = b0;
    if (b0 >= 0x80) {
      if ((b0 & 0xE0) == 0xC0) len = 2;
      else if ((b0 & 0xF0) == 0xE0) len = 3;
      else if ((b0 & 0xF8) == 0xF0) len = 4;
      if (i + len > folded.size()) len = 1;
      cp = b0 & (0xFF >> (len + 1));
      for (std::size_t k = 1; k < len; ++k) {
        cp = (cp << 6) | (static_cast<unsigned char>(folded[i + k]) & 0x3F);
      }
    }
    if (is_word_code_point(cp)) {
      current.append(folded, i, len);
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
    i += len;
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

std::vector<Sentence> segment(std::string_view text, bool line_sentences) {
  std::vector<Sentence> sentences;
  auto emit = [&sentences](std::string_view raw) {
    raw = trim(raw);
    if (raw.empty()) return;
    Sentence s;
    s.id = sentences.size();
    s.raw = std::string(raw);
    s.tokens = tokenize(raw);
    sentences.push_back(std::move(s));
  };

  if (line_sentences) {
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      emit(text.substr(start, end - start));
      if (end == text.size()) break;
      start = end + 1;
    }
    return sentences;
  }

  std::size_t start = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    if (is_terminal(text[i])) {
      while (i + 1 < text.size() && is_terminal(text[i + 1])) ++i;  // "..." and "?!"
      const bool at_boundary =
          i + 1 >= text.size() || std::isspace(static_cast<unsigned char>(text[i + 1]));
      if (at_boundary) {
        emit(text.substr(start, i + 1 - start));
        start = i + 1;
      }
    }
    ++i;
  }
  if (start < text.size()) emit(text.substr(start));
  return sentences;
}

StopList::StopList(const std::vector<std::string>& words) {
  for (const std::string& w : words) {
    const std::string folded = fold_case(trim(w));
    if (!folded.empty()) words_.insert(folded);
  }
}

StopList StopList::load(std::istream& in) {
  std::vector<std::string> words;
  std::string line;
  while (std::getline(in, line)) words.push_back(line);
  return StopList(words);
}

StopList StopList::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open stoplist file: " + path);
  return load(in);
}

bool StopList::contains(std::string_view word) const {
  return words_.count(fold_case(word)) > 0;
}

NormalizationMap::NormalizationMap(const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::unordered_set<std::string> range;
  for (const auto& [surface, replacement] : pairs) {
    const std::string from = fold_case(trim(surface));
    const std::string to = fold_case(trim(replacement));
    if (from.empty() || to.empty()) {
      throw ValidationError("normalization map: empty surface or replacement token");
    }
    auto [it, inserted] = map_.emplace(from, to);
    if (!inserted && it->second != to) {
      throw ValidationError("normalization map: conflicting replacements for \"" + from + "\"");
    }
    range.insert(to);
  }
  // Range and domain must not overlap or repeated application would
  // rewrite its own output.
  for (const std::string& to : range) {
    if (map_.count(to)) {
      throw ValidationError("normalization map: replacement \"" + to +
                            "\" is also a mapped surface token");
    }
  }
}

NormalizationMap NormalizationMap::load(std::istream& in) {
  std::vector<std::pair<std::string, std::string>> pairs;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos) {
      throw ParseError("normalization map line " + std::to_string(lineno) +
                       ": expected surface TAB replacement");
    }
    pairs.emplace_back(line.substr(0, tab), line.substr(tab + 1));
  }
  return NormalizationMap(pairs);
}

NormalizationMap NormalizationMap::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open normalization map file: " + path);
  return load(in);
}

std::optional<std::string> NormalizationMap::replacement(std::string_view token) const {
  auto it = map_.find(fold_case(token));
  if (it == map_.end()) return std::nullopt;
  return it->second;
}

std::set<std::string> content_words(const std::vector<std::string>& tokens, const StopList& stop) {
  std::set<std::string> out;
  for (const std::string& t : tokens) {
    if (!stop.contains(t)) out.insert(t);
  }
  return out;
}

std::set<std::string> content_words(const Sentence& sentence, const StopList& stop) {
  return content_words(sentence.tokens, stop);
}

std::vector<std::string> normalize(const std::vector<std::string>& tokens,
                                   const NormalizationMap& map) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const std::string& t : tokens) {
    auto r = map.replacement(t);
    out.push_back(r ? *r : t);
  }
  return out;
}

Resolution resolve(const std::set<std::string>& words, const SemanticNetwork& net,
                   std::optional<std::string_view> lang) {
  Resolution res;
  for (const std::string& w : words) {
    std::vector<NodeIndex> senses = net.lookup_word(w, lang);
    if (senses.empty()) {
      res.unresolved.push_back(w);
    } else {
      res.nodes.insert(res.nodes.end(), senses.begin(), senses.end());
    }
  }
  std::sort(res.nodes.begin(), res.nodes.end());
  res.nodes.erase(std::unique(res.nodes.begin(), res.nodes.end()), res.nodes.end());
  std::sort(res.unresolved.begin(), res.unresolved.end());
  return res;
}

}  // namespace semnet
