#ifndef SEMNET_CASEFOLD_HPP
#define SEMNET_CASEFOLD_HPP

#include <cstdint>
#include <string>
#include <string_view>

namespace semnet {

/// Simple case folding for a single code point. Covers ASCII, Latin-1
/// Supplement and Latin Extended-A, which is enough for the European
/// languages the word index deals with. Code points outside those ranges
/// fold to themselves.
std::uint32_t fold_code_point(std::uint32_t cp);

/// Case-folds a UTF-8 string. Invalid byte sequences are passed through
/// unchanged so folding never fails.
std::string fold_case(std::string_view text);

/// True if the folded code point can be part of a word token
/// (letters, digits, combining marks).
bool is_word_code_point(std::uint32_t cp);

}  // namespace semnet

#endif  // SEMNET_CASEFOLD_HPP
