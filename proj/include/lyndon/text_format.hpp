#pragma once

#include <string>
#include <string_view>

#include "lyndon/words.hpp"

namespace lyndon {

/// How words are written as text.
///   chars   - one character per symbol from "0-9a-z" (sigma <= 36)
///   csv     - comma-separated decimal symbol values (any sigma)
///   letters - 'a', 'b', ... one per symbol (sigma <= 26)
enum class WordFormat { chars, csv, letters };

/// chars when sigma <= 36, csv otherwise.
WordFormat default_format(const Alphabet& alphabet);

/// Parses text in the given format. For chars with sigma <= 10 the letters
/// 'a', 'b', ... are also accepted as aliases of '0', '1', ...
/// Throws std::invalid_argument on malformed or out-of-range input.
Word parse_word(std::string_view text, const Alphabet& alphabet, WordFormat format);

std::string format_word(const Word& w, WordFormat format);

}  // namespace lyndon
