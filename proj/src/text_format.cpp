#include "lyndon/text_format.hpp"

#include <charconv>
#include <vector>

namespace lyndon {

namespace {

constexpr std::string_view kDigits = "0123456789abcdefghijklmnopqrstuvwxyz";

Symbol parse_char(char c, const Alphabet& alphabet) {
  const auto pos = kDigits.find(c);
  if (pos == std::string_view::npos) {
    throw std::invalid_argument(std::string("invalid symbol character '") + c + "'");
  }
  Symbol s = static_cast<Symbol>(pos);
  if (alphabet.sigma() <= 10 && s >= 10) s -= 10;  // letter alias
  if (!alphabet.contains(s)) {
    throw std::invalid_argument(std::string("symbol '") + c + "' outside alphabet of size " +
                                std::to_string(alphabet.sigma()));
  }
  return s;
}

}  // namespace

WordFormat default_format(const Alphabet& alphabet) {
  return alphabet.sigma() <= kDigits.size() ? WordFormat::chars : WordFormat::csv;
}

Word parse_word(std::string_view text, const Alphabet& alphabet, WordFormat format) {
  std::vector<Symbol> symbols;
  switch (format) {
    case WordFormat::chars:
      if (alphabet.sigma() > kDigits.size()) {
        throw std::invalid_argument("chars format supports at most 36 symbols");
      }
      for (char c : text) symbols.push_back(parse_char(c, alphabet));
      break;
    case WordFormat::letters:
      if (alphabet.sigma() > 26) throw std::invalid_argument("letters format supports at most 26 symbols");
      for (char c : text) {
        if (c < 'a' || c > 'z') throw std::invalid_argument(std::string("invalid letter '") + c + "'");
        symbols.push_back(static_cast<Symbol>(c - 'a'));
      }
      break;
    case WordFormat::csv: {
      std::size_t start = 0;
      while (start <= text.size() && !text.empty()) {
        const auto comma = text.find(',', start);
        const auto field = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
        Symbol value = 0;
        const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
        if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size()) {
          throw std::invalid_argument("malformed csv symbol '" + std::string(field) + "'");
        }
        symbols.push_back(value);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
      }
      break;
    }
  }
  if (symbols.empty()) throw std::invalid_argument("empty word");
  return Word(alphabet, std::move(symbols));
}

std::string format_word(const Word& w, WordFormat format) {
  std::string out;
  switch (format) {
    case WordFormat::chars:
      if (w.sigma() > kDigits.size()) throw std::invalid_argument("chars format supports at most 36 symbols");
      for (Symbol s : w.symbols()) out.push_back(kDigits[s]);
      break;
    case WordFormat::letters:
      if (w.sigma() > 26) throw std::invalid_argument("letters format supports at most 26 symbols");
      for (Symbol s : w.symbols()) out.push_back(static_cast<char>('a' + s));
      break;
    case WordFormat::csv:
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(w[i]);
      }
      break;
  }
  return out;
}

}  // namespace lyndon
