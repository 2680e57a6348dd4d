#include "weyl_parse.hpp"

#include <cctype>
#include <optional>
#include <string>

namespace mulx::cli {

namespace {

[[noreturn]] void bad_token(std::string_view token, std::size_t offset) {
  fail(errc::parse_error,
       "bad word token '" + std::string(token) + "' at byte " + std::to_string(offset),
       static_cast<long long>(offset));
}

// Non-negative integer; nullopt when text is empty or has trailing garbage.
std::optional<int> parse_int(std::string_view text) {
  if (text.empty()) return std::nullopt;
  long long value = 0;
  for (char ch : text) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return std::nullopt;
    value = value * 10 + (ch - '0');
    if (value > 1'000'000) return std::nullopt;
  }
  return static_cast<int>(value);
}

}  // namespace

WeylWord parse_weyl_word(std::string_view text, int level) {
  WeylWord out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    const std::size_t start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    std::string_view token = text.substr(start, pos - start);

    std::string_view base = token;
    int exponent = 1;
    if (auto caret = token.find('^'); caret != std::string_view::npos) {
      base = token.substr(0, caret);
      auto exp = parse_int(token.substr(caret + 1));
      if (!exp) bad_token(token, start);
      exponent = *exp;
    }

    WeylWord piece;
    if (base == "t") {
      piece = WeylWord({WeylLetter::tau()});
    } else if (base == "t-") {
      piece = WeylWord({WeylLetter::tau_inv()});
    } else if (base == "w0") {
      piece = w0_word(level);
    } else if (base.size() >= 2 && (base[0] == 's' || base[0] == 'a')) {
      auto index = parse_int(base.substr(1));
      if (!index || *index < 1 || *index > level - 1) bad_token(token, start);
      piece = base[0] == 's' ? WeylWord({WeylLetter::sigma(*index)}) : alpha_word(*index, level);
    } else {
      bad_token(token, start);
    }
    out *= piece.pow(exponent);
  }
  return out;
}

}  // namespace mulx::cli
