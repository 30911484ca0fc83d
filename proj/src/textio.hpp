#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tfs/error.hpp"

namespace tfs::detail {

struct Token {
  std::string text;
  int line = 0;
  int column = 0;
};

/// One nonblank input line after comment stripping.
struct Line {
  std::vector<Token> tokens;
  int number = 0;
};

/// Splits text into whitespace-separated tokens per line; `#` starts a
/// comment running to end of line; blank lines are dropped. Positions are
/// 1-based.
std::vector<Line> tokenize(std::string_view text);

/// Identifiers are nonempty strings over letters, digits, `_` and `-`.
bool isIdentifier(std::string_view s);

[[noreturn]] void parseFail(const Token& at, const std::string& msg);
[[noreturn]] void parseFail(int line, const std::string& msg);

/// Requires exactly n tokens; `form` names the expected line shape.
void expectTokens(const Line& line, std::size_t n, const char* form);

/// Returns the idx-th token, validated as an identifier.
const Token& identifier(const Line& line, std::size_t idx);

}  // namespace tfs::detail
