#include "textio.hpp"

namespace tfs::detail {

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  int lineNo = 1;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view raw =
        eol == std::string_view::npos ? text.substr(pos) : text.substr(pos, eol - pos);
    if (std::size_t hash = raw.find('#'); hash != std::string_view::npos) {
      raw = raw.substr(0, hash);
    }
    Line line;
    line.number = lineNo;
    std::size_t i = 0;
    while (i < raw.size()) {
      if (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r') {
        ++i;
        continue;
      }
      std::size_t start = i;
      while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t' && raw[i] != '\r') ++i;
      line.tokens.push_back(
          {std::string(raw.substr(start, i - start)), lineNo, static_cast<int>(start) + 1});
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
    ++lineNo;
  }
  return lines;
}

bool isIdentifier(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
              c == '_' || c == '-';
    if (!ok) return false;
  }
  return true;
}

void parseFail(const Token& at, const std::string& msg) {
  throw ParseError(at.line, at.column, msg);
}

void parseFail(int line, const std::string& msg) { throw ParseError(line, 1, msg); }

void expectTokens(const Line& line, std::size_t n, const char* form) {
  if (line.tokens.size() != n) {
    parseFail(line.tokens.front(), std::string("expected `") + form + "`");
  }
}

const Token& identifier(const Line& line, std::size_t idx) {
  const Token& tok = line.tokens.at(idx);
  if (!isIdentifier(tok.text)) {
    parseFail(tok, "invalid identifier '" + tok.text + "'");
  }
  return tok;
}

}  // namespace tfs::detail
