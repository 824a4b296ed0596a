#include <cctype>

#include "qseries/dsl.hpp"

namespace qseries::dsl {

std::string_view to_string(TokenKind kind) {
  switch (kind) {
    case TokenKind::Integer: return "integer";
    case TokenKind::Ident: return "identifier";
    case TokenKind::Q: return "'q'";
    case TokenKind::R5: return "'r5'";
    case TokenKind::Pi: return "'pi'";
    case TokenKind::Plus: return "'+'";
    case TokenKind::Minus: return "'-'";
    case TokenKind::Star: return "'*'";
    case TokenKind::Slash: return "'/'";
    case TokenKind::Caret: return "'^'";
    case TokenKind::LParen: return "'('";
    case TokenKind::RParen: return "')'";
    case TokenKind::Comma: return "','";
    case TokenKind::Semicolon: return "';'";
    case TokenKind::End: return "end of input";
  }
  return "?";
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  const auto is_ident_start = [](unsigned char c) { return std::isalpha(c) || c == '_'; };
  const auto is_ident_char = [](unsigned char c) { return std::isalnum(c) || c == '_'; };
  while (i < text.size()) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isdigit(c)) {
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      out.push_back({TokenKind::Integer, std::string(text.substr(start, i - start)), {start, i}});
      continue;
    }
    if (is_ident_start(c)) {
      while (i < text.size() && is_ident_char(static_cast<unsigned char>(text[i]))) ++i;
      std::string word(text.substr(start, i - start));
      TokenKind kind = TokenKind::Ident;
      if (word == "q") kind = TokenKind::Q;
      else if (word == "r5") kind = TokenKind::R5;
      else if (word == "pi") kind = TokenKind::Pi;
      out.push_back({kind, std::move(word), {start, i}});
      continue;
    }
    TokenKind kind;
    switch (c) {
      case '+': kind = TokenKind::Plus; break;
      case '-': kind = TokenKind::Minus; break;
      case '*': kind = TokenKind::Star; break;
      case '/': kind = TokenKind::Slash; break;
      case '^': kind = TokenKind::Caret; break;
      case '(': kind = TokenKind::LParen; break;
      case ')': kind = TokenKind::RParen; break;
      case ',': kind = TokenKind::Comma; break;
      case ';': kind = TokenKind::Semicolon; break;
      default:
        throw Error(ErrorKind::LexError, "unexpected byte 0x" + [&] {
          static const char* hex = "0123456789abcdef";
          return std::string{hex[c >> 4], hex[c & 15]};
        }(), SourceSpan{start, start + 1});
    }
    ++i;
    out.push_back({kind, std::string(1, static_cast<char>(c)), {start, i}});
  }
  out.push_back({TokenKind::End, "", {text.size(), text.size()}});
  return out;
}

}  // namespace qseries::dsl
