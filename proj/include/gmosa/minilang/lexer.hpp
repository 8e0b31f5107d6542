#pragma once

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gmosa/minilang/ast.hpp"

namespace gmosa::minilang {

enum class Tok {
  Ident, IntLit, StringLit,
  KwClass, KwInt, KwBool, KwString, KwVoid, KwIf, KwElse, KwWhile, KwReturn,
  KwTrue, KwFalse,
  LBrace, RBrace, LParen, RParen, Semi, Comma,
  Assign, EqEq, NotEq, Lt, Le, Gt, Ge,
  Plus, Minus, Star, Slash, Percent, AndAnd, OrOr, Not,
  End,
};

struct Token {
  Tok kind;
  std::string text;       // identifier or decoded string literal
  std::int64_t value = 0; // int literal
  SourcePos pos;
};

inline std::vector<Token> lex(std::string_view source) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto pos = [&]() { return SourcePos{line, col}; };
  auto advance = [&](std::size_t n = 1) {
    for (std::size_t k = 0; k < n; ++k) {
      if (i < source.size() && source[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  auto peek = [&](std::size_t off = 0) -> char {
    return i + off < source.size() ? source[i + off] : '\0';
  };

  while (i < source.size()) {
    char c = peek();
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance();
      continue;
    }
    if (c == '/' && peek(1) == '/') {
      while (i < source.size() && peek() != '\n') advance();
      continue;
    }
    SourcePos p = pos();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string word;
      while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') {
        word.push_back(peek());
        advance();
      }
      Tok kind = Tok::Ident;
      if (word == "class") kind = Tok::KwClass;
      else if (word == "int") kind = Tok::KwInt;
      else if (word == "bool") kind = Tok::KwBool;
      else if (word == "string") kind = Tok::KwString;
      else if (word == "void") kind = Tok::KwVoid;
      else if (word == "if") kind = Tok::KwIf;
      else if (word == "else") kind = Tok::KwElse;
      else if (word == "while") kind = Tok::KwWhile;
      else if (word == "return") kind = Tok::KwReturn;
      else if (word == "true") kind = Tok::KwTrue;
      else if (word == "false") kind = Tok::KwFalse;
      out.push_back({kind, std::move(word), 0, p});
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::uint64_t v = 0;
      std::string digits;
      while (std::isdigit(static_cast<unsigned char>(peek()))) {
        digits.push_back(peek());
        advance();
      }
      for (char d : digits) {
        if (v > (UINT64_MAX - static_cast<unsigned>(d - '0')) / 10)
          throw CompileError(CompileError::Kind::Syntax, p, "integer literal too large");
        v = v * 10 + static_cast<unsigned>(d - '0');
      }
      if (v > static_cast<std::uint64_t>(INT64_MAX))
        throw CompileError(CompileError::Kind::Syntax, p, "integer literal too large");
      out.push_back({Tok::IntLit, digits, static_cast<std::int64_t>(v), p});
      continue;
    }
    if (c == '"') {
      advance();
      std::string text;
      while (true) {
        if (i >= source.size() || peek() == '\n')
          throw CompileError(CompileError::Kind::Syntax, p, "unterminated string literal");
        char d = peek();
        if (d == '"') {
          advance();
          break;
        }
        if (d == '\\') {
          advance();
          char e = peek();
          switch (e) {
            case 'n': text.push_back('\n'); break;
            case 't': text.push_back('\t'); break;
            case '"': text.push_back('"'); break;
            case '\\': text.push_back('\\'); break;
            default:
              throw CompileError(CompileError::Kind::Syntax, pos(), "unknown escape sequence");
          }
          advance();
          continue;
        }
        text.push_back(d);
        advance();
      }
      out.push_back({Tok::StringLit, std::move(text), 0, p});
      continue;
    }
    auto two = [&](char a, char b) { return c == a && peek(1) == b; };
    if (two('=', '=')) { out.push_back({Tok::EqEq, "==", 0, p}); advance(2); continue; }
    if (two('!', '=')) { out.push_back({Tok::NotEq, "!=", 0, p}); advance(2); continue; }
    if (two('<', '=')) { out.push_back({Tok::Le, "<=", 0, p}); advance(2); continue; }
    if (two('>', '=')) { out.push_back({Tok::Ge, ">=", 0, p}); advance(2); continue; }
    if (two('&', '&')) { out.push_back({Tok::AndAnd, "&&", 0, p}); advance(2); continue; }
    if (two('|', '|')) { out.push_back({Tok::OrOr, "||", 0, p}); advance(2); continue; }
    Tok kind;
    switch (c) {
      case '{': kind = Tok::LBrace; break;
      case '}': kind = Tok::RBrace; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case ';': kind = Tok::Semi; break;
      case ',': kind = Tok::Comma; break;
      case '=': kind = Tok::Assign; break;
      case '<': kind = Tok::Lt; break;
      case '>': kind = Tok::Gt; break;
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '*': kind = Tok::Star; break;
      case '/': kind = Tok::Slash; break;
      case '%': kind = Tok::Percent; break;
      case '!': kind = Tok::Not; break;
      default:
        throw CompileError(CompileError::Kind::Syntax, p,
                           std::string("unexpected character '") + c + "'");
    }
    out.push_back({kind, std::string(1, c), 0, p});
    advance();
  }
  out.push_back({Tok::End, "", 0, pos()});
  return out;
}

}  // namespace gmosa::minilang
