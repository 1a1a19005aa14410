#ifndef TPC_LEXER_HPP
#define TPC_LEXER_HPP

#include <string>
#include <vector>

#include "tpc/errors.hpp"
#include "tpc/name.hpp"

namespace tpc {

enum class Tok {
  Ident,  // identifier or backtick-quoted name
  Op,     // run of operator characters, usable as a name or infix
  KwEmpty,
  KwTheory,
  KwExtend,
  KwBy,
  KwCombine,
  KwMixin,
  KwView,
  KwAs,
  KwVia,
  KwType,
  KwForall,
  KwFun,
  LBrace,
  RBrace,
  LParen,
  RParen,
  LBracket,
  RBracket,
  Comma,
  Semi,
  Colon,
  Dot,
  Backslash,
  Arrow,    // ->
  MapsTo,   // |->
  Define,   // :=
  Equals,   // =
  Bars,     // ||
  End,
};

struct Token {
  Tok kind = Tok::End;
  std::string text;
  int line = 1;
  int col = 1;
};

inline const char* token_name(Tok t) {
  switch (t) {
    case Tok::Ident: return "name";
    case Tok::Op: return "operator";
    case Tok::KwEmpty: return "'Empty'";
    case Tok::KwTheory: return "'Theory'";
    case Tok::KwExtend: return "'extend'";
    case Tok::KwBy: return "'by'";
    case Tok::KwCombine: return "'combine'";
    case Tok::KwMixin: return "'mixin'";
    case Tok::KwView: return "'view'";
    case Tok::KwAs: return "'as'";
    case Tok::KwVia: return "'via'";
    case Tok::KwType: return "'type'";
    case Tok::KwForall: return "'forall'";
    case Tok::KwFun: return "'fun'";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::Comma: return "','";
    case Tok::Semi: return "';'";
    case Tok::Colon: return "':'";
    case Tok::Dot: return "'.'";
    case Tok::Backslash: return "'\\'";
    case Tok::Arrow: return "'->'";
    case Tok::MapsTo: return "'|->'";
    case Tok::Define: return "':='";
    case Tok::Equals: return "'='";
    case Tok::Bars: return "'||'";
    case Tok::End: return "end of input";
  }
  return "?";
}

inline std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  size_t i = 0;
  int line = 1, col = 1;
  auto advance = [&](size_t n) {
    for (size_t k = 0; k < n; ++k) {
      if (text[i + k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    i += n;
  };
  auto push = [&](Tok kind, std::string s, int l, int c) {
    out.push_back(Token{kind, std::move(s), l, c});
  };
  while (i < text.size()) {
    char c = text[i];
    int tl = line, tc = col;
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance(1);
      continue;
    }
    // the math-font arrows normalize to their ASCII spellings
    if (text.compare(i, 3, "\xe2\x86\xa6") == 0) {  // U+21A6 mapsto
      advance(3);
      push(Tok::MapsTo, "|->", tl, tc);
      continue;
    }
    if (text.compare(i, 3, "\xe2\x89\x94") == 0) {  // U+2254 colon-equals
      advance(3);
      push(Tok::Define, ":=", tl, tc);
      continue;
    }
    if (is_ident_char(c)) {
      size_t j = i;
      while (j < text.size() && is_ident_char(text[j])) ++j;
      std::string word = text.substr(i, j - i);
      advance(j - i);
      Tok kind = Tok::Ident;
      if (word == "Empty") kind = Tok::KwEmpty;
      else if (word == "Theory") kind = Tok::KwTheory;
      else if (word == "extend") kind = Tok::KwExtend;
      else if (word == "by") kind = Tok::KwBy;
      else if (word == "combine") kind = Tok::KwCombine;
      else if (word == "mixin") kind = Tok::KwMixin;
      else if (word == "view") kind = Tok::KwView;
      else if (word == "as") kind = Tok::KwAs;
      else if (word == "via") kind = Tok::KwVia;
      else if (word == "type") kind = Tok::KwType;
      else if (word == "forall") kind = Tok::KwForall;
      else if (word == "fun") kind = Tok::KwFun;
      push(kind, std::move(word), tl, tc);
      continue;
    }
    if (c == '`') {
      size_t j = i + 1;
      while (j < text.size() && text[j] != '`' && text[j] != '\n') ++j;
      if (j >= text.size() || text[j] != '`')
        throw Error(ErrorKind::LexError, "unterminated backtick quote", tl, tc);
      std::string word = text.substr(i + 1, j - i - 1);
      if (word.empty()) throw Error(ErrorKind::LexError, "empty quoted name", tl, tc);
      for (char q : word)
        if (!is_ident_char(q) && !is_operator_char(q))
          throw Error(ErrorKind::LexError, "bad character in quoted name", tl, tc);
      advance(j + 1 - i);
      push(Tok::Ident, std::move(word), tl, tc);
      continue;
    }
    if (is_operator_char(c)) {
      size_t j = i;
      while (j < text.size() && is_operator_char(text[j])) ++j;
      std::string run = text.substr(i, j - i);
      if (run.size() >= 2 && run[0] == '-' && run[1] == '-') {
        // comment to end of line
        while (i < text.size() && text[i] != '\n') advance(1);
        continue;
      }
      advance(j - i);
      if (run == "->") push(Tok::Arrow, run, tl, tc);
      else if (run == "|->") push(Tok::MapsTo, run, tl, tc);
      else if (run == "=") push(Tok::Equals, run, tl, tc);
      else if (run == "||") push(Tok::Bars, run, tl, tc);
      else push(Tok::Op, run, tl, tc);
      continue;
    }
    switch (c) {
      case '{': push(Tok::LBrace, "{", tl, tc); advance(1); continue;
      case '}': push(Tok::RBrace, "}", tl, tc); advance(1); continue;
      case '(': push(Tok::LParen, "(", tl, tc); advance(1); continue;
      case ')': push(Tok::RParen, ")", tl, tc); advance(1); continue;
      case '[': push(Tok::LBracket, "[", tl, tc); advance(1); continue;
      case ']': push(Tok::RBracket, "]", tl, tc); advance(1); continue;
      case ',': push(Tok::Comma, ",", tl, tc); advance(1); continue;
      case ';': push(Tok::Semi, ";", tl, tc); advance(1); continue;
      case '.': push(Tok::Dot, ".", tl, tc); advance(1); continue;
      case '\\': push(Tok::Backslash, "\\", tl, tc); advance(1); continue;
      case ':':
        if (i + 1 < text.size() && text[i + 1] == '=') {
          push(Tok::Define, ":=", tl, tc);
          advance(2);
        } else {
          push(Tok::Colon, ":", tl, tc);
          advance(1);
        }
        continue;
      default:
        throw Error(ErrorKind::LexError, std::string("unexpected character '") + c + "'", tl, tc);
    }
  }
  out.push_back(Token{Tok::End, "", line, col});
  return out;
}

}  // namespace tpc

#endif
