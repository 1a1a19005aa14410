#ifndef TPC_NAME_HPP
#define TPC_NAME_HPP

#include <compare>
#include <string>

namespace tpc {

// A symbol name. Plain identifiers are runs of letters, digits, `_` and `'`;
// operator names are runs of the characters *+-/<>=~^&|!@#$%. Anything mixed
// has to be written backtick-quoted in the surface syntax. Comparison is
// code-point order on the text (the fixed collation for canonical ordering).
struct Name {
  std::string text;

  Name() = default;
  Name(std::string s) : text(std::move(s)) {}
  Name(const char* s) : text(s) {}

  auto operator<=>(const Name&) const = default;
  bool empty() const { return text.empty(); }
};

inline bool is_ident_char(char c) {
  // bytes above 0x7f keep multi-byte UTF-8 identifiers together
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c == '_' || c == '\'' ||
         static_cast<unsigned char>(c) >= 0x80;
}

inline bool is_operator_char(char c) {
  switch (c) {
    case '*': case '+': case '-': case '/': case '<': case '>':
    case '=': case '~': case '^': case '&': case '|': case '!':
    case '@': case '#': case '$': case '%':
      return true;
    default:
      return false;
  }
}

inline bool is_plain_ident(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!is_ident_char(c)) return false;
  return true;
}

inline bool is_operator_name(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!is_operator_char(c)) return false;
  return true;
}

}  // namespace tpc

#endif
