#include "intblast/sexpr.hpp"

#include "intblast/errors.hpp"

#include <cctype>

namespace intblast {

namespace {

class Lexer {
public:
  explicit Lexer(std::string_view in) : in_(in) {}

  bool at_end() {
    skip_blank();
    return pos_ >= in_.size();
  }

  SExpr read() {
    skip_blank();
    if (pos_ >= in_.size())
      fail("unexpected end of input");
    SExpr e;
    e.line = line_;
    e.column = col_;
    char c = in_[pos_];
    if (c == '(') {
      advance();
      e.type = SExpr::Type::List;
      for (;;) {
        skip_blank();
        if (pos_ >= in_.size())
          throw ParseError("unterminated list", e.line, e.column);
        if (in_[pos_] == ')') {
          advance();
          return e;
        }
        e.items.push_back(read());
      }
    }
    if (c == ')')
      fail("unexpected ')'");
    if (c == '|') {
      advance();
      std::size_t start = pos_;
      while (pos_ < in_.size() && in_[pos_] != '|') {
        if (in_[pos_] == '\\')
          fail("backslash not allowed in quoted symbol");
        advance();
      }
      if (pos_ >= in_.size())
        throw ParseError("unterminated quoted symbol", e.line, e.column);
      e.type = SExpr::Type::Symbol;
      e.quoted = true;
      e.text = std::string(in_.substr(start, pos_ - start));
      advance();
      return e;
    }
    if (c == '"') {
      advance();
      e.type = SExpr::Type::String;
      for (;;) {
        if (pos_ >= in_.size())
          throw ParseError("unterminated string literal", e.line, e.column);
        char d = in_[pos_];
        advance();
        if (d == '"') {
          if (pos_ < in_.size() && in_[pos_] == '"') {
            e.text.push_back('"');
            advance();
            continue;
          }
          return e;
        }
        e.text.push_back(d);
      }
    }
    if (c == '#') {
      advance();
      if (pos_ >= in_.size())
        fail("dangling '#'");
      char base = in_[pos_];
      advance();
      std::string digits = token_text();
      if (base == 'b') {
        e.type = SExpr::Type::Binary;
        for (char d : digits)
          if (d != '0' && d != '1')
            throw ParseError("invalid binary literal #b" + digits, e.line,
                             e.column);
      } else if (base == 'x') {
        e.type = SExpr::Type::Hex;
        for (char d : digits)
          if (!std::isxdigit(static_cast<unsigned char>(d)))
            throw ParseError("invalid hexadecimal literal #x" + digits, e.line,
                             e.column);
      } else {
        throw ParseError(std::string("unknown literal prefix #") + base,
                         e.line, e.column);
      }
      if (digits.empty())
        throw ParseError("empty literal", e.line, e.column);
      e.text = std::move(digits);
      return e;
    }
    e.text = token_text();
    if (e.text.empty())
      fail(std::string("unexpected character '") + c + "'");
    if (e.text[0] == ':') {
      e.type = SExpr::Type::Keyword;
    } else if (std::isdigit(static_cast<unsigned char>(e.text[0]))) {
      bool dot = false;
      for (char d : e.text) {
        if (d == '.' && !dot) {
          dot = true;
          continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(d)))
          throw ParseError("malformed numeral '" + e.text + "'", e.line,
                           e.column);
      }
      if (!dot && e.text.size() > 1 && e.text[0] == '0')
        throw ParseError("numeral with leading zero '" + e.text + "'", e.line,
                         e.column);
      e.type = dot ? SExpr::Type::Decimal : SExpr::Type::Numeral;
    } else {
      e.type = SExpr::Type::Symbol;
    }
    return e;
  }

private:
  [[noreturn]] void fail(const std::string &msg) {
    throw ParseError(msg, line_, col_);
  }

  void advance() {
    if (in_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_blank() {
    while (pos_ < in_.size()) {
      char c = in_[pos_];
      if (c == ';') {
        while (pos_ < in_.size() && in_[pos_] != '\n')
          advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  std::string token_text() {
    std::size_t start = pos_;
    while (pos_ < in_.size()) {
      char c = in_[pos_];
      if (std::isspace(static_cast<unsigned char>(c)) || c == '(' ||
          c == ')' || c == ';' || c == '|' || c == '"')
        break;
      advance();
    }
    return std::string(in_.substr(start, pos_ - start));
  }

  std::string_view in_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

} // namespace

std::vector<SExpr> parse_sexprs(std::string_view input) {
  Lexer lex(input);
  std::vector<SExpr> out;
  while (!lex.at_end())
    out.push_back(lex.read());
  return out;
}

std::size_t complete_sexpr_end(std::string_view input) {
  std::size_t i = 0;
  const std::size_t n = input.size();
  auto skip_blank = [&] {
    while (i < n) {
      if (input[i] == ';') {
        while (i < n && input[i] != '\n')
          ++i;
      } else if (std::isspace(static_cast<unsigned char>(input[i]))) {
        ++i;
      } else {
        break;
      }
    }
  };
  skip_blank();
  if (i >= n)
    return std::string_view::npos;
  if (input[i] != '(') {
    // An atom is complete once a delimiter follows it.
    if (input[i] == '|' || input[i] == '"') {
      char q = input[i];
      std::size_t j = input.find(q, i + 1);
      return j == std::string_view::npos ? j : j + 1;
    }
    while (i < n && !std::isspace(static_cast<unsigned char>(input[i])) &&
           input[i] != '(' && input[i] != ')')
      ++i;
    return i < n ? i : std::string_view::npos;
  }
  int depth = 0;
  while (i < n) {
    char c = input[i];
    if (c == ';') {
      while (i < n && input[i] != '\n')
        ++i;
      continue;
    }
    if (c == '|' || c == '"') {
      std::size_t j = i + 1;
      for (;;) {
        j = input.find(c, j);
        if (j == std::string_view::npos)
          return j;
        if (c == '"' && j + 1 < n && input[j + 1] == '"') {
          j += 2;
          continue;
        }
        break;
      }
      i = j + 1;
      continue;
    }
    if (c == '(')
      ++depth;
    else if (c == ')' && --depth == 0)
      return i + 1;
    ++i;
  }
  return std::string_view::npos;
}

} // namespace intblast
