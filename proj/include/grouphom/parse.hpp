#pragma once

#include <cctype>
#include <cstdint>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "grouphom/presentation.hpp"
#include "grouphom/word.hpp"

namespace grouphom {

struct ParseOptions {
  // Cap on the flat letter count any single word may expand to.
  std::size_t max_expanded_letters = 1'000'000;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t col, const std::string& msg)
      : std::runtime_error("parse error at " + std::to_string(line) + ":" +
                           std::to_string(col) + ": " + msg),
        line_(line),
        col_(col) {}

  std::size_t line() const { return line_; }
  std::size_t col() const { return col_; }

 private:
  std::size_t line_;
  std::size_t col_;
};

namespace detail {

enum class Tok {
  Ident,
  Int,
  Caret,
  Minus,
  LParen,
  RParen,
  LBracket,
  RBracket,
  Comma,
  Semi,
  Colon,
  Newline,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t col;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '#') {  // comment to end of line
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
        continue;
      }
      if (c == ' ' || c == '\t' || c == '\r') {
        advance();
        continue;
      }
      break;
    }
    if (pos_ >= src_.size()) return {Tok::End, "", line_, col_};

    const std::size_t line = line_;
    const std::size_t col = col_;
    char c = src_[pos_];
    if (c == '\n') {
      advance();
      return {Tok::Newline, "\n", line, col};
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
              src_[pos_] == '_')) {
        advance();
      }
      return {Tok::Ident, std::string(src_.substr(start, pos_ - start)), line,
              col};
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < src_.size() &&
             std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        advance();
      }
      return {Tok::Int, std::string(src_.substr(start, pos_ - start)), line,
              col};
    }
    advance();
    switch (c) {
      case '^': return {Tok::Caret, "^", line, col};
      case '-': return {Tok::Minus, "-", line, col};
      case '(': return {Tok::LParen, "(", line, col};
      case ')': return {Tok::RParen, ")", line, col};
      case '[': return {Tok::LBracket, "[", line, col};
      case ']': return {Tok::RBracket, "]", line, col};
      case ',': return {Tok::Comma, ",", line, col};
      case ';': return {Tok::Semi, ";", line, col};
      case ':': return {Tok::Colon, ":", line, col};
      default:
        throw ParseError(line, col,
                         std::string("unexpected character '") + c + "'");
    }
  }

 private:
  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

// Recursive-descent word parser producing flat letter sequences without
// free reduction (rule files need the raw sides).
class WordParser {
 public:
  WordParser(Lexer& lex, Token& look, const Presentation& pres,
             const ParseOptions& opts)
      : lex_(lex), look_(look), pres_(pres), opts_(opts) {}

  // word := factor { factor }
  std::vector<Letter> parse_word() {
    std::vector<Letter> out = parse_factor();
    while (starts_atom(look_.kind)) {
      append_checked(out, parse_factor(), look_);
    }
    return out;
  }

  static bool starts_atom(Tok t) {
    return t == Tok::Ident || t == Tok::LParen || t == Tok::LBracket ||
           t == Tok::Int;
  }

 private:
  std::vector<Letter> parse_factor() {
    std::vector<Letter> atom = parse_atom();
    if (look_.kind == Tok::Caret) {
      Token caret = look_;
      bump();
      long long e = parse_sint();
      return raise_to(atom, e, caret);
    }
    return atom;
  }

  std::vector<Letter> parse_atom() {
    Token t = look_;
    switch (t.kind) {
      case Tok::Ident: {
        bump();
        auto idx = pres_.generator_index(t.text);
        if (!idx) {
          throw ParseError(t.line, t.col,
                           "unknown generator '" + t.text + "'");
        }
        return {Letter{*idx, +1}};
      }
      case Tok::LParen: {
        bump();
        std::vector<Letter> w = parse_word();
        expect(Tok::RParen, "')'");
        return w;
      }
      case Tok::LBracket: {  // [u, v] = u^-1 v^-1 u v
        bump();
        std::vector<Letter> u = parse_word();
        expect(Tok::Comma, "','");
        std::vector<Letter> v = parse_word();
        expect(Tok::RBracket, "']'");
        std::vector<Letter> out = invert_raw(u);
        append_checked(out, invert_raw(v), t);
        append_checked(out, u, t);
        append_checked(out, v, t);
        return out;
      }
      case Tok::Int: {
        // '1' denotes the identity.
        if (t.text == "1") {
          bump();
          return {};
        }
        throw ParseError(t.line, t.col,
                         "unexpected number '" + t.text +
                             "' (only '1' stands alone, as the identity)");
      }
      default:
        throw ParseError(t.line, t.col, "expected a word");
    }
  }

  long long parse_sint() {
    bool neg = false;
    if (look_.kind == Tok::Minus) {
      neg = true;
      bump();
    }
    if (look_.kind != Tok::Int) {
      throw ParseError(look_.line, look_.col, "expected an exponent");
    }
    Token t = look_;
    bump();
    errno = 0;
    long long v = 0;
    try {
      v = std::stoll(t.text);
    } catch (const std::exception&) {
      throw ParseError(t.line, t.col, "exponent out of range");
    }
    return neg ? -v : v;
  }

  std::vector<Letter> raise_to(const std::vector<Letter>& w, long long e,
                               const Token& at) {
    const std::vector<Letter> base = e < 0 ? invert_raw(w) : w;
    unsigned long long k =
        e < 0 ? -static_cast<unsigned long long>(e) : static_cast<unsigned long long>(e);
    if (k != 0 && base.size() > opts_.max_expanded_letters / k) {
      throw ParseError(at.line, at.col,
                       "word expansion exceeds the length cap of " +
                           std::to_string(opts_.max_expanded_letters) +
                           " letters");
    }
    std::vector<Letter> out;
    out.reserve(base.size() * k);
    for (unsigned long long i = 0; i < k; ++i) {
      out.insert(out.end(), base.begin(), base.end());
    }
    return out;
  }

  void append_checked(std::vector<Letter>& dst, const std::vector<Letter>& src,
                      const Token& at) {
    if (dst.size() + src.size() > opts_.max_expanded_letters) {
      throw ParseError(at.line, at.col,
                       "word expansion exceeds the length cap of " +
                           std::to_string(opts_.max_expanded_letters) +
                           " letters");
    }
    dst.insert(dst.end(), src.begin(), src.end());
  }

  static std::vector<Letter> invert_raw(const std::vector<Letter>& w) {
    std::vector<Letter> out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      out.push_back(inverse_of(*it));
    }
    return out;
  }

  void bump() { look_ = lex_.next(); }

  void expect(Tok kind, const char* what) {
    if (look_.kind != kind) {
      throw ParseError(look_.line, look_.col,
                       std::string("expected ") + what);
    }
    bump();
  }

  Lexer& lex_;
  Token& look_;
  const Presentation& pres_;
  const ParseOptions& opts_;
};

}  // namespace detail

// Parses the line-oriented presentation format:
//
//   generators: a, b
//   relators:
//   a^5
//   b^2 ; (a^-1 b)^4
//
// '#' starts a comment. Relators are separated by ';' or line breaks.
inline Presentation parse_presentation(std::string_view text,
                                       const ParseOptions& opts = {}) {
  detail::Lexer lex(text);
  detail::Token look = lex.next();

  auto bump = [&] { look = lex.next(); };
  auto skip_newlines = [&] {
    while (look.kind == detail::Tok::Newline) bump();
  };
  auto expect_keyword = [&](const char* kw) {
    if (look.kind != detail::Tok::Ident || look.text != kw) {
      throw ParseError(look.line, look.col,
                       std::string("expected '") + kw + ":'");
    }
    bump();
    if (look.kind != detail::Tok::Colon) {
      throw ParseError(look.line, look.col,
                       std::string("expected ':' after '") + kw + "'");
    }
    bump();
  };

  Presentation p;

  skip_newlines();
  expect_keyword("generators");
  if (look.kind == detail::Tok::Ident) {
    p.generator_names.push_back(look.text);
    bump();
    while (look.kind == detail::Tok::Comma) {
      bump();
      if (look.kind != detail::Tok::Ident) {
        throw ParseError(look.line, look.col, "expected a generator name");
      }
      p.generator_names.push_back(look.text);
      bump();
    }
  }
  if (look.kind != detail::Tok::Newline && look.kind != detail::Tok::End) {
    throw ParseError(look.line, look.col,
                     "expected end of the generator list");
  }
  try {
    p.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError(look.line, look.col, e.what());
  }

  skip_newlines();
  expect_keyword("relators");

  detail::WordParser wp(lex, look, p, opts);
  for (;;) {
    while (look.kind == detail::Tok::Newline ||
           look.kind == detail::Tok::Semi) {
      bump();
    }
    if (look.kind == detail::Tok::End) break;
    if (!detail::WordParser::starts_atom(look.kind)) {
      throw ParseError(look.line, look.col, "expected a relator");
    }
    p.relators.emplace_back(wp.parse_word());
    if (look.kind != detail::Tok::Newline &&
        look.kind != detail::Tok::Semi && look.kind != detail::Tok::End) {
      throw ParseError(look.line, look.col,
                       "expected ';' or end of line after a relator");
    }
  }
  return p;
}

inline Presentation parse_presentation(std::istream& in,
                                       const ParseOptions& opts = {}) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_presentation(std::string_view(ss.str()), opts);
}

// Parses a single word over the generators of `pres`, without free
// reduction (rule files need the raw letter sequence).
inline std::vector<Letter> parse_letters(std::string_view text,
                                         const Presentation& pres,
                                         const ParseOptions& opts = {}) {
  detail::Lexer lex(text);
  detail::Token look = lex.next();
  while (look.kind == detail::Tok::Newline) look = lex.next();
  if (look.kind == detail::Tok::End) {
    throw ParseError(look.line, look.col, "expected a word");
  }
  detail::WordParser wp(lex, look, pres, opts);
  std::vector<Letter> out = wp.parse_word();
  while (look.kind == detail::Tok::Newline) look = lex.next();
  if (look.kind != detail::Tok::End) {
    throw ParseError(look.line, look.col, "trailing input after the word");
  }
  return out;
}

inline Word parse_word(std::string_view text, const Presentation& pres,
                       const ParseOptions& opts = {}) {
  return Word(parse_letters(text, pres, opts));
}

// Serialization uses the word grammar with single spaces between factors
// and run-length exponents; the empty word prints as '1'.
inline std::string format_letters(const std::vector<Letter>& letters,
                                  const std::vector<std::string>& names) {
  if (letters.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < letters.size()) {
    std::size_t j = i;
    while (j < letters.size() && letters[j] == letters[i]) ++j;
    const long long run = static_cast<long long>(j - i) * letters[i].sign;
    if (!out.empty()) out += ' ';
    out += names.at(letters[i].gen);
    if (run != 1) {
      out += '^';
      out += std::to_string(run);
    }
    i = j;
  }
  return out;
}

inline std::string to_string(const Word& w, const Presentation& pres) {
  return format_letters(w.letters(), pres.generator_names);
}

inline std::string serialize_presentation(const Presentation& p) {
  std::string out = "generators:";
  for (std::size_t i = 0; i < p.generator_names.size(); ++i) {
    out += i == 0 ? " " : ", ";
    out += p.generator_names[i];
  }
  out += "\nrelators:\n";
  for (const Word& r : p.relators) {
    out += to_string(r, p);
    out += '\n';
  }
  return out;
}

}  // namespace grouphom
