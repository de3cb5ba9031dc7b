// Internal tokenizer shared by the expression parser and the job-file
// loader. Not installed; include only from src/.
#pragma once

#include <cctype>
#include <sstream>
#include <string>
#include <string_view>

#include "cremona/errors.hpp"
#include "cremona/parse.hpp"

namespace cremona::detail {

enum class Tok {
  End,
  Int,
  Var,
  Name,
  Plus,
  Minus,
  Star,
  Slash,
  Caret,
  LParen,
  RParen,
  LBracket,
  RBracket,
  Colon,
  Comma,
  Semicolon,
  Equals,
};

inline const char* tok_name(Tok t) {
  switch (t) {
    case Tok::End: return "end of input";
    case Tok::Int: return "integer";
    case Tok::Var: return "variable";
    case Tok::Name: return "name";
    case Tok::Plus: return "'+'";
    case Tok::Minus: return "'-'";
    case Tok::Star: return "'*'";
    case Tok::Slash: return "'/'";
    case Tok::Caret: return "'^'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::Colon: return "':'";
    case Tok::Comma: return "','";
    case Tok::Semicolon: return "';'";
    case Tok::Equals: return "'='";
  }
  return "?";
}

struct Token {
  Tok kind = Tok::End;
  std::string text;
  int line = 1;
  int column = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }
  Token take() {
    Token t = current_;
    advance();
    return t;
  }

  [[noreturn]] void fail(const std::string& expected) const {
    std::ostringstream os;
    os << "syntax error at line " << current_.line << ", column " << current_.column
       << ": expected " << expected << ", found " << tok_name(current_.kind);
    if (!current_.text.empty() && current_.kind != Tok::End) os << " '" << current_.text << "'";
    throw ParseError(os.str(), current_.line, current_.column);
  }

  Token expect(Tok kind, const char* what) {
    if (current_.kind != kind) fail(what);
    return take();
  }

 private:
  void advance() {
    skip_space();
    current_.line = line_;
    current_.column = column_;
    if (pos_ >= text_.size()) {
      current_.kind = Tok::End;
      current_.text.clear();
      return;
    }
    char c = text_[pos_];
    switch (c) {
      case '+': single(Tok::Plus, c); return;
      case '-': single(Tok::Minus, c); return;
      case '*': single(Tok::Star, c); return;
      case '/': single(Tok::Slash, c); return;
      case '^': single(Tok::Caret, c); return;
      case '(': single(Tok::LParen, c); return;
      case ')': single(Tok::RParen, c); return;
      case '[': single(Tok::LBracket, c); return;
      case ']': single(Tok::RBracket, c); return;
      case ':': single(Tok::Colon, c); return;
      case ',': single(Tok::Comma, c); return;
      case ';': single(Tok::Semicolon, c); return;
      case '=': single(Tok::Equals, c); return;
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) bump();
      current_.kind = Tok::Int;
      current_.text = std::string(text_.substr(start, pos_ - start));
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        bump();
      current_.text = std::string(text_.substr(start, pos_ - start));
      bool is_var = current_.text.size() == 2 && current_.text[0] == 'x' &&
                    std::isdigit(static_cast<unsigned char>(current_.text[1]));
      current_.kind = is_var ? Tok::Var : Tok::Name;
      return;
    }
    std::ostringstream os;
    os << "unexpected character (byte " << static_cast<int>(static_cast<unsigned char>(c))
       << ") at line " << line_ << ", column " << column_;
    throw ParseError(os.str(), line_, column_);
  }

  void single(Tok kind, char c) {
    current_.kind = kind;
    current_.text = std::string(1, c);
    bump();
  }

  void skip_space() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') bump();
      } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        bump();
      } else {
        break;
      }
    }
  }

  void bump() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
  Token current_;
};

// Implemented in parse.cpp; consumes one expression from the stream.
Expr parse_expression(Lexer& lex);

}  // namespace cremona::detail
