// Copyright 2026 The Codemorph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "codemorph/lexer.h"

#include <algorithm>
#include <array>

#include "codemorph/errors.h"

namespace codemorph {

const std::vector<std::string_view>& Keywords() {
  static const std::vector<std::string_view> kKeywords = {
      "int",    "long",    "double", "boolean", "String", "void",
      "if",     "else",    "while",  "do",      "for",    "switch",
      "case",   "default", "break",  "continue", "return", "true",
      "false",  "null",    "try",    "catch",   "finally", "new"};
  return kKeywords;
}

bool IsKeyword(std::string_view word) {
  const auto& kw = Keywords();
  return std::find(kw.begin(), kw.end(), word) != kw.end();
}

std::string_view ToString(TokenKind kind) {
  switch (kind) {
    case TokenKind::kKeyword: return "keyword";
    case TokenKind::kIdentifier: return "identifier";
    case TokenKind::kLiteral: return "literal";
    case TokenKind::kOperator: return "operator";
    case TokenKind::kPunctuation: return "punctuation";
  }
  return "?";
}

namespace {

// Longest first so that maximal munch falls out of a linear scan.
constexpr std::array<std::string_view, 38> kOperators = {
    ">>>=", "<<=", ">>=", ">>>", "&&", "||", "==", "!=", "<=", ">=",
    "+=",   "-=",  "*=",  "/=",  "%=", "&=", "|=", "^=", "++", "--",
    "->",   "::",  "<<",  ">>",  "+",  "-",  "*",  "/",  "%",  "!",
    "<",    ">",   "=",   "?",   ":",  "&",  "|",  "^"};

bool IsIdentStart(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' ||
         c == '$';
}

bool IsDigit(char c) { return c >= '0' && c <= '9'; }

bool IsHexDigit(char c) {
  return IsDigit(c) || (c >= 'a' && c <= 'f') || (c >= 'A' && c <= 'F');
}

bool IsIdentPart(char c) { return IsIdentStart(c) || IsDigit(c); }

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> Run() {
    std::vector<Token> out;
    while (true) {
      SkipTrivia();
      if (pos_ >= src_.size()) break;
      out.push_back(Next());
    }
    return out;
  }

 private:
  char Peek(size_t ahead = 0) const {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }

  void Advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void SkipTrivia() {
    while (pos_ < src_.size()) {
      char c = Peek();
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f') {
        Advance();
      } else if (c == '/' && Peek(1) == '/') {
        while (pos_ < src_.size() && Peek() != '\n') Advance();
      } else if (c == '/' && Peek(1) == '*') {
        int line = line_, col = col_;
        Advance();
        Advance();
        while (!(Peek() == '*' && Peek(1) == '/')) {
          if (pos_ >= src_.size()) {
            throw LexError(line, col, "unterminated block comment");
          }
          Advance();
        }
        Advance();
        Advance();
      } else {
        break;
      }
    }
  }

  Token Make(TokenKind kind, size_t start, int line, int col) const {
    return Token{kind, std::string(src_.substr(start, pos_ - start)), line,
                 col};
  }

  Token Next() {
    const size_t start = pos_;
    const int line = line_, col = col_;
    const char c = Peek();
    if (IsIdentStart(c)) {
      while (IsIdentPart(Peek())) Advance();
      Token t = Make(TokenKind::kIdentifier, start, line, col);
      if (IsKeyword(t.lexeme)) t.kind = TokenKind::kKeyword;
      return t;
    }
    if (IsDigit(c) || (c == '.' && IsDigit(Peek(1)))) {
      LexNumber(line, col);
      return Make(TokenKind::kLiteral, start, line, col);
    }
    if (c == '"') {
      LexQuoted('"', line, col);
      return Make(TokenKind::kLiteral, start, line, col);
    }
    if (c == '\'') {
      LexQuoted('\'', line, col);
      return Make(TokenKind::kLiteral, start, line, col);
    }
    static constexpr std::string_view kPunct = "(){}[];,.@";
    if (kPunct.find(c) != std::string_view::npos) {
      Advance();
      return Make(TokenKind::kPunctuation, start, line, col);
    }
    for (std::string_view op : kOperators) {
      if (src_.substr(pos_, op.size()) == op) {
        for (size_t i = 0; i < op.size(); ++i) Advance();
        return Make(TokenKind::kOperator, start, line, col);
      }
    }
    std::string shown;
    if (static_cast<unsigned char>(c) < 0x20 ||
        static_cast<unsigned char>(c) >= 0x7f) {
      static constexpr char kHex[] = "0123456789abcdef";
      unsigned char u = static_cast<unsigned char>(c);
      shown = std::string("byte 0x") + kHex[u >> 4] + kHex[u & 15];
    } else {
      shown = std::string("'") + c + "'";
    }
    throw LexError(line, col, "unrecognized character " + shown);
  }

  void DigitRun(bool (*accept)(char)) {
    while (accept(Peek()) || (Peek() == '_' && accept(Peek(1)))) Advance();
  }

  void LexNumber(int line, int col) {
    if (Peek() == '0' && (Peek(1) == 'x' || Peek(1) == 'X')) {
      Advance();
      Advance();
      if (!IsHexDigit(Peek())) {
        throw LexError(line, col, "malformed hexadecimal literal");
      }
      DigitRun(IsHexDigit);
      if (Peek() == 'L' || Peek() == 'l') Advance();
    } else if (Peek() == '0' && (Peek(1) == 'b' || Peek(1) == 'B')) {
      Advance();
      Advance();
      auto is_bin = [](char ch) { return ch == '0' || ch == '1'; };
      if (!is_bin(Peek())) {
        throw LexError(line, col, "malformed binary literal");
      }
      DigitRun(is_bin);
      if (Peek() == 'L' || Peek() == 'l') Advance();
    } else {
      bool is_double = false;
      DigitRun(IsDigit);
      if (Peek() == '.' && IsDigit(Peek(1))) {
        is_double = true;
        Advance();
        DigitRun(IsDigit);
      } else if (Peek() == '.' && !IsIdentStart(Peek(1))) {
        // "1." is a valid double literal.
        is_double = true;
        Advance();
      }
      if (Peek() == 'e' || Peek() == 'E') {
        is_double = true;
        Advance();
        if (Peek() == '+' || Peek() == '-') Advance();
        if (!IsDigit(Peek())) {
          throw LexError(line, col, "malformed exponent");
        }
        DigitRun(IsDigit);
      }
      char s = Peek();
      if (s == 'd' || s == 'D' || s == 'f' || s == 'F') {
        Advance();
      } else if ((s == 'L' || s == 'l') && !is_double) {
        Advance();
      }
    }
    if (IsIdentPart(Peek()) || Peek() == '.') {
      throw LexError(line, col, "malformed numeric literal");
    }
  }

  void LexQuoted(char quote, int line, int col) {
    Advance();
    while (true) {
      char c = Peek();
      if (pos_ >= src_.size() || c == '\n') {
        throw LexError(line, col,
                       quote == '"' ? "unterminated string literal"
                                    : "unterminated character literal");
      }
      if (c == '\\') {
        Advance();
        char e = Peek();
        static constexpr std::string_view kEscapes = "btnfr\"'\\0";
        if (pos_ >= src_.size() || kEscapes.find(e) == std::string_view::npos) {
          throw LexError(line_, col_, "invalid escape sequence");
        }
        Advance();
        continue;
      }
      Advance();
      if (c == quote) break;
    }
  }

  std::string_view src_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

}  // namespace

std::vector<Token> Tokenize(std::string_view source) {
  return Lexer(source).Run();
}

}  // namespace codemorph
