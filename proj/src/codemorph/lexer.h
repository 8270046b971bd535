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

#ifndef CODEMORPH_LEXER_H_
#define CODEMORPH_LEXER_H_

#include <string>
#include <string_view>
#include <vector>

namespace codemorph {

enum class TokenKind {
  kKeyword,
  kIdentifier,
  kLiteral,
  kOperator,
  kPunctuation,
};

struct Token {
  TokenKind kind;
  std::string lexeme;
  int line;  // 1-based
  int col;   // 1-based, in bytes

  bool Is(TokenKind k, std::string_view text) const {
    return kind == k && lexeme == text;
  }
};

// The reserved words of the supported subset. Other Java keywords lex as
// identifiers and are rejected by the parser where they matter.
const std::vector<std::string_view>& Keywords();
bool IsKeyword(std::string_view word);

// Splits |source| into tokens, dropping whitespace and comments. Throws
// LexError on an unrecognized character or malformed literal.
std::vector<Token> Tokenize(std::string_view source);

std::string_view ToString(TokenKind kind);

}  // namespace codemorph

#endif  // CODEMORPH_LEXER_H_
