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

#ifndef CODEMORPH_PARSER_H_
#define CODEMORPH_PARSER_H_

#include <string>
#include <string_view>
#include <vector>

#include "codemorph/ast.h"

namespace codemorph {

// Parses exactly one method declaration. Modifiers, annotations and a
// `throws` clause are accepted and discarded. Node ids are assigned in
// preorder.
//
// Throws LexError, ParseError, or UnsupportedConstruct for Java features
// outside the subset.
MethodAst ParseMethod(std::string_view source);

struct Diagnostic {
  int line = 0;
  int col = 0;
  std::string method;  // empty when not attributable to a method
  std::string message;
};

struct ExtractResult {
  std::vector<MethodAst> methods;
  std::vector<Diagnostic> diagnostics;
};

// Pulls every method out of a compilation unit (or a bare sequence of
// methods). Methods that fail to parse are reported in |diagnostics| and
// skipped; nothing here throws.
ExtractResult ExtractMethods(std::string_view source);

}  // namespace codemorph

#endif  // CODEMORPH_PARSER_H_
