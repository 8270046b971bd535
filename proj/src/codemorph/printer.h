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

#ifndef CODEMORPH_PRINTER_H_
#define CODEMORPH_PRINTER_H_

#include <string>

#include "codemorph/ast.h"

namespace codemorph {

// Canonical rendering: 4-space indentation, one statement per line, no
// trailing newline. Parentheses are emitted only where precedence needs
// them, so printing is idempotent through a parse.
std::string PrintMethod(const MethodAst& method);

std::string PrintExpr(const Expr& expr);

// Renders a statement at indentation depth |depth| (no trailing newline).
std::string PrintStmt(const Stmt& stmt, int depth = 0);

}  // namespace codemorph

#endif  // CODEMORPH_PRINTER_H_
