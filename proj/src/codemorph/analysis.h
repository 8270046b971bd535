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

#ifndef CODEMORPH_ANALYSIS_H_
#define CODEMORPH_ANALYSIS_H_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "codemorph/ast.h"
#include "codemorph/transform_kind.h"

namespace codemorph {

enum class BindingKind { kParam, kLocal, kCatch, kFree };

// A declared name. |id| is the declaring node's id (Param, VarDecl, or
// CatchClause). Free names (fields, externals) get negative ids.
struct Binding {
  int id = 0;
  std::string name;
  std::string type;  // empty for free names
  BindingKind kind = BindingKind::kLocal;
};

// Name resolution result for one method.
//
// Scoping follows Java: parameters share a scope with the top level of the
// body; each block, loop body, for header, switch body and catch clause opens
// a scope; a local is visible from the statement after its declaration.
// Inner declarations may shadow outer ones.
class SymbolTable {
 public:
  const std::vector<Binding>& bindings() const { return bindings_; }
  const Binding* Find(int binding_id) const;

  // The binding referenced by a use node: a VarRef expression, an Assign
  // statement (its target), or a qualified Call whose qualifier head names a
  // local.
  std::optional<int> BindingOfUse(int node_id) const;
  const std::vector<int>& UsesOf(int binding_id) const;

  bool has_free_names() const;

  // Populated by ResolveScopes.
  void AddBinding(Binding b);
  void AddUse(int node_id, int binding_id);

 private:
  std::vector<Binding> bindings_;
  std::map<int, size_t> index_;
  std::map<int, int> use_to_binding_;
  std::map<int, std::vector<int>> uses_;
};

// Throws DuplicateDeclaration when two declarations in one scope share a
// name.
SymbolTable ResolveScopes(const MethodAst& method);

struct ReadWriteSets {
  std::set<int> reads;
  std::set<int> writes;
  bool calls = false;
  // Also tracked so that statement reordering stays control-flow safe.
  bool jumps = false;   // a return, or a break/continue leaving the statement
  bool opaque = false;  // contains try
  std::set<std::string> declared_names;
  std::set<std::string> referenced_names;
};

ReadWriteSets ComputeDefUse(const Stmt& stmt, const SymbolTable& symbols);

// Whether adjacent statements |a| and |b| of one block may be swapped.
bool Independent(const Stmt& a, const Stmt& b, const SymbolTable& symbols);

struct Site {
  TransformKind kind = TransformKind::kVariableRenaming;
  int anchor = -1;
  // VariableRenaming, BooleanExchange: {binding id}
  // PermuteStatement: {first stmt id, second stmt id}
  // Others: {}
  std::vector<int> payload;

  std::string Summary(const MethodAst& method,
                      const SymbolTable& symbols) const;
  bool operator==(const Site&) const = default;
};

// Sites sorted by anchor (preorder), then payload.
std::vector<Site> EnumerateSites(const MethodAst& method,
                                 const SymbolTable& symbols,
                                 TransformKind kind);
std::vector<Site> EnumerateSites(const MethodAst& method, TransformKind kind);

// Eligibility predicates behind EnumerateSites, exposed for the rewrites'
// defensive re-checks.
bool BooleanExchangeEligible(const MethodAst& method,
                             const SymbolTable& symbols, int binding_id);
bool LoopExchangeEligible(const Stmt& loop);
bool SwitchToIfEligible(const Stmt& sw, const SymbolTable& symbols);

// Executable statements: each simple statement and each compound header
// counts once; bare blocks do not.
int CountStatements(const MethodAst& method);

// Best-effort static type ("int", "long", "double", "boolean", "String", or
// a class name). Empty when unknown (calls, free names).
std::string InferType(const Expr& expr, const SymbolTable& symbols);

}  // namespace codemorph

#endif  // CODEMORPH_ANALYSIS_H_
