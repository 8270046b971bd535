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

#ifndef CODEMORPH_AST_H_
#define CODEMORPH_AST_H_

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace codemorph {

enum class ExprKind {
  kIntLit,
  kLongLit,
  kDoubleLit,
  kBoolLit,
  kStringLit,
  kNullLit,
  kVarRef,
  kUnary,
  kBinary,
  kCall,
  kTernary,
};

// Expression node. The meaning of |text| depends on |kind|:
//   literals  - the source lexeme (string literals keep their quotes)
//   kVarRef   - the identifier
//   kUnary    - "!" or "-"
//   kBinary   - the operator
//   kCall     - the method name (last segment of a qualified call)
//   kTernary  - unused
// |qualifier| is only set on calls of the form `a.b.name(...)` and holds
// "a.b". Children are operands in source order.
struct Expr {
  ExprKind kind = ExprKind::kIntLit;
  std::string text;
  std::string qualifier;
  std::vector<Expr> children;
  int id = -1;

  static Expr Literal(ExprKind kind, std::string lexeme);
  static Expr Var(std::string name);
  static Expr Unary(std::string op, Expr operand);
  static Expr Binary(std::string op, Expr lhs, Expr rhs);
  static Expr Call(std::string name, std::vector<Expr> args,
                   std::string qualifier = "");
  static Expr Ternary(Expr cond, Expr then_expr, Expr else_expr);
};

enum class StmtKind {
  kVarDecl,
  kAssign,
  kExprStmt,
  kIf,
  kWhile,
  kDoWhile,
  kFor,
  kSwitch,
  kReturn,
  kBreak,
  kContinue,
  kBlock,
  kTry,
};

struct Stmt;

// One `case <label>:` or `default:` clause with the statements that follow
// it up to the next clause. Clauses with empty bodies fall through.
struct SwitchCase {
  std::optional<Expr> label;  // nullopt for `default`
  std::vector<Stmt> body;
  int id = -1;

  bool is_default() const { return !label.has_value(); }
};

struct CatchClause {
  std::string type;
  std::string name;
  std::vector<Stmt> block;  // exactly one kBlock statement
  int id = -1;
};

// Statement node. Field usage by kind:
//   kVarDecl   - type, name, expr = optional initializer
//   kAssign    - name = target, op in {=,+=,-=,*=,/=,%=,++,--}, expr = value
//                (absent for ++/--)
//   kExprStmt  - expr = the call
//   kIf        - expr = condition, body[0] = then, else_body[0] = else
//   kWhile     - expr = condition, body[0] = loop body
//   kDoWhile   - expr = condition, body[0] = loop body
//   kFor       - init (0/1 VarDecl or Assign), expr = optional condition,
//                update (0/1 Assign), body[0] = loop body
//   kSwitch    - expr = scrutinee, cases
//   kReturn    - expr = optional value
//   kBlock     - body = statements
//   kTry       - body[0] = try block, catches, else_body[0] = finally block
struct Stmt {
  StmtKind kind = StmtKind::kBlock;
  std::string type;
  std::string name;
  std::string op;
  std::optional<Expr> expr;
  std::vector<Stmt> body;
  std::vector<Stmt> else_body;
  std::vector<Stmt> init;
  std::vector<Stmt> update;
  std::vector<SwitchCase> cases;
  std::vector<CatchClause> catches;
  int id = -1;

  static Stmt Block(std::vector<Stmt> stmts);
  static Stmt VarDecl(std::string type, std::string name,
                      std::optional<Expr> init);
  static Stmt Assign(std::string target, std::string op,
                     std::optional<Expr> value);
  static Stmt ExprStmt(Expr call);
  static Stmt If(Expr cond, Stmt then_stmt, std::optional<Stmt> else_stmt);
  static Stmt While(Expr cond, Stmt loop_body);
  static Stmt Return(std::optional<Expr> value);
  static Stmt Jump(StmtKind kind);
};

struct Param {
  std::string type;
  std::string name;
  int id = -1;
};

// One method declaration. Node ids are assigned in preorder: the method
// itself is 0, then parameters, then the body subtree.
struct MethodAst {
  std::string return_type;
  std::string name;
  std::vector<Param> params;
  Stmt body;  // always kBlock
  int id = 0;
};

// Renumbers every node of |method| in preorder so ids form 0..N-1.
// Returns N.
int AssignNodeIds(MethodAst& method);

// Largest node id present, or -1 for an empty tree.
int MaxNodeId(const MethodAst& method);

int CountNodes(const MethodAst& method);

// Structural equality ignoring node ids.
bool StructurallyEqual(const Expr& a, const Expr& b);
bool StructurallyEqual(const Stmt& a, const Stmt& b);
bool StructurallyEqual(const MethodAst& a, const MethodAst& b);

// Preorder sequence of node-kind tags, e.g. "Method", "Param", "Block",
// "VarDecl", "Binary". Identifier spellings are excluded.
std::vector<std::string> NodeKindSequence(const MethodAst& method);

std::string_view ToString(ExprKind kind);
std::string_view ToString(StmtKind kind);

// Preorder traversals. Visitors may mutate nodes in place but must not
// restructure the containers being walked.
void VisitStmts(Stmt& stmt, const std::function<void(Stmt&)>& fn);
void VisitStmts(const Stmt& stmt, const std::function<void(const Stmt&)>& fn);
void VisitExprs(Expr& expr, const std::function<void(Expr&)>& fn);
void VisitExprs(const Expr& expr, const std::function<void(const Expr&)>& fn);

// Visits every expression directly owned by |stmt| (not those of nested
// statements).
void ForOwnExprs(Stmt& stmt, const std::function<void(Expr&)>& fn);
void ForOwnExprs(const Stmt& stmt, const std::function<void(const Expr&)>& fn);

// Visits every expression in the subtree rooted at |stmt|.
void VisitAllExprs(const Stmt& stmt,
                   const std::function<void(const Expr&)>& fn);

// Direct child statements of |stmt| in source order.
std::vector<const Stmt*> ChildStmts(const Stmt& stmt);
std::vector<Stmt*> ChildStmts(Stmt& stmt);

Stmt* FindStmt(Stmt& root, int id);
const Stmt* FindStmt(const Stmt& root, int id);
Expr* FindExpr(Stmt& root, int id);

// Every identifier spelling that occurs in the method: parameter and local
// names, variable references, call names and qualifier segments.
std::vector<std::string> AllIdentifiers(const MethodAst& method);

// Smallest "<prefix>K" (K = 0, 1, ...) that is not among |taken|.
std::string FreshName(std::string_view prefix,
                      const std::vector<std::string>& taken);

}  // namespace codemorph

#endif  // CODEMORPH_AST_H_
