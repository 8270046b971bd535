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

#include "codemorph/ast.h"

#include <algorithm>
#include <set>
#include <utility>

namespace codemorph {

Expr Expr::Literal(ExprKind kind, std::string lexeme) {
  Expr e;
  e.kind = kind;
  e.text = std::move(lexeme);
  return e;
}

Expr Expr::Var(std::string name) {
  Expr e;
  e.kind = ExprKind::kVarRef;
  e.text = std::move(name);
  return e;
}

Expr Expr::Unary(std::string op, Expr operand) {
  Expr e;
  e.kind = ExprKind::kUnary;
  e.text = std::move(op);
  e.children.push_back(std::move(operand));
  return e;
}

Expr Expr::Binary(std::string op, Expr lhs, Expr rhs) {
  Expr e;
  e.kind = ExprKind::kBinary;
  e.text = std::move(op);
  e.children.push_back(std::move(lhs));
  e.children.push_back(std::move(rhs));
  return e;
}

Expr Expr::Call(std::string name, std::vector<Expr> args,
                std::string qualifier) {
  Expr e;
  e.kind = ExprKind::kCall;
  e.text = std::move(name);
  e.qualifier = std::move(qualifier);
  e.children = std::move(args);
  return e;
}

Expr Expr::Ternary(Expr cond, Expr then_expr, Expr else_expr) {
  Expr e;
  e.kind = ExprKind::kTernary;
  e.children.push_back(std::move(cond));
  e.children.push_back(std::move(then_expr));
  e.children.push_back(std::move(else_expr));
  return e;
}

Stmt Stmt::Block(std::vector<Stmt> stmts) {
  Stmt s;
  s.kind = StmtKind::kBlock;
  s.body = std::move(stmts);
  return s;
}

Stmt Stmt::VarDecl(std::string type, std::string name,
                   std::optional<Expr> init) {
  Stmt s;
  s.kind = StmtKind::kVarDecl;
  s.type = std::move(type);
  s.name = std::move(name);
  s.expr = std::move(init);
  return s;
}

Stmt Stmt::Assign(std::string target, std::string op,
                  std::optional<Expr> value) {
  Stmt s;
  s.kind = StmtKind::kAssign;
  s.name = std::move(target);
  s.op = std::move(op);
  s.expr = std::move(value);
  return s;
}

Stmt Stmt::ExprStmt(Expr call) {
  Stmt s;
  s.kind = StmtKind::kExprStmt;
  s.expr = std::move(call);
  return s;
}

Stmt Stmt::If(Expr cond, Stmt then_stmt, std::optional<Stmt> else_stmt) {
  Stmt s;
  s.kind = StmtKind::kIf;
  s.expr = std::move(cond);
  s.body.push_back(std::move(then_stmt));
  if (else_stmt) s.else_body.push_back(std::move(*else_stmt));
  return s;
}

Stmt Stmt::While(Expr cond, Stmt loop_body) {
  Stmt s;
  s.kind = StmtKind::kWhile;
  s.expr = std::move(cond);
  s.body.push_back(std::move(loop_body));
  return s;
}

Stmt Stmt::Return(std::optional<Expr> value) {
  Stmt s;
  s.kind = StmtKind::kReturn;
  s.expr = std::move(value);
  return s;
}

Stmt Stmt::Jump(StmtKind kind) {
  Stmt s;
  s.kind = kind;
  return s;
}

namespace {

// Shared preorder walk. The callbacks receive every node in id order.
template <typename S, typename E, typename C, typename K, typename P>
struct Walker {
  const std::function<void(E&)>& on_expr;
  const std::function<void(S&)>& on_stmt;
  const std::function<void(C&)>& on_case;
  const std::function<void(K&)>& on_catch;

  void WalkExpr(E& e) const {
    on_expr(e);
    for (auto& c : e.children) WalkExpr(c);
  }

  void WalkStmt(S& s) const {
    on_stmt(s);
    switch (s.kind) {
      case StmtKind::kFor:
        for (auto& i : s.init) WalkStmt(i);
        if (s.expr) WalkExpr(*s.expr);
        for (auto& u : s.update) WalkStmt(u);
        for (auto& b : s.body) WalkStmt(b);
        return;
      case StmtKind::kDoWhile:
        for (auto& b : s.body) WalkStmt(b);
        if (s.expr) WalkExpr(*s.expr);
        return;
      case StmtKind::kSwitch:
        if (s.expr) WalkExpr(*s.expr);
        for (auto& c : s.cases) {
          on_case(c);
          if (c.label) WalkExpr(*c.label);
          for (auto& b : c.body) WalkStmt(b);
        }
        return;
      case StmtKind::kTry:
        for (auto& b : s.body) WalkStmt(b);
        for (auto& c : s.catches) {
          on_catch(c);
          for (auto& b : c.block) WalkStmt(b);
        }
        for (auto& b : s.else_body) WalkStmt(b);
        return;
      default:
        if (s.expr) WalkExpr(*s.expr);
        for (auto& b : s.body) WalkStmt(b);
        for (auto& b : s.else_body) WalkStmt(b);
        return;
    }
  }
};

template <typename E>
void PreorderExprs(E& e, const std::function<void(E&)>& fn) {
  fn(e);
  for (auto& c : e.children) PreorderExprs<E>(c, fn);
}

}  // namespace

int AssignNodeIds(MethodAst& method) {
  int next = 0;
  method.id = next++;
  for (auto& p : method.params) p.id = next++;
  std::function<void(Expr&)> on_expr = [&](Expr& e) { e.id = next++; };
  std::function<void(Stmt&)> on_stmt = [&](Stmt& s) { s.id = next++; };
  std::function<void(SwitchCase&)> on_case = [&](SwitchCase& c) {
    c.id = next++;
  };
  std::function<void(CatchClause&)> on_catch = [&](CatchClause& c) {
    c.id = next++;
  };
  Walker<Stmt, Expr, SwitchCase, CatchClause, void> w{on_expr, on_stmt,
                                                       on_case, on_catch};
  w.WalkStmt(method.body);
  return next;
}

namespace {

template <typename Fn>
void WalkAllIds(const MethodAst& method, Fn&& fn) {
  fn(method.id, "Method");
  for (const auto& p : method.params) fn(p.id, "Param");
  std::function<void(const Expr&)> on_expr = [&](const Expr& e) {
    fn(e.id, ToString(e.kind));
  };
  std::function<void(const Stmt&)> on_stmt = [&](const Stmt& s) {
    fn(s.id, ToString(s.kind));
  };
  std::function<void(const SwitchCase&)> on_case = [&](const SwitchCase& c) {
    fn(c.id, c.is_default() ? "Default" : "Case");
  };
  std::function<void(const CatchClause&)> on_catch =
      [&](const CatchClause& c) { fn(c.id, "Catch"); };
  Walker<const Stmt, const Expr, const SwitchCase, const CatchClause, void> w{
      on_expr, on_stmt, on_case, on_catch};
  w.WalkStmt(method.body);
}

}  // namespace

int MaxNodeId(const MethodAst& method) {
  int max_id = -1;
  WalkAllIds(method,
             [&](int id, std::string_view) { max_id = std::max(max_id, id); });
  return max_id;
}

int CountNodes(const MethodAst& method) {
  int n = 0;
  WalkAllIds(method, [&](int, std::string_view) { ++n; });
  return n;
}

std::vector<std::string> NodeKindSequence(const MethodAst& method) {
  std::vector<std::string> out;
  WalkAllIds(method, [&](int, std::string_view kind) {
    out.emplace_back(kind);
  });
  return out;
}

bool StructurallyEqual(const Expr& a, const Expr& b) {
  if (a.kind != b.kind || a.text != b.text || a.qualifier != b.qualifier ||
      a.children.size() != b.children.size()) {
    return false;
  }
  for (size_t i = 0; i < a.children.size(); ++i) {
    if (!StructurallyEqual(a.children[i], b.children[i])) return false;
  }
  return true;
}

namespace {

bool EqualOptExpr(const std::optional<Expr>& a, const std::optional<Expr>& b) {
  if (a.has_value() != b.has_value()) return false;
  return !a || StructurallyEqual(*a, *b);
}

bool EqualStmts(const std::vector<Stmt>& a, const std::vector<Stmt>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (!StructurallyEqual(a[i], b[i])) return false;
  }
  return true;
}

}  // namespace

bool StructurallyEqual(const Stmt& a, const Stmt& b) {
  if (a.kind != b.kind || a.type != b.type || a.name != b.name ||
      a.op != b.op || !EqualOptExpr(a.expr, b.expr) ||
      !EqualStmts(a.body, b.body) || !EqualStmts(a.else_body, b.else_body) ||
      !EqualStmts(a.init, b.init) || !EqualStmts(a.update, b.update) ||
      a.cases.size() != b.cases.size() ||
      a.catches.size() != b.catches.size()) {
    return false;
  }
  for (size_t i = 0; i < a.cases.size(); ++i) {
    if (!EqualOptExpr(a.cases[i].label, b.cases[i].label) ||
        !EqualStmts(a.cases[i].body, b.cases[i].body)) {
      return false;
    }
  }
  for (size_t i = 0; i < a.catches.size(); ++i) {
    if (a.catches[i].type != b.catches[i].type ||
        a.catches[i].name != b.catches[i].name ||
        !EqualStmts(a.catches[i].block, b.catches[i].block)) {
      return false;
    }
  }
  return true;
}

bool StructurallyEqual(const MethodAst& a, const MethodAst& b) {
  if (a.return_type != b.return_type || a.name != b.name ||
      a.params.size() != b.params.size()) {
    return false;
  }
  for (size_t i = 0; i < a.params.size(); ++i) {
    if (a.params[i].type != b.params[i].type ||
        a.params[i].name != b.params[i].name) {
      return false;
    }
  }
  return StructurallyEqual(a.body, b.body);
}

std::string_view ToString(ExprKind kind) {
  switch (kind) {
    case ExprKind::kIntLit: return "IntLit";
    case ExprKind::kLongLit: return "LongLit";
    case ExprKind::kDoubleLit: return "DoubleLit";
    case ExprKind::kBoolLit: return "BoolLit";
    case ExprKind::kStringLit: return "StringLit";
    case ExprKind::kNullLit: return "NullLit";
    case ExprKind::kVarRef: return "VarRef";
    case ExprKind::kUnary: return "Unary";
    case ExprKind::kBinary: return "Binary";
    case ExprKind::kCall: return "Call";
    case ExprKind::kTernary: return "Ternary";
  }
  return "?";
}

std::string_view ToString(StmtKind kind) {
  switch (kind) {
    case StmtKind::kVarDecl: return "VarDecl";
    case StmtKind::kAssign: return "Assign";
    case StmtKind::kExprStmt: return "ExprStmt";
    case StmtKind::kIf: return "If";
    case StmtKind::kWhile: return "While";
    case StmtKind::kDoWhile: return "DoWhile";
    case StmtKind::kFor: return "For";
    case StmtKind::kSwitch: return "Switch";
    case StmtKind::kReturn: return "Return";
    case StmtKind::kBreak: return "Break";
    case StmtKind::kContinue: return "Continue";
    case StmtKind::kBlock: return "Block";
    case StmtKind::kTry: return "Try";
  }
  return "?";
}

std::vector<Stmt*> ChildStmts(Stmt& stmt) {
  std::vector<Stmt*> out;
  auto add = [&](std::vector<Stmt>& v) {
    for (auto& s : v) out.push_back(&s);
  };
  add(stmt.init);
  add(stmt.update);
  add(stmt.body);
  for (auto& c : stmt.cases) add(c.body);
  for (auto& c : stmt.catches) add(c.block);
  add(stmt.else_body);
  return out;
}

std::vector<const Stmt*> ChildStmts(const Stmt& stmt) {
  auto mut = ChildStmts(const_cast<Stmt&>(stmt));
  return {mut.begin(), mut.end()};
}

void VisitStmts(Stmt& stmt, const std::function<void(Stmt&)>& fn) {
  fn(stmt);
  for (Stmt* child : ChildStmts(stmt)) VisitStmts(*child, fn);
}

void VisitStmts(const Stmt& stmt,
                const std::function<void(const Stmt&)>& fn) {
  fn(stmt);
  for (const Stmt* child : ChildStmts(stmt)) VisitStmts(*child, fn);
}

void VisitExprs(Expr& expr, const std::function<void(Expr&)>& fn) {
  PreorderExprs<Expr>(expr, fn);
}

void VisitExprs(const Expr& expr,
                const std::function<void(const Expr&)>& fn) {
  PreorderExprs<const Expr>(expr, fn);
}

void ForOwnExprs(Stmt& stmt, const std::function<void(Expr&)>& fn) {
  if (stmt.expr) fn(*stmt.expr);
  for (auto& c : stmt.cases) {
    if (c.label) fn(*c.label);
  }
}

void ForOwnExprs(const Stmt& stmt,
                 const std::function<void(const Expr&)>& fn) {
  if (stmt.expr) fn(*stmt.expr);
  for (const auto& c : stmt.cases) {
    if (c.label) fn(*c.label);
  }
}

void VisitAllExprs(const Stmt& stmt,
                   const std::function<void(const Expr&)>& fn) {
  VisitStmts(stmt, [&](const Stmt& s) {
    ForOwnExprs(s, [&](const Expr& e) { VisitExprs(e, fn); });
  });
}

Stmt* FindStmt(Stmt& root, int id) {
  if (root.id == id) return &root;
  for (Stmt* child : ChildStmts(root)) {
    if (Stmt* found = FindStmt(*child, id)) return found;
  }
  return nullptr;
}

const Stmt* FindStmt(const Stmt& root, int id) {
  return FindStmt(const_cast<Stmt&>(root), id);
}

Expr* FindExpr(Stmt& root, int id) {
  Expr* found = nullptr;
  VisitStmts(root, [&](Stmt& s) {
    if (found) return;
    ForOwnExprs(s, [&](Expr& e) {
      VisitExprs(e, [&](Expr& x) {
        if (!found && x.id == id) found = &x;
      });
    });
  });
  return found;
}

std::vector<std::string> AllIdentifiers(const MethodAst& method) {
  std::set<std::string> names;
  names.insert(method.name);
  for (const auto& p : method.params) names.insert(p.name);
  VisitStmts(method.body, [&](const Stmt& s) {
    if (s.kind == StmtKind::kVarDecl || s.kind == StmtKind::kAssign) {
      names.insert(s.name);
    }
    for (const auto& c : s.catches) names.insert(c.name);
  });
  VisitAllExprs(method.body, [&](const Expr& e) {
    if (e.kind == ExprKind::kVarRef || e.kind == ExprKind::kCall) {
      names.insert(e.text);
    }
    if (!e.qualifier.empty()) {
      size_t start = 0;
      while (start <= e.qualifier.size()) {
        size_t dot = e.qualifier.find('.', start);
        if (dot == std::string::npos) dot = e.qualifier.size();
        names.insert(e.qualifier.substr(start, dot - start));
        start = dot + 1;
      }
    }
  });
  return {names.begin(), names.end()};
}

std::string FreshName(std::string_view prefix,
                      const std::vector<std::string>& taken) {
  for (int k = 0;; ++k) {
    std::string candidate = std::string(prefix) + std::to_string(k);
    if (std::find(taken.begin(), taken.end(), candidate) == taken.end()) {
      return candidate;
    }
  }
}

}  // namespace codemorph
