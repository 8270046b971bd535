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

#include "codemorph/analysis.h"

#include <algorithm>
#include <cctype>
#include <utility>

#include "codemorph/errors.h"

namespace codemorph {

std::string_view ToString(TransformKind kind) {
  switch (kind) {
    case TransformKind::kVariableRenaming: return "VariableRenaming";
    case TransformKind::kBooleanExchange: return "BooleanExchange";
    case TransformKind::kLoopExchange: return "LoopExchange";
    case TransformKind::kSwitchToIf: return "SwitchToIf";
    case TransformKind::kPermuteStatement: return "PermuteStatement";
    case TransformKind::kUnusedStatement: return "UnusedStatement";
  }
  return "?";
}

std::optional<TransformKind> ParseTransformKind(std::string_view text) {
  std::string folded;
  for (char c : text) {
    if (c == '-' || c == '_') continue;
    folded += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  for (TransformKind k : kAllTransformKinds) {
    std::string name;
    for (char c : ToString(k)) {
      name += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    if (name == folded) return k;
  }
  return std::nullopt;
}

// --- SymbolTable -----------------------------------------------------------

const Binding* SymbolTable::Find(int binding_id) const {
  auto it = index_.find(binding_id);
  return it == index_.end() ? nullptr : &bindings_[it->second];
}

std::optional<int> SymbolTable::BindingOfUse(int node_id) const {
  auto it = use_to_binding_.find(node_id);
  if (it == use_to_binding_.end()) return std::nullopt;
  return it->second;
}

const std::vector<int>& SymbolTable::UsesOf(int binding_id) const {
  static const std::vector<int> kNone;
  auto it = uses_.find(binding_id);
  return it == uses_.end() ? kNone : it->second;
}

bool SymbolTable::has_free_names() const {
  return std::any_of(bindings_.begin(), bindings_.end(), [](const Binding& b) {
    return b.kind == BindingKind::kFree;
  });
}

void SymbolTable::AddBinding(Binding b) {
  index_[b.id] = bindings_.size();
  bindings_.push_back(std::move(b));
}

void SymbolTable::AddUse(int node_id, int binding_id) {
  use_to_binding_[node_id] = binding_id;
  uses_[binding_id].push_back(node_id);
}

namespace {

std::string QualifierHead(const std::string& qualifier) {
  return qualifier.substr(0, qualifier.find('.'));
}

class Resolver {
 public:
  SymbolTable Run(const MethodAst& method) {
    Push();
    for (const Param& p : method.params) {
      Declare(p.name, p.id, p.type, BindingKind::kParam);
    }
    for (const Stmt& s : method.body.body) Statement(s);
    Pop();
    return std::move(table_);
  }

 private:
  void Push() { scopes_.emplace_back(); }
  void Pop() { scopes_.pop_back(); }

  void Declare(const std::string& name, int id, const std::string& type,
               BindingKind kind) {
    auto& scope = scopes_.back();
    if (scope.count(name)) throw DuplicateDeclaration(name, id);
    scope[name] = id;
    table_.AddBinding(Binding{id, name, type, kind});
  }

  std::optional<int> Lookup(const std::string& name) const {
    for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it) {
      auto found = it->find(name);
      if (found != it->end()) return found->second;
    }
    return std::nullopt;
  }

  int UseOf(const std::string& name) {
    if (auto id = Lookup(name)) return *id;
    auto it = free_.find(name);
    if (it != free_.end()) return it->second;
    const int id = next_free_--;
    free_[name] = id;
    table_.AddBinding(Binding{id, name, "", BindingKind::kFree});
    return id;
  }

  void Expression(const Expr& e) {
    VisitExprs(e, [&](const Expr& x) {
      if (x.kind == ExprKind::kVarRef) {
        table_.AddUse(x.id, UseOf(x.text));
      } else if (x.kind == ExprKind::kCall && !x.qualifier.empty()) {
        if (auto id = Lookup(QualifierHead(x.qualifier))) {
          table_.AddUse(x.id, *id);
        }
      }
    });
  }

  // A statement in a nested position (loop or branch body).
  void Nested(const Stmt& s) {
    Push();
    Statement(s);
    Pop();
  }

  void Statement(const Stmt& s) {
    switch (s.kind) {
      case StmtKind::kVarDecl:
        if (s.expr) Expression(*s.expr);
        Declare(s.name, s.id, s.type, BindingKind::kLocal);
        return;
      case StmtKind::kAssign:
        if (s.expr) Expression(*s.expr);
        table_.AddUse(s.id, UseOf(s.name));
        return;
      case StmtKind::kExprStmt:
      case StmtKind::kReturn:
        if (s.expr) Expression(*s.expr);
        return;
      case StmtKind::kBreak:
      case StmtKind::kContinue:
        return;
      case StmtKind::kIf:
        Expression(*s.expr);
        Nested(s.body[0]);
        if (!s.else_body.empty()) Nested(s.else_body[0]);
        return;
      case StmtKind::kWhile:
        Expression(*s.expr);
        Nested(s.body[0]);
        return;
      case StmtKind::kDoWhile:
        Nested(s.body[0]);
        Expression(*s.expr);
        return;
      case StmtKind::kFor:
        Push();
        for (const Stmt& i : s.init) Statement(i);
        if (s.expr) Expression(*s.expr);
        for (const Stmt& u : s.update) Statement(u);
        Nested(s.body[0]);
        Pop();
        return;
      case StmtKind::kSwitch:
        Expression(*s.expr);
        Push();
        for (const SwitchCase& c : s.cases) {
          for (const Stmt& b : c.body) Statement(b);
        }
        Pop();
        return;
      case StmtKind::kBlock:
        Push();
        for (const Stmt& b : s.body) Statement(b);
        Pop();
        return;
      case StmtKind::kTry:
        Nested(s.body[0]);
        for (const CatchClause& c : s.catches) {
          Push();
          Declare(c.name, c.id, c.type, BindingKind::kCatch);
          Nested(c.block[0]);
          Pop();
        }
        if (!s.else_body.empty()) Nested(s.else_body[0]);
        return;
    }
  }

  SymbolTable table_;
  std::vector<std::map<std::string, int>> scopes_;
  std::map<std::string, int> free_;
  int next_free_ = -1;
};

bool IsLoop(const Stmt& s) {
  return s.kind == StmtKind::kWhile || s.kind == StmtKind::kDoWhile ||
         s.kind == StmtKind::kFor;
}

// Collects def/use facts. |loop_depth| and |switch_depth| count enclosing
// constructs inside the analyzed statement, to tell escaping jumps apart from
// ones bound within it.
class DefUseCollector {
 public:
  DefUseCollector(const SymbolTable& symbols, ReadWriteSets& out)
      : symbols_(symbols), out_(out) {}

  void Statement(const Stmt& s, int loop_depth, int switch_depth) {
    switch (s.kind) {
      case StmtKind::kVarDecl:
        out_.writes.insert(s.id);
        out_.declared_names.insert(s.name);
        out_.referenced_names.insert(s.name);
        break;
      case StmtKind::kAssign:
        if (auto b = symbols_.BindingOfUse(s.id)) {
          out_.writes.insert(*b);
          if (s.op != "=") out_.reads.insert(*b);
        }
        out_.referenced_names.insert(s.name);
        break;
      case StmtKind::kReturn:
        out_.jumps = true;
        break;
      case StmtKind::kBreak:
        if (loop_depth == 0 && switch_depth == 0) out_.jumps = true;
        break;
      case StmtKind::kContinue:
        if (loop_depth == 0) out_.jumps = true;
        break;
      case StmtKind::kTry:
        out_.opaque = true;
        for (const CatchClause& c : s.catches) {
          out_.declared_names.insert(c.name);
          out_.referenced_names.insert(c.name);
        }
        break;
      default:
        break;
    }
    ForOwnExprs(s, [&](const Expr& e) { Expression(e); });
    const int inner_loops = loop_depth + (IsLoop(s) ? 1 : 0);
    const int inner_switches =
        switch_depth + (s.kind == StmtKind::kSwitch ? 1 : 0);
    for (const Stmt* child : ChildStmts(s)) {
      Statement(*child, inner_loops, inner_switches);
    }
  }

 private:
  void Expression(const Expr& e) {
    VisitExprs(e, [&](const Expr& x) {
      if (x.kind == ExprKind::kVarRef) {
        if (auto b = symbols_.BindingOfUse(x.id)) out_.reads.insert(*b);
        out_.referenced_names.insert(x.text);
      } else if (x.kind == ExprKind::kCall) {
        out_.calls = true;
        if (!x.qualifier.empty()) {
          if (auto b = symbols_.BindingOfUse(x.id)) out_.reads.insert(*b);
          out_.referenced_names.insert(QualifierHead(x.qualifier));
        }
      }
    });
  }

  const SymbolTable& symbols_;
  ReadWriteSets& out_;
};

bool Intersects(const std::set<int>& a, const std::set<int>& b) {
  for (int x : a) {
    if (b.count(x)) return true;
  }
  return false;
}

bool Intersects(const std::set<std::string>& a,
                const std::set<std::string>& b) {
  for (const auto& x : a) {
    if (b.count(x)) return true;
  }
  return false;
}

// Does |body| contain a `continue` that binds to the loop owning |body|?
bool HasBoundContinue(const Stmt& s) {
  if (s.kind == StmtKind::kContinue) return true;
  if (IsLoop(s)) return false;
  for (const Stmt* child : ChildStmts(s)) {
    if (HasBoundContinue(*child)) return true;
  }
  return false;
}

// Does |s| contain a `break` that binds to an enclosing switch?
bool HasBoundBreak(const Stmt& s) {
  if (s.kind == StmtKind::kBreak) return true;
  if (IsLoop(s) || s.kind == StmtKind::kSwitch) return false;
  for (const Stmt* child : ChildStmts(s)) {
    if (HasBoundBreak(*child)) return true;
  }
  return false;
}

void CollectNodeIds(const Stmt& s, std::set<int>& out) {
  VisitStmts(s, [&](const Stmt& x) {
    out.insert(x.id);
    ForOwnExprs(x, [&](const Expr& e) {
      VisitExprs(e, [&](const Expr& y) { out.insert(y.id); });
    });
    for (const auto& c : x.cases) out.insert(c.id);
    for (const auto& c : x.catches) out.insert(c.id);
  });
}

}  // namespace

SymbolTable ResolveScopes(const MethodAst& method) {
  return Resolver().Run(method);
}

ReadWriteSets ComputeDefUse(const Stmt& stmt, const SymbolTable& symbols) {
  ReadWriteSets out;
  DefUseCollector(symbols, out).Statement(stmt, 0, 0);
  return out;
}

bool Independent(const Stmt& a, const Stmt& b, const SymbolTable& symbols) {
  const ReadWriteSets ra = ComputeDefUse(a, symbols);
  const ReadWriteSets rb = ComputeDefUse(b, symbols);
  if (ra.calls || rb.calls || ra.jumps || rb.jumps || ra.opaque ||
      rb.opaque) {
    return false;
  }
  // Writes to free names (fields) are observable, so they stay ordered
  // relative to anything that might trap.
  auto writes_free = [](const ReadWriteSets& rw) {
    return !rw.writes.empty() && *rw.writes.begin() < 0;
  };
  if (writes_free(ra) || writes_free(rb)) return false;
  if (Intersects(ra.writes, rb.reads) || Intersects(ra.writes, rb.writes) ||
      Intersects(rb.writes, ra.reads)) {
    return false;
  }
  // A declaration must not capture (or lose) a reference in the other
  // statement once the two trade places.
  return !Intersects(ra.declared_names, rb.referenced_names) &&
         !Intersects(rb.declared_names, ra.referenced_names);
}

bool BooleanExchangeEligible(const MethodAst& method,
                             const SymbolTable& symbols, int binding_id) {
  const Binding* b = symbols.Find(binding_id);
  if (!b || b->kind != BindingKind::kLocal || b->type != "boolean") {
    return false;
  }
  for (int use : symbols.UsesOf(binding_id)) {
    if (const Stmt* s = FindStmt(method.body, use)) {
      if (s->kind != StmtKind::kAssign || s->op != "=") return false;
      continue;
    }
    // Expression uses: plain reads only; a qualified call on it is not.
    bool is_read = false;
    VisitAllExprs(method.body, [&](const Expr& e) {
      if (e.id == use && e.kind == ExprKind::kVarRef) is_read = true;
    });
    if (!is_read) return false;
  }
  return true;
}

bool LoopExchangeEligible(const Stmt& loop) {
  if (loop.kind != StmtKind::kFor && loop.kind != StmtKind::kWhile) {
    return false;
  }
  return !HasBoundContinue(loop.body[0]);
}

bool SwitchToIfEligible(const Stmt& sw, const SymbolTable& symbols) {
  if (sw.kind != StmtKind::kSwitch) return false;
  // Every non-empty clause ends in break/return, and no other break binds to
  // the switch.
  for (const SwitchCase& c : sw.cases) {
    if (c.body.empty()) continue;
    const Stmt& last = c.body.back();
    if (last.kind != StmtKind::kBreak && last.kind != StmtKind::kReturn) {
      return false;
    }
    for (size_t i = 0; i + 1 < c.body.size(); ++i) {
      if (HasBoundBreak(c.body[i])) return false;
    }
  }
  // The scrutinee's type fixes the temporary's declaration.
  std::string label_type;
  for (const SwitchCase& c : sw.cases) {
    if (!c.label) continue;
    std::string t;
    if (c.label->kind == ExprKind::kStringLit) {
      t = "String";
    } else if (c.label->kind == ExprKind::kIntLit ||
               (c.label->kind == ExprKind::kUnary &&
                c.label->children[0].kind == ExprKind::kIntLit)) {
      t = "int";
    } else {
      return false;
    }
    if (!label_type.empty() && label_type != t) return false;
    label_type = t;
  }
  const std::string inferred = InferType(*sw.expr, symbols);
  if (label_type.empty()) {
    if (inferred != "int" && inferred != "String") return false;
  } else if (!inferred.empty() && inferred != label_type) {
    return false;
  }
  // Clause groups become separate blocks, so a local declared in one group
  // must not be referenced from another.
  std::vector<std::set<int>> group_nodes(1);
  std::vector<std::vector<int>> group_decls(1);
  for (const SwitchCase& c : sw.cases) {
    for (const Stmt& b : c.body) {
      CollectNodeIds(b, group_nodes.back());
      VisitStmts(b, [&](const Stmt& x) {
        if (x.kind == StmtKind::kVarDecl) group_decls.back().push_back(x.id);
      });
    }
    if (!c.body.empty()) {
      group_nodes.emplace_back();
      group_decls.emplace_back();
    }
  }
  for (size_t g = 0; g < group_decls.size(); ++g) {
    for (int decl : group_decls[g]) {
      for (int use : symbols.UsesOf(decl)) {
        if (!group_nodes[g].count(use)) return false;
      }
    }
  }
  return true;
}

std::vector<Site> EnumerateSites(const MethodAst& method,
                                 const SymbolTable& symbols,
                                 TransformKind kind) {
  std::vector<Site> sites;
  switch (kind) {
    case TransformKind::kVariableRenaming:
      for (const Binding& b : symbols.bindings()) {
        if (b.kind == BindingKind::kParam || b.kind == BindingKind::kLocal) {
          sites.push_back(Site{kind, b.id, {b.id}});
        }
      }
      break;
    case TransformKind::kBooleanExchange:
      for (const Binding& b : symbols.bindings()) {
        if (BooleanExchangeEligible(method, symbols, b.id)) {
          sites.push_back(Site{kind, b.id, {b.id}});
        }
      }
      break;
    case TransformKind::kLoopExchange:
      VisitStmts(method.body, [&](const Stmt& s) {
        if (LoopExchangeEligible(s)) sites.push_back(Site{kind, s.id, {}});
      });
      break;
    case TransformKind::kSwitchToIf:
      VisitStmts(method.body, [&](const Stmt& s) {
        if (SwitchToIfEligible(s, symbols)) {
          sites.push_back(Site{kind, s.id, {}});
        }
      });
      break;
    case TransformKind::kPermuteStatement:
      VisitStmts(method.body, [&](const Stmt& s) {
        if (s.kind != StmtKind::kBlock) return;
        for (size_t i = 0; i + 1 < s.body.size(); ++i) {
          if (Independent(s.body[i], s.body[i + 1], symbols)) {
            sites.push_back(
                Site{kind, s.body[i].id, {s.body[i].id, s.body[i + 1].id}});
          }
        }
      });
      break;
    case TransformKind::kUnusedStatement:
      VisitStmts(method.body, [&](const Stmt& s) {
        if (s.kind == StmtKind::kBlock) sites.push_back(Site{kind, s.id, {}});
      });
      break;
  }
  std::sort(sites.begin(), sites.end(), [](const Site& a, const Site& b) {
    return std::tie(a.anchor, a.payload) < std::tie(b.anchor, b.payload);
  });
  return sites;
}

std::vector<Site> EnumerateSites(const MethodAst& method, TransformKind kind) {
  return EnumerateSites(method, ResolveScopes(method), kind);
}

std::string Site::Summary(const MethodAst& method,
                          const SymbolTable& symbols) const {
  switch (kind) {
    case TransformKind::kVariableRenaming:
    case TransformKind::kBooleanExchange: {
      const Binding* b = symbols.Find(payload.at(0));
      return "binding=" + (b ? b->name : std::string("?"));
    }
    case TransformKind::kLoopExchange: {
      const Stmt* s = FindStmt(method.body, anchor);
      return std::string("loop=") +
             (s && s->kind == StmtKind::kFor ? "for" : "while");
    }
    case TransformKind::kSwitchToIf: {
      const Stmt* s = FindStmt(method.body, anchor);
      return "cases=" + std::to_string(s ? s->cases.size() : 0);
    }
    case TransformKind::kPermuteStatement:
      return "swap=" + std::to_string(payload.at(0)) + "," +
             std::to_string(payload.at(1));
    case TransformKind::kUnusedStatement: {
      const Stmt* s = FindStmt(method.body, anchor);
      return "block_size=" + std::to_string(s ? s->body.size() : 0);
    }
  }
  return "";
}

int CountStatements(const MethodAst& method) {
  int n = 0;
  std::function<void(const Stmt&)> count = [&](const Stmt& s) {
    if (s.kind != StmtKind::kBlock) ++n;
    // For-loop init and update are part of the header.
    for (const Stmt& b : s.body) count(b);
    for (const Stmt& b : s.else_body) count(b);
    for (const SwitchCase& c : s.cases) {
      for (const Stmt& b : c.body) count(b);
    }
    for (const CatchClause& c : s.catches) {
      for (const Stmt& b : c.block) count(b);
    }
  };
  for (const Stmt& s : method.body.body) count(s);
  return n;
}

std::string InferType(const Expr& expr, const SymbolTable& symbols) {
  switch (expr.kind) {
    case ExprKind::kIntLit: return "int";
    case ExprKind::kLongLit: return "long";
    case ExprKind::kDoubleLit: return "double";
    case ExprKind::kBoolLit: return "boolean";
    case ExprKind::kStringLit: return "String";
    case ExprKind::kNullLit: return "";
    case ExprKind::kVarRef: {
      auto b = symbols.BindingOfUse(expr.id);
      const Binding* binding = b ? symbols.Find(*b) : nullptr;
      return binding ? binding->type : "";
    }
    case ExprKind::kUnary:
      return expr.text == "!" ? "boolean"
                              : InferType(expr.children[0], symbols);
    case ExprKind::kBinary: {
      const std::string& op = expr.text;
      if (op == "&&" || op == "||" || op == "==" || op == "!=" || op == "<" ||
          op == "<=" || op == ">" || op == ">=") {
        return "boolean";
      }
      const std::string l = InferType(expr.children[0], symbols);
      const std::string r = InferType(expr.children[1], symbols);
      if (op == "+" && (l == "String" || r == "String")) return "String";
      if (l.empty() || r.empty()) return "";
      if (l == "double" || r == "double") return "double";
      if (l == "long" || r == "long") return "long";
      if (l == "int" && r == "int") return "int";
      return "";
    }
    case ExprKind::kCall:
      return "";
    case ExprKind::kTernary: {
      const std::string a = InferType(expr.children[1], symbols);
      const std::string b = InferType(expr.children[2], symbols);
      return a == b ? a : "";
    }
  }
  return "";
}

}  // namespace codemorph
