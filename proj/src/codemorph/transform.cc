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


#include "codemorph/transform.h"

#include <algorithm>
#include <set>
#include <utility>

#include "codemorph/errors.h"
#include "codemorph/lexer.h"
#include "codemorph/printer.h"

namespace codemorph {

std::string_view ToString(Mode mode) {
  switch (mode) {
    case Mode::kSinglePlace: return "single";
    case Mode::kAllPlace: return "all";
    case Mode::kPercent: return "percent";
  }
  return "?";
}

std::optional<Mode> ParseMode(std::string_view text) {
  if (text == "single") return Mode::kSinglePlace;
  if (text == "all") return Mode::kAllPlace;
  if (text == "percent") return Mode::kPercent;
  return std::nullopt;
}

void TransformRequest::Validate() const {
  if (mode != Mode::kSinglePlace && !SupportsMultiSite(kind)) {
    throw ModeUnsupported(std::string(ToString(mode)) +
                          " mode is not applicable to " +
                          std::string(ToString(kind)));
  }
  if (mode == Mode::kPercent) {
    if (percent != 25 && percent != 50 && percent != 75) {
      throw InvalidArgument("percent must be 25, 50 or 75, got " +
                            std::to_string(percent));
    }
  } else if (percent != 0) {
    throw InvalidArgument("percent is only meaningful in percent mode");
  }
}

namespace {

// Gives every node created by a rewrite (id < 0) a fresh id.
void StampNewIds(MethodAst& method) {
  int next = MaxNodeId(method) + 1;
  VisitStmts(method.body, [&](Stmt& s) {
    if (s.id < 0) s.id = next++;
    for (SwitchCase& c : s.cases) {
      if (c.id < 0) c.id = next++;
    }
    for (CatchClause& c : s.catches) {
      if (c.id < 0) c.id = next++;
    }
    ForOwnExprs(s, [&](Expr& e) {
      VisitExprs(e, [&](Expr& x) {
        if (x.id < 0) x.id = next++;
      });
    });
  });
}

Stmt& MustFindStmt(MethodAst& method, int id, StmtKind kind,
                   std::string_view what) {
  Stmt* s = FindStmt(method.body, id);
  if (!s || s->kind != kind) {
    throw IneligibleSite("node " + std::to_string(id) + " is not a " +
                         std::string(what));
  }
  return *s;
}

bool Contains(const std::vector<std::string>& names, const std::string& n) {
  return std::find(names.begin(), names.end(), n) != names.end();
}

Expr Negate(Expr e) {
  if (e.kind == ExprKind::kBoolLit) {
    e.text = e.text == "true" ? "false" : "true";
    return e;
  }
  if (e.kind == ExprKind::kUnary && e.text == "!") {
    return std::move(e.children[0]);
  }
  return Expr::Unary("!", std::move(e));
}

// Wraps each read in |uses| in a negation, or strips an existing one.
void NegateReads(Expr& e, const std::set<int>& uses) {
  if (e.kind == ExprKind::kUnary && e.text == "!" &&
      e.children[0].kind == ExprKind::kVarRef &&
      uses.count(e.children[0].id)) {
    Expr inner = std::move(e.children[0]);
    e = std::move(inner);
    return;
  }
  if (e.kind == ExprKind::kVarRef && uses.count(e.id)) {
    e = Expr::Unary("!", std::move(e));
    return;
  }
  for (Expr& c : e.children) NegateReads(c, uses);
}

bool IsJump(const Stmt& s) {
  return s.kind == StmtKind::kReturn || s.kind == StmtKind::kBreak ||
         s.kind == StmtKind::kContinue;
}

// A copy of |label| compared against |tmp|; the copy gets fresh ids.
Expr Equals(const std::string& tmp, const Expr& label) {
  Expr copy = label;
  VisitExprs(copy, [](Expr& x) { x.id = -1; });
  return Expr::Binary("==", Expr::Var(tmp), std::move(copy));
}

struct CaseGroup {
  std::vector<const Expr*> labels;
  bool has_default = false;
  std::vector<Stmt> body;
};

}  // namespace

MethodAst RenameVariable(const MethodAst& method, const SymbolTable& symbols,
                         int binding_id, const std::string& new_name) {
  const Binding* b = symbols.Find(binding_id);
  if (!b || b->kind == BindingKind::kFree) {
    throw IneligibleSite("binding " + std::to_string(binding_id) +
                         " is not a declared variable");
  }
  if (new_name.empty()) throw EmptyName("empty replacement name");
  if (Contains(AllIdentifiers(method), new_name) || IsKeyword(new_name)) {
    throw NameCollision("name '" + new_name + "' already occurs in " +
                        method.name);
  }
  MethodAst out = method;
  for (Param& p : out.params) {
    if (p.id == binding_id) p.name = new_name;
  }
  std::set<int> uses(symbols.UsesOf(binding_id).begin(),
                     symbols.UsesOf(binding_id).end());
  VisitStmts(out.body, [&](Stmt& s) {
    if ((s.kind == StmtKind::kVarDecl && s.id == binding_id) ||
        (s.kind == StmtKind::kAssign && uses.count(s.id))) {
      s.name = new_name;
    }
    for (CatchClause& c : s.catches) {
      if (c.id == binding_id) c.name = new_name;
    }
    ForOwnExprs(s, [&](Expr& e) {
      VisitExprs(e, [&](Expr& x) {
        if (!uses.count(x.id)) return;
        if (x.kind == ExprKind::kVarRef) {
          x.text = new_name;
        } else if (x.kind == ExprKind::kCall) {
          const size_t dot = x.qualifier.find('.');
          x.qualifier = new_name + (dot == std::string::npos
                                        ? ""
                                        : x.qualifier.substr(dot));
        }
      });
    });
  });
  return out;
}

MethodAst BooleanExchange(const MethodAst& method, const SymbolTable& symbols,
                          int binding_id) {
  if (!BooleanExchangeEligible(method, symbols, binding_id)) {
    throw IneligibleSite("binding " + std::to_string(binding_id) +
                         " is not an exchangeable boolean local");
  }
  MethodAst out = method;
  const std::set<int> uses(symbols.UsesOf(binding_id).begin(),
                           symbols.UsesOf(binding_id).end());
  VisitStmts(out.body, [&](Stmt& s) {
    ForOwnExprs(s, [&](Expr& e) { NegateReads(e, uses); });
    const bool is_write = (s.kind == StmtKind::kVarDecl && s.id == binding_id) ||
                          (s.kind == StmtKind::kAssign && uses.count(s.id));
    if (is_write && s.expr) s.expr = Negate(std::move(*s.expr));
  });
  StampNewIds(out);
  return out;
}

MethodAst LoopExchange(const MethodAst& method, int loop_id) {
  MethodAst out = method;
  Stmt* loop = FindStmt(out.body, loop_id);
  if (!loop || !LoopExchangeEligible(*loop)) {
    throw IneligibleSite("node " + std::to_string(loop_id) +
                         " is not an exchangeable loop");
  }
  if (loop->kind == StmtKind::kWhile) {
    Stmt f;
    f.kind = StmtKind::kFor;
    f.expr = std::move(loop->expr);
    f.body = std::move(loop->body);
    *loop = std::move(f);
  } else {
    Stmt& body = loop->body[0];
    // Inlining the body's statements next to the update is only safe when
    // the update does not see a name the body declares.
    bool inline_body = body.kind == StmtKind::kBlock;
    if (inline_body) {
      std::set<std::string> declared;
      for (const Stmt& b : body.body) {
        if (b.kind == StmtKind::kVarDecl) declared.insert(b.name);
      }
      for (const Stmt& u : loop->update) {
        const ReadWriteSets rw = ComputeDefUse(u, SymbolTable());
        for (const std::string& n : rw.referenced_names) {
          if (declared.count(n)) inline_body = false;
        }
      }
    }
    std::vector<Stmt> inner;
    if (inline_body) {
      inner = std::move(body.body);
    } else {
      inner.push_back(std::move(body));
    }
    for (Stmt& u : loop->update) inner.push_back(std::move(u));
    Expr cond = loop->expr ? std::move(*loop->expr)
                           : Expr::Literal(ExprKind::kBoolLit, "true");
    std::vector<Stmt> outer = std::move(loop->init);
    outer.push_back(Stmt::While(std::move(cond), Stmt::Block(std::move(inner))));
    *loop = Stmt::Block(std::move(outer));
  }
  StampNewIds(out);
  return out;
}

MethodAst SwitchToIf(const MethodAst& method, const SymbolTable& symbols,
                     int switch_id) {
  const Stmt* original = FindStmt(method.body, switch_id);
  if (!original || !SwitchToIfEligible(*original, symbols)) {
    throw IneligibleSite("node " + std::to_string(switch_id) +
                         " is not a convertible switch");
  }
  MethodAst out = method;
  Stmt& sw = MustFindStmt(out, switch_id, StmtKind::kSwitch, "switch");

  std::string type;
  for (const SwitchCase& c : sw.cases) {
    if (c.label) {
      type = c.label->kind == ExprKind::kStringLit ? "String" : "int";
    }
  }
  if (type.empty()) type = InferType(*original->expr, symbols);
  const std::string tmp = FreshName("tmp", AllIdentifiers(method));

  // Clauses without statements fall into the next clause, so labels are
  // grouped up to the next non-empty body.
  std::vector<CaseGroup> groups(1);
  for (SwitchCase& c : sw.cases) {
    if (c.label) {
      groups.back().labels.push_back(&*c.label);
    } else {
      groups.back().has_default = true;
    }
    if (c.body.empty()) continue;
    groups.back().body = std::move(c.body);
    if (groups.back().body.back().kind == StmtKind::kBreak) {
      groups.back().body.pop_back();
    }
    groups.emplace_back();
  }

  std::optional<Stmt> else_branch;
  for (CaseGroup& g : groups) {
    if (g.has_default && !g.body.empty()) {
      else_branch = Stmt::Block(std::move(g.body));
    }
  }
  // Build the chain back to front so each branch nests in the previous else.
  std::optional<Stmt> chain = std::move(else_branch);
  for (auto it = groups.rbegin(); it != groups.rend(); ++it) {
    if (it->has_default || it->labels.empty()) continue;
    Expr cond = Equals(tmp, *it->labels[0]);
    for (size_t i = 1; i < it->labels.size(); ++i) {
      cond = Expr::Binary("||", std::move(cond), Equals(tmp, *it->labels[i]));
    }
    chain = Stmt::If(std::move(cond), Stmt::Block(std::move(it->body)),
                     std::move(chain));
  }
  std::vector<Stmt> stmts;
  stmts.push_back(Stmt::VarDecl(type, tmp, std::move(*sw.expr)));
  if (chain) stmts.push_back(std::move(*chain));
  sw = Stmt::Block(std::move(stmts));
  StampNewIds(out);
  return out;
}

MethodAst PermuteStatements(const MethodAst& method, const SymbolTable& symbols,
                            int first_id, int second_id) {
  MethodAst out = method;
  bool swapped = false;
  VisitStmts(out.body, [&](Stmt& s) {
    if (swapped || s.kind != StmtKind::kBlock) return;
    for (size_t i = 0; i + 1 < s.body.size(); ++i) {
      if (s.body[i].id != first_id || s.body[i + 1].id != second_id) continue;
      if (!Independent(s.body[i], s.body[i + 1], symbols)) {
        throw IneligibleSite("statements " + std::to_string(first_id) +
                             " and " + std::to_string(second_id) +
                             " are not independent");
      }
      std::swap(s.body[i], s.body[i + 1]);
      swapped = true;
      return;
    }
  });
  if (!swapped) {
    throw IneligibleSite("statements " + std::to_string(first_id) + " and " +
                         std::to_string(second_id) +
                         " are not adjacent in a block");
  }
  return out;
}

MethodAst InsertUnusedStatement(const MethodAst& method, int block_id,
                                Rng& rng) {
  MethodAst out = method;
  Stmt& block = MustFindStmt(out, block_id, StmtKind::kBlock, "block");
  size_t limit = block.body.size();
  for (size_t i = 0; i < block.body.size(); ++i) {
    if (IsJump(block.body[i])) {
      limit = i;
      break;
    }
  }
  const std::string name = FreshName("unused", AllIdentifiers(method));
  const size_t pos = static_cast<size_t>(rng.Below(limit + 1));
  const int64_t value = rng.Range(0, 9);
  block.body.insert(
      block.body.begin() + static_cast<std::ptrdiff_t>(pos),
      Stmt::VarDecl("int", name,
                    Expr::Literal(ExprKind::kIntLit, std::to_string(value))));
  StampNewIds(out);
  return out;
}

MethodAst ApplySite(const MethodAst& method, const SymbolTable& symbols,
                    const Site& site, Rng& rng) {
  switch (site.kind) {
    case TransformKind::kVariableRenaming:
      return RenameVariable(method, symbols, site.payload.at(0),
                            FreshName("var", AllIdentifiers(method)));
    case TransformKind::kBooleanExchange:
      return BooleanExchange(method, symbols, site.payload.at(0));
    case TransformKind::kLoopExchange:
      return LoopExchange(method, site.anchor);
    case TransformKind::kSwitchToIf:
      return SwitchToIf(method, symbols, site.anchor);
    case TransformKind::kPermuteStatement:
      return PermuteStatements(method, symbols, site.payload.at(0),
                               site.payload.at(1));
    case TransformKind::kUnusedStatement:
      return InsertUnusedStatement(method, site.anchor, rng);
  }
  throw IneligibleSite("unknown transformation");
}

std::string MakeVariantId(const std::string& method_id, TransformKind kind,
                          Mode mode, int percent, uint64_t seed,
                          const std::vector<Site>& sites) {
  std::string key = method_id + "|" + std::string(ToString(kind)) + "|" +
                    std::string(ToString(mode)) + "|" +
                    std::to_string(percent) + "|" + std::to_string(seed) + "|";
  for (size_t i = 0; i < sites.size(); ++i) {
    if (i) key += ",";
    key += std::to_string(sites[i].anchor);
  }
  return Hex64(Fnv1a64(key));
}

namespace {

std::string StreamLabel(const std::string& method_id, TransformKind kind,
                        Mode mode, int percent) {
  return method_id + "|" + std::string(ToString(kind)) + "|" +
         std::string(ToString(mode)) + "|" + std::to_string(percent);
}

// Applies |sites| (ascending) one after another, re-resolving names between
// steps since ids of the original nodes are stable.
Variant Build(const MethodAst& method, const std::string& method_id,
              TransformKind kind, Mode mode, int percent, uint64_t seed,
              std::vector<Site> sites, Rng& rng) {
  MethodAst current = method;
  SymbolTable symbols = ResolveScopes(current);
  for (const Site& site : sites) {
    current = ApplySite(current, symbols, site, rng);
    symbols = ResolveScopes(current);
  }
  Variant v;
  v.method_id = method_id;
  v.kind = kind;
  v.mode = mode;
  v.percent = percent;
  v.seed = seed;
  v.variant_id = MakeVariantId(method_id, kind, mode, percent, seed, sites);
  v.applied_sites = std::move(sites);
  AssignNodeIds(current);
  v.source = PrintMethod(current);
  v.ast = std::move(current);
  return v;
}

void RequireMultiSite(TransformKind kind, Mode mode) {
  TransformRequest{kind, mode, mode == Mode::kPercent ? 25 : 0, 0}.Validate();
}

}  // namespace

std::vector<Variant> SinglePlace(const MethodAst& method,
                                 const std::string& method_id,
                                 TransformKind kind, uint64_t seed) {
  const std::vector<Site> sites = EnumerateSites(method, kind);
  std::vector<Variant> out;
  for (const Site& site : sites) {
    Rng rng(DeriveSeed(seed, StreamLabel(method_id, kind, Mode::kSinglePlace,
                                         0) +
                                 "|" + std::to_string(site.anchor)));
    try {
      out.push_back(Build(method, method_id, kind, Mode::kSinglePlace, 0, seed,
                          {site}, rng));
    } catch (const IneligibleSite&) {
      // Enumerated sites are eligible by construction.
    }
  }
  return out;
}

std::optional<Variant> AllPlace(const MethodAst& method,
                                const std::string& method_id,
                                TransformKind kind, uint64_t seed) {
  RequireMultiSite(kind, Mode::kAllPlace);
  std::vector<Site> sites = EnumerateSites(method, kind);
  if (sites.empty()) return std::nullopt;
  Rng rng(DeriveSeed(seed, StreamLabel(method_id, kind, Mode::kAllPlace, 0)));
  return Build(method, method_id, kind, Mode::kAllPlace, 0, seed,
               std::move(sites), rng);
}

std::optional<Variant> XPercent(const MethodAst& method,
                                const std::string& method_id,
                                TransformKind kind, int percent,
                                uint64_t seed) {
  TransformRequest{kind, Mode::kPercent, percent, seed}.Validate();
  const std::vector<Site> sites = EnumerateSites(method, kind);
  const size_t k = sites.size() * static_cast<size_t>(percent) / 100;
  if (k == 0) return std::nullopt;
  Rng rng(
      DeriveSeed(seed, StreamLabel(method_id, kind, Mode::kPercent, percent)));
  std::vector<Site> chosen;
  for (size_t i : rng.Sample(sites.size(), k)) chosen.push_back(sites[i]);
  return Build(method, method_id, kind, Mode::kPercent, percent, seed,
               std::move(chosen), rng);
}

std::vector<Variant> Transform(const MethodAst& method,
                               const std::string& method_id,
                               const TransformRequest& request) {
  request.Validate();
  switch (request.mode) {
    case Mode::kSinglePlace:
      return SinglePlace(method, method_id, request.kind, request.seed);
    case Mode::kAllPlace: {
      auto v = AllPlace(method, method_id, request.kind, request.seed);
      if (v) return {std::move(*v)};
      return {};
    }
    case Mode::kPercent: {
      auto v = XPercent(method, method_id, request.kind, request.percent,
                        request.seed);
      if (v) return {std::move(*v)};
      return {};
    }
  }
  return {};
}

}  // namespace codemorph
