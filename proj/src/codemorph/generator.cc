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


#include "codemorph/generator.h"

#include <algorithm>
#include <string>

#include "codemorph/analysis.h"
#include "codemorph/parser.h"
#include "codemorph/printer.h"
#include "codemorph/rng.h"

namespace codemorph {

namespace {

struct Var {
  std::string name;
  std::string type;
  bool assignable = true;
};

const std::vector<std::string>& NamePool(const std::string& type) {
  static const std::vector<std::string> kInt = {
      "count", "total", "index", "sum",   "size",   "value", "result",
      "offset", "limit", "delta", "width", "height", "score", "length"};
  static const std::vector<std::string> kBool = {
      "flag", "done", "found", "valid", "ready", "empty", "enabled"};
  static const std::vector<std::string> kString = {
      "name", "text", "label", "prefix", "message", "key", "line"};
  if (type == "boolean") return kBool;
  if (type == "String") return kString;
  return kInt;
}

const std::vector<std::string> kCallees = {"compute", "lookup", "next",
                                           "check",   "process", "log"};
const std::vector<std::string> kFields = {"capacity", "threshold", "mode"};
const std::vector<std::string> kStrings = {"\"\"", "\"a\"", "\"abc\"",
                                           "\"Hello\"", "\"42\""};

struct MethodShape {
  std::string return_type;
  std::string name;
};

const std::vector<MethodShape> kShapes = {
    {"int", "getCount"},      {"int", "computeTotal"}, {"int", "findIndex"},
    {"int", "sumValues"},     {"boolean", "isValid"},  {"boolean", "hasNext"},
    {"String", "buildLabel"}, {"String", "getName"},   {"void", "update"},
    {"void", "processItems"}, {"int", "compareTo"},    {"long", "getSize"}};

class Generator {
 public:
  Generator(uint64_t seed, const GeneratorOptions& options)
      : rng_(seed), options_(options) {}

  MethodAst Run() {
    MethodAst m;
    const MethodShape& shape = kShapes[rng_.Below(kShapes.size())];
    m.return_type = shape.return_type;
    m.name = shape.name;
    return_type_ = m.return_type;
    scopes_.emplace_back();
    const int nparams = static_cast<int>(rng_.Range(1, 3));
    for (int i = 0; i < nparams; ++i) {
      const std::string type = RandomType();
      Param p;
      p.type = type;
      p.name = FreshName(type);
      scopes_.back().push_back(Var{p.name, type, true});
      m.params.push_back(p);
    }
    const int n = static_cast<int>(rng_.Range(2, options_.max_block + 1));
    const int inject = options_.focus ? static_cast<int>(rng_.Below(n)) : -1;
    std::vector<Stmt> body;
    for (int i = 0; i < n; ++i) {
      if (i == inject) {
        for (Stmt& s : Focus(*options_.focus)) body.push_back(std::move(s));
      } else {
        for (Stmt& s : Statement(options_.max_depth)) body.push_back(std::move(s));
      }
    }
    if (return_type_ != "void") {
      body.push_back(Stmt::Return(Value(return_type_, 2)));
    }
    m.body = Stmt::Block(std::move(body));
    scopes_.pop_back();
    // Normalize through the printer so ids and shape match a parsed method.
    return ParseMethod(PrintMethod(m));
  }

 private:
  std::string RandomType() {
    const uint64_t r = rng_.Below(10);
    if (r < 6) return "int";
    if (r < 8) return "boolean";
    return "String";
  }

  bool Visible(const std::string& name) const {
    if (std::find(reserved_.begin(), reserved_.end(), name) != reserved_.end()) {
      return true;
    }
    for (const auto& scope : scopes_) {
      for (const Var& v : scope) {
        if (v.name == name) return true;
      }
    }
    return false;
  }

  std::string FreshName(const std::string& type) {
    const auto& pool = NamePool(type);
    for (int attempt = 0; attempt < 4; ++attempt) {
      const std::string& name = pool[rng_.Below(pool.size())];
      if (!Visible(name)) return name;
    }
    for (int k = 2;; ++k) {
      const std::string name = pool[rng_.Below(pool.size())] + std::to_string(k);
      if (!Visible(name)) return name;
    }
  }

  std::vector<const Var*> VarsOf(const std::string& type, bool assignable) {
    std::vector<const Var*> out;
    for (const auto& scope : scopes_) {
      for (const Var& v : scope) {
        if (v.type == type && (!assignable || v.assignable)) out.push_back(&v);
      }
    }
    return out;
  }

  const Var* PickVar(const std::string& type, bool assignable = false) {
    auto vars = VarsOf(type, assignable);
    if (vars.empty()) return nullptr;
    return vars[rng_.Below(vars.size())];
  }

  Expr IntLit(int64_t lo, int64_t hi) {
    return Expr::Literal(ExprKind::kIntLit, std::to_string(rng_.Range(lo, hi)));
  }

  Expr Call(int depth, const std::string& arg_type) {
    std::vector<Expr> args;
    const int nargs = static_cast<int>(rng_.Below(3));
    for (int i = 0; i < nargs; ++i) {
      args.push_back(Value(i == 0 ? arg_type : "int", depth - 1));
    }
    return Expr::Call(kCallees[rng_.Below(kCallees.size())], std::move(args));
  }

  Expr Value(const std::string& type, int depth) {
    if (type == "boolean") return Bool(depth);
    if (type == "String") return Str(depth);
    if (type == "long") {
      return Expr::Binary("*", Expr::Literal(ExprKind::kLongLit, "2L"),
                          Int(depth));
    }
    return Int(depth);
  }

  Expr Int(int depth) {
    const uint64_t r = rng_.Below(depth <= 0 ? 6 : 12);
    if (r < 2) return IntLit(0, 20);
    if (r < 6) {
      if (const Var* v = PickVar("int")) return Expr::Var(v->name);
      return IntLit(0, 9);
    }
    switch (r) {
      case 6:
      case 7: {
        static const char* kOps[] = {"+", "-", "*"};
        return Expr::Binary(kOps[rng_.Below(3)], Int(depth - 1), Int(depth - 1));
      }
      case 8:
        // Mostly literal divisors; a variable divisor can trap.
        return Expr::Binary(rng_.Coin() ? "/" : "%", Int(depth - 1),
                            rng_.Below(4) == 0 ? Int(depth - 1) : IntLit(1, 7));
      case 9:
        return Call(depth, "int");
      case 10:
        if (const Var* s = PickVar("String")) {
          return Expr::Call("length", {}, s->name);
        }
        return Expr::Var(kFields[rng_.Below(kFields.size())]);
      default:
        if (rng_.Coin()) return Expr::Unary("-", Int(depth - 1));
        return Expr::Ternary(Bool(depth - 1), Int(depth - 1), Int(depth - 1));
    }
  }

  Expr Bool(int depth) {
    const uint64_t r = rng_.Below(depth <= 0 ? 4 : 9);
    switch (r) {
      case 0:
        return Expr::Literal(ExprKind::kBoolLit, rng_.Coin() ? "true" : "false");
      case 1:
      case 2:
        if (const Var* v = PickVar("boolean")) return Expr::Var(v->name);
        [[fallthrough]];
      case 3: {
        static const char* kOps[] = {"<", "<=", ">", ">=", "==", "!="};
        return Expr::Binary(kOps[rng_.Below(6)], Int(0), IntLit(0, 10));
      }
      case 4:
        return Expr::Unary("!", Bool(depth - 1));
      case 5:
        return Expr::Binary(rng_.Coin() ? "&&" : "||", Bool(depth - 1),
                            Bool(depth - 1));
      case 6:
        return Expr::Call("check", {Int(depth - 1)});
      case 7:
        if (const Var* s = PickVar("String")) {
          return Expr::Binary("==", Expr::Var(s->name),
                              Expr::Literal(ExprKind::kStringLit,
                                            kStrings[rng_.Below(kStrings.size())]));
        }
        [[fallthrough]];
      default: {
        static const char* kOps[] = {"<", ">", "==", "!="};
        return Expr::Binary(kOps[rng_.Below(4)], Int(depth - 1), Int(depth - 1));
      }
    }
  }

  Expr Str(int depth) {
    const uint64_t r = rng_.Below(depth <= 0 ? 3 : 6);
    if (r == 0) {
      return Expr::Literal(ExprKind::kStringLit,
                           kStrings[rng_.Below(kStrings.size())]);
    }
    if (r < 3) {
      if (const Var* v = PickVar("String")) return Expr::Var(v->name);
      return Expr::Literal(ExprKind::kStringLit, "\"x\"");
    }
    if (r < 5) return Expr::Binary("+", Str(depth - 1), Int(depth - 1));
    return Expr::Call("format", {Int(depth - 1)});
  }

  Stmt Declare(const std::string& type, int depth, bool assignable = true) {
    const std::string name = FreshName(type);
    Stmt s = Stmt::VarDecl(type, name, Value(type, depth));
    scopes_.back().push_back(Var{name, type, assignable});
    return s;
  }

  std::vector<Stmt> Block(int depth, int min_len = 1) {
    scopes_.emplace_back();
    std::vector<Stmt> out;
    const int n = static_cast<int>(
        rng_.Range(min_len, std::max(min_len, options_.max_block - 2)));
    for (int i = 0; i < n; ++i) {
      for (Stmt& s : Statement(depth)) out.push_back(std::move(s));
    }
    scopes_.pop_back();
    return out;
  }

  Stmt Braced(int depth) { return Stmt::Block(Block(depth)); }

  std::optional<Stmt> Assignment(int depth) {
    const std::string type = RandomType();
    const Var* v = PickVar(type, /*assignable=*/true);
    if (!v) return std::nullopt;
    if (type == "int") {
      switch (rng_.Below(5)) {
        case 0: return Stmt::Assign(v->name, "++", std::nullopt);
        case 1: return Stmt::Assign(v->name, "--", std::nullopt);
        case 2: return Stmt::Assign(v->name, "+=", Int(depth));
        case 3: return Stmt::Assign(v->name, "-=", Int(depth));
        default: return Stmt::Assign(v->name, "=", Int(depth));
      }
    }
    if (type == "String" && rng_.Coin()) {
      return Stmt::Assign(v->name, "+=", Int(depth - 1));
    }
    return Stmt::Assign(v->name, "=", Value(type, depth));
  }

  Stmt ForLoop(int depth) {
    scopes_.emplace_back();
    const std::string i = FreshName("int");
    Stmt f;
    f.kind = StmtKind::kFor;
    f.init.push_back(Stmt::VarDecl("int", i, IntLit(0, 1)));
    scopes_.back().push_back(Var{i, "int", false});
    f.expr = Expr::Binary("<", Expr::Var(i), IntLit(1, 4));
    f.update.push_back(Stmt::Assign(i, "++", std::nullopt));
    loops_.push_back(StmtKind::kFor);
    f.body.push_back(Braced(depth - 1));
    loops_.pop_back();
    scopes_.pop_back();
    return f;
  }

  // A counter-bounded while or do-while, preceded by the counter.
  std::vector<Stmt> CountedLoop(int depth, bool do_while) {
    std::vector<Stmt> out;
    const std::string k = FreshName("int");
    out.push_back(Stmt::VarDecl("int", k, IntLit(0, 0)));
    scopes_.back().push_back(Var{k, "int", false});
    loops_.push_back(do_while ? StmtKind::kDoWhile : StmtKind::kWhile);
    std::vector<Stmt> body = Block(depth - 1);
    loops_.pop_back();
    body.push_back(Stmt::Assign(k, "++", std::nullopt));
    Expr cond = Expr::Binary("<", Expr::Var(k), IntLit(1, 4));
    if (do_while) {
      Stmt d;
      d.kind = StmtKind::kDoWhile;
      d.expr = std::move(cond);
      d.body.push_back(Stmt::Block(std::move(body)));
      out.push_back(std::move(d));
    } else {
      out.push_back(Stmt::While(std::move(cond), Stmt::Block(std::move(body))));
    }
    return out;
  }

  Stmt Switch(int depth, bool force_eligible) {
    const bool on_string = !force_eligible && PickVar("String") && rng_.Coin();
    Stmt s;
    s.kind = StmtKind::kSwitch;
    if (on_string) {
      s.expr = Expr::Var(PickVar("String")->name);
    } else if (const Var* v = PickVar("int"); v && rng_.Below(4) != 0) {
      s.expr = Expr::Var(v->name);
    } else {
      s.expr = Int(1);
    }
    const int ncases = static_cast<int>(rng_.Range(1, 4));
    std::vector<int64_t> labels;
    while (static_cast<int>(labels.size()) < ncases) {
      const int64_t l = rng_.Range(-1, 6);
      if (std::find(labels.begin(), labels.end(), l) == labels.end()) {
        labels.push_back(l);
      }
    }
    loops_.push_back(StmtKind::kSwitch);
    const size_t reserved_mark = reserved_.size();
    const bool with_default = rng_.Below(3) != 0;
    for (int c = 0; c <= ncases; ++c) {
      SwitchCase sc;
      if (c == ncases) {
        if (!with_default) break;
      } else if (on_string) {
        sc.label = Expr::Literal(ExprKind::kStringLit,
                                 kStrings[static_cast<size_t>(labels[c] + 1) %
                                          kStrings.size()]);
      } else if (labels[c] < 0) {
        sc.label = Expr::Unary("-", Expr::Literal(ExprKind::kIntLit, "1"));
      } else {
        sc.label = Expr::Literal(ExprKind::kIntLit, std::to_string(labels[c]));
      }
      // An empty clause falls into the next one.
      if (c + 1 < ncases && rng_.Below(4) == 0) {
        s.cases.push_back(std::move(sc));
        continue;
      }
      scopes_.emplace_back();
      const int n = static_cast<int>(rng_.Range(1, 2));
      for (int i = 0; i < n; ++i) {
        for (Stmt& st : Statement(depth - 1)) sc.body.push_back(std::move(st));
      }
      const uint64_t end = rng_.Below(10);
      if (end < 7 || force_eligible) {
        sc.body.push_back(Stmt::Jump(StmtKind::kBreak));
      } else if (end < 9 && return_type_ != "void") {
        sc.body.push_back(Stmt::Return(Value(return_type_, 1)));
      }  // else fall through
      // Clauses share one Java scope, so their names stay taken.
      for (const Var& v : scopes_.back()) reserved_.push_back(v.name);
      scopes_.pop_back();
      s.cases.push_back(std::move(sc));
    }
    loops_.pop_back();
    reserved_.resize(reserved_mark);
    return s;
  }

  bool InLoop() const {
    return !loops_.empty() && loops_.back() != StmtKind::kSwitch;
  }

  std::vector<Stmt> Statement(int depth) {
    const uint64_t r = rng_.Below(depth <= 0 ? 10 : 20);
    std::vector<Stmt> out;
    switch (r) {
      case 0: case 1: case 2: case 3:
        out.push_back(Declare(RandomType(), 2));
        break;
      case 4: case 5: case 6: case 7:
        if (auto a = Assignment(2)) {
          out.push_back(std::move(*a));
        } else {
          out.push_back(Declare("int", 1));
        }
        break;
      case 8:
        out.push_back(Stmt::ExprStmt(Call(2, RandomType())));
        break;
      case 9:
        if (rng_.Coin()) {
          // A field write.
          out.push_back(Stmt::Assign(kFields[rng_.Below(kFields.size())], "=",
                                     Int(1)));
        } else {
          out.push_back(Declare("int", 1));
        }
        break;
      case 10: case 11: case 12: {
        Expr cond = Bool(2);
        Stmt then_stmt = Braced(depth - 1);
        std::optional<Stmt> else_stmt;
        if (rng_.Coin()) else_stmt = Braced(depth - 1);
        out.push_back(Stmt::If(std::move(cond), std::move(then_stmt),
                               std::move(else_stmt)));
        break;
      }
      case 13: case 14:
        out.push_back(ForLoop(depth));
        break;
      case 15:
        for (Stmt& s : CountedLoop(depth, rng_.Below(3) == 0)) {
          out.push_back(std::move(s));
        }
        break;
      case 16:
        out.push_back(Switch(depth, false));
        break;
      case 17:
        out.push_back(Braced(depth - 1));
        break;
      case 18:
        if (InLoop()) {
          // continue would skip a counted loop's increment.
          const bool cont = loops_.back() == StmtKind::kFor && rng_.Coin();
          out.push_back(Stmt::If(Bool(1),
                                 Stmt::Block({Stmt::Jump(
                                     cont ? StmtKind::kContinue
                                          : StmtKind::kBreak)}),
                                 std::nullopt));
          break;
        }
        [[fallthrough]];
      default:
        if (return_type_ == "void") {
          out.push_back(Stmt::If(Bool(1), Stmt::Block({Stmt::Return(std::nullopt)}),
                                 std::nullopt));
        } else {
          out.push_back(Stmt::If(Bool(1),
                                 Stmt::Block({Stmt::Return(Value(return_type_, 1))}),
                                 std::nullopt));
        }
        break;
    }
    return out;
  }

  std::vector<Stmt> Focus(TransformKind kind) {
    std::vector<Stmt> out;
    switch (kind) {
      case TransformKind::kVariableRenaming:
      case TransformKind::kUnusedStatement:
        out.push_back(Declare(RandomType(), 2));
        break;
      case TransformKind::kBooleanExchange: {
        out.push_back(Declare("boolean", 2));
        const std::string flag = scopes_.back().back().name;
        Stmt body = Braced(1);
        if (rng_.Coin()) {
          body.body.push_back(Stmt::Assign(flag, "=", Bool(1)));
        }
        out.push_back(Stmt::If(
            rng_.Coin() ? Expr::Var(flag) : Expr::Unary("!", Expr::Var(flag)),
            std::move(body), std::nullopt));
        break;
      }
      case TransformKind::kLoopExchange:
        if (rng_.Coin()) {
          out.push_back(ForLoop(2));
        } else {
          for (Stmt& s : CountedLoop(2, false)) out.push_back(std::move(s));
        }
        break;
      case TransformKind::kSwitchToIf:
        out.push_back(Switch(2, true));
        break;
      case TransformKind::kPermuteStatement:
        out.push_back(Declare("int", 1));
        out.push_back(Declare(RandomType(), 0));
        break;
    }
    return out;
  }

  Rng rng_;
  GeneratorOptions options_;
  std::string return_type_;
  std::vector<std::vector<Var>> scopes_;
  std::vector<StmtKind> loops_;
  std::vector<std::string> reserved_;
};

}  // namespace

MethodAst GenerateMethod(uint64_t seed, const GeneratorOptions& options) {
  return Generator(seed, options).Run();
}

std::vector<MethodAst> GenerateFixtures(TransformKind focus, int count,
                                        uint64_t seed) {
  std::vector<MethodAst> out;
  GeneratorOptions options;
  options.focus = focus;
  for (uint64_t i = 0; static_cast<int>(out.size()) < count; ++i) {
    MethodAst m = GenerateMethod(DeriveSeed(seed, "fixture|" + std::to_string(i)),
                                 options);
    if (!EnumerateSites(m, focus).empty()) out.push_back(std::move(m));
  }
  return out;
}

}  // namespace codemorph
