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

#include "codemorph/printer.h"

#include <sstream>

namespace codemorph {
namespace {

constexpr int kTernaryPrec = 0;
constexpr int kUnaryPrec = 7;
constexpr int kPrimaryPrec = 8;

int Precedence(const Expr& e) {
  switch (e.kind) {
    case ExprKind::kTernary:
      return kTernaryPrec;
    case ExprKind::kUnary:
      return kUnaryPrec;
    case ExprKind::kBinary: {
      const std::string& op = e.text;
      if (op == "||") return 1;
      if (op == "&&") return 2;
      if (op == "==" || op == "!=") return 3;
      if (op == "<" || op == "<=" || op == ">" || op == ">=") return 4;
      if (op == "+" || op == "-") return 5;
      return 6;
    }
    default:
      return kPrimaryPrec;
  }
}

void Emit(const Expr& e, int min_prec, std::string& out) {
  const bool parens = Precedence(e) < min_prec;
  if (parens) out += '(';
  switch (e.kind) {
    case ExprKind::kUnary: {
      out += e.text;
      const Expr& operand = e.children[0];
      // "- -x" would re-lex as a decrement.
      if (e.text == "-" && operand.kind == ExprKind::kUnary &&
          operand.text == "-") {
        out += '(';
        Emit(operand, kTernaryPrec, out);
        out += ')';
      } else {
        Emit(operand, kUnaryPrec, out);
      }
      break;
    }
    case ExprKind::kBinary: {
      const int p = Precedence(e);
      Emit(e.children[0], p, out);
      out += ' ';
      out += e.text;
      out += ' ';
      Emit(e.children[1], p + 1, out);
      break;
    }
    case ExprKind::kTernary:
      Emit(e.children[0], kTernaryPrec + 1, out);
      out += " ? ";
      Emit(e.children[1], kTernaryPrec, out);
      out += " : ";
      Emit(e.children[2], kTernaryPrec, out);
      break;
    case ExprKind::kCall:
      if (!e.qualifier.empty()) {
        out += e.qualifier;
        out += '.';
      }
      out += e.text;
      out += '(';
      for (size_t i = 0; i < e.children.size(); ++i) {
        if (i) out += ", ";
        Emit(e.children[i], kTernaryPrec, out);
      }
      out += ')';
      break;
    default:
      out += e.text;
      break;
  }
  if (parens) out += ')';
}

class StmtPrinter {
 public:
  std::string Take() { return std::move(out_); }

  void Line(int depth, const std::string& text) {
    Indent(depth);
    out_ += text;
    out_ += '\n';
  }

  void Indent(int depth) { out_.append(static_cast<size_t>(depth) * 4, ' '); }

  // Header form used both as a statement and inside a for-loop header.
  static std::string Simple(const Stmt& s) {
    std::string text;
    switch (s.kind) {
      case StmtKind::kVarDecl:
        text = s.type + " " + s.name;
        if (s.expr) text += " = " + PrintExpr(*s.expr);
        break;
      case StmtKind::kAssign:
        if (s.op == "++" || s.op == "--") {
          text = s.name + s.op;
        } else {
          text = s.name + " " + s.op + " " + PrintExpr(*s.expr);
        }
        break;
      default:
        break;
    }
    return text;
  }

  // Emits `{ ... }` where the opening brace continues the current line.
  void BlockTail(const Stmt& block, int depth) {
    out_ += "{\n";
    for (const Stmt& child : block.body) Statement(child, depth + 1);
    Indent(depth);
    out_ += '}';
  }

  // Body of a compound statement, after its header text on the same line.
  // Returns true if it ended with a closing brace.
  bool Body(const Stmt& body, int depth) {
    if (body.kind == StmtKind::kBlock) {
      out_ += ' ';
      BlockTail(body, depth);
      return true;
    }
    out_ += '\n';
    StmtNoNewline(body, depth + 1);
    return false;
  }

  void Statement(const Stmt& s, int depth) {
    StmtNoNewline(s, depth);
    out_ += '\n';
  }

  void StmtNoNewline(const Stmt& s, int depth) {
    Indent(depth);
    Continue(s, depth);
  }

  // Prints |s| assuming indentation for its first line is already emitted.
  void Continue(const Stmt& s, int depth) {
    switch (s.kind) {
      case StmtKind::kVarDecl:
      case StmtKind::kAssign:
        out_ += Simple(s) + ";";
        return;
      case StmtKind::kExprStmt:
        out_ += PrintExpr(*s.expr) + ";";
        return;
      case StmtKind::kReturn:
        out_ += s.expr ? "return " + PrintExpr(*s.expr) + ";" : "return;";
        return;
      case StmtKind::kBreak:
        out_ += "break;";
        return;
      case StmtKind::kContinue:
        out_ += "continue;";
        return;
      case StmtKind::kBlock:
        BlockTail(s, depth);
        return;
      case StmtKind::kIf: {
        out_ += "if (" + PrintExpr(*s.expr) + ")";
        const bool braced = Body(s.body[0], depth);
        if (!s.else_body.empty()) {
          if (braced) {
            out_ += " else";
          } else {
            out_ += '\n';
            Indent(depth);
            out_ += "else";
          }
          const Stmt& e = s.else_body[0];
          if (e.kind == StmtKind::kIf) {
            out_ += ' ';
            Continue(e, depth);
          } else {
            Body(e, depth);
          }
        }
        return;
      }
      case StmtKind::kWhile:
        out_ += "while (" + PrintExpr(*s.expr) + ")";
        Body(s.body[0], depth);
        return;
      case StmtKind::kDoWhile: {
        out_ += "do";
        const bool braced = Body(s.body[0], depth);
        if (braced) {
          out_ += ' ';
        } else {
          out_ += '\n';
          Indent(depth);
        }
        out_ += "while (" + PrintExpr(*s.expr) + ");";
        return;
      }
      case StmtKind::kFor: {
        std::string header = "for (";
        if (!s.init.empty()) header += Simple(s.init[0]);
        header += ";";
        if (s.expr) header += " " + PrintExpr(*s.expr);
        header += ";";
        if (!s.update.empty()) header += " " + Simple(s.update[0]);
        header += ")";
        out_ += header;
        Body(s.body[0], depth);
        return;
      }
      case StmtKind::kSwitch:
        out_ += "switch (" + PrintExpr(*s.expr) + ") {\n";
        for (const SwitchCase& c : s.cases) {
          Line(depth + 1, c.label ? "case " + PrintExpr(*c.label) + ":"
                                  : std::string("default:"));
          for (const Stmt& child : c.body) Statement(child, depth + 2);
        }
        Indent(depth);
        out_ += '}';
        return;
      case StmtKind::kTry:
        out_ += "try ";
        BlockTail(s.body[0], depth);
        for (const CatchClause& c : s.catches) {
          out_ += " catch (" + c.type + " " + c.name + ") ";
          BlockTail(c.block[0], depth);
        }
        if (!s.else_body.empty()) {
          out_ += " finally ";
          BlockTail(s.else_body[0], depth);
        }
        return;
    }
  }

 private:
  std::string out_;
};

}  // namespace

std::string PrintExpr(const Expr& expr) {
  std::string out;
  Emit(expr, kTernaryPrec, out);
  return out;
}

std::string PrintStmt(const Stmt& stmt, int depth) {
  StmtPrinter p;
  p.StmtNoNewline(stmt, depth);
  return p.Take();
}

std::string PrintMethod(const MethodAst& method) {
  std::string out = method.return_type + " " + method.name + "(";
  for (size_t i = 0; i < method.params.size(); ++i) {
    if (i) out += ", ";
    out += method.params[i].type + " " + method.params[i].name;
  }
  out += ") ";
  StmtPrinter p;
  p.BlockTail(method.body, 0);
  return out + p.Take();
}

}  // namespace codemorph
