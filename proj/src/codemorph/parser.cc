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

#include "codemorph/parser.h"

#include <algorithm>
#include <optional>
#include <set>
#include <utility>

#include "codemorph/errors.h"
#include "codemorph/lexer.h"

namespace codemorph {
namespace {

constexpr std::string_view kModifiers[] = {
    "public", "private",  "protected", "static",  "final",
    "synchronized", "abstract", "native", "strictfp", "transient",
    "volatile"};

bool IsModifier(const Token& t) {
  if (t.kind != TokenKind::kIdentifier) return false;
  return std::find(std::begin(kModifiers), std::end(kModifiers), t.lexeme) !=
         std::end(kModifiers);
}

bool IsBuiltinType(const Token& t) {
  return t.kind == TokenKind::kKeyword &&
         (t.lexeme == "int" || t.lexeme == "long" || t.lexeme == "double" ||
          t.lexeme == "boolean" || t.lexeme == "String");
}

bool IsUnsupportedPrimitive(const Token& t) {
  return t.kind == TokenKind::kIdentifier &&
         (t.lexeme == "char" || t.lexeme == "float" || t.lexeme == "byte" ||
          t.lexeme == "short");
}

// Identifiers that are Java keywords outside the subset.
bool IsForeignKeyword(const Token& t) {
  static const std::set<std::string, std::less<>> kForeign = {
      "this",   "super",  "class",  "interface", "enum",    "throw",
      "assert", "instanceof", "goto", "const",   "var",     "yield",
      "import", "package", "extends", "implements", "throws"};
  return t.kind == TokenKind::kIdentifier && kForeign.count(t.lexeme) > 0;
}

int BinaryPrecedence(std::string_view op) {
  if (op == "||") return 1;
  if (op == "&&") return 2;
  if (op == "==" || op == "!=") return 3;
  if (op == "<" || op == "<=" || op == ">" || op == ">=") return 4;
  if (op == "+" || op == "-") return 5;
  if (op == "*" || op == "/" || op == "%") return 6;
  return -1;
}

bool IsAssignOp(std::string_view op) {
  return op == "=" || op == "+=" || op == "-=" || op == "*=" || op == "/=" ||
         op == "%=" || op == "&=" || op == "|=" || op == "^=" ||
         op == "<<=" || op == ">>=" || op == ">>>=";
}

class Parser {
 public:
  Parser(const std::vector<Token>& tokens, size_t begin, size_t end)
      : toks_(tokens), pos_(begin), end_(end) {}

  MethodAst ParseMethodDecl() {
    SkipModifiersAndAnnotations();
    if (AtOp("<")) Unsupported(Cur(), "generic method");
    MethodAst m;
    const Token& type_tok = Cur();
    m.return_type = ParseType(/*allow_void=*/true);
    if (AtPunct("(")) Unsupported(type_tok, "constructor");
    m.name = ExpectIdentifier("method name");
    Expect(TokenKind::kPunctuation, "(");
    std::set<std::string> seen;
    if (!AtPunct(")")) {
      while (true) {
        SkipModifiersAndAnnotations();
        Param p;
        p.type = ParseType(/*allow_void=*/false);
        if (AtPunct(".")) Unsupported(Cur(), "varargs parameter");
        const Token& name_tok = Cur();
        p.name = ExpectIdentifier("parameter name");
        if (AtPunct("[")) Unsupported(Cur(), "array");
        if (!seen.insert(p.name).second) {
          throw ParseError(name_tok.line, name_tok.col,
                           "distinct parameter name", p.name);
        }
        m.params.push_back(std::move(p));
        if (AtPunct(",")) {
          ++pos_;
          continue;
        }
        break;
      }
    }
    Expect(TokenKind::kPunctuation, ")");
    if (AtPunct("[")) Unsupported(Cur(), "array");
    if (AtIdent("throws")) {
      ++pos_;
      ParseQualifiedName();
      while (AtPunct(",")) {
        ++pos_;
        ParseQualifiedName();
      }
    }
    if (AtPunct(";")) Unsupported(Cur(), "method without body");
    m.body = ParseBlock();
    if (pos_ != end_) {
      throw ParseError(Cur().line, Cur().col, "end of method", Cur().lexeme);
    }
    AssignNodeIds(m);
    return m;
  }

 private:
  // --- token helpers -------------------------------------------------------

  bool AtEnd() const { return pos_ >= end_; }

  const Token& Cur() const {
    static const Token kEof{TokenKind::kPunctuation, "end of input", 0, 0};
    if (AtEnd()) {
      if (end_ > 0 && end_ <= toks_.size()) {
        static thread_local Token eof;
        const Token& last = toks_[end_ - 1];
        eof = Token{TokenKind::kPunctuation, "end of input", last.line,
                    last.col + static_cast<int>(last.lexeme.size())};
        return eof;
      }
      return kEof;
    }
    return toks_[pos_];
  }

  const Token* PeekTok(size_t ahead) const {
    return pos_ + ahead < end_ ? &toks_[pos_ + ahead] : nullptr;
  }

  bool At(TokenKind k, std::string_view text) const {
    return !AtEnd() && toks_[pos_].Is(k, text);
  }
  bool AtPunct(std::string_view p) const {
    return At(TokenKind::kPunctuation, p);
  }
  bool AtOp(std::string_view p) const { return At(TokenKind::kOperator, p); }
  bool AtKeyword(std::string_view p) const {
    return At(TokenKind::kKeyword, p);
  }
  bool AtIdent(std::string_view p) const {
    return At(TokenKind::kIdentifier, p);
  }

  [[noreturn]] void Fail(std::string_view expected) const {
    const Token& t = Cur();
    throw ParseError(t.line, t.col, std::string(expected), t.lexeme);
  }

  [[noreturn]] static void Unsupported(const Token& at,
                                       const std::string& what) {
    throw UnsupportedConstruct(at.line, at.col, what);
  }

  void Expect(TokenKind kind, std::string_view text) {
    if (!At(kind, text)) Fail("'" + std::string(text) + "'");
    ++pos_;
  }

  std::string ExpectIdentifier(std::string_view what) {
    if (AtEnd() || Cur().kind != TokenKind::kIdentifier) Fail(what);
    if (IsForeignKeyword(Cur())) Unsupported(Cur(), "keyword " + Cur().lexeme);
    return toks_[pos_++].lexeme;
  }

  void SkipModifiersAndAnnotations() {
    while (!AtEnd()) {
      if (IsModifier(Cur())) {
        ++pos_;
      } else if (AtPunct("@")) {
        ++pos_;
        ParseQualifiedName();
        if (AtPunct("(")) SkipBalanced("(", ")");
      } else {
        break;
      }
    }
  }

  void SkipBalanced(std::string_view open, std::string_view close) {
    int depth = 0;
    do {
      if (AtEnd()) Fail("'" + std::string(close) + "'");
      if (AtPunct(open)) ++depth;
      if (AtPunct(close)) --depth;
      ++pos_;
    } while (depth > 0);
  }

  std::string ParseQualifiedName() {
    std::string name = ExpectIdentifier("name");
    while (AtPunct(".")) {
      ++pos_;
      name += "." + ExpectIdentifier("name");
    }
    return name;
  }

  std::string ParseType(bool allow_void) {
    if (AtEnd()) Fail("type");
    const Token& t = Cur();
    std::string type;
    if (IsBuiltinType(t) || (allow_void && t.Is(TokenKind::kKeyword, "void"))) {
      type = t.lexeme;
      ++pos_;
    } else if (IsUnsupportedPrimitive(t)) {
      Unsupported(t, "primitive type " + t.lexeme);
    } else if (t.kind == TokenKind::kIdentifier && !IsModifier(t)) {
      if (t.lexeme == "var") Unsupported(t, "local type inference");
      type = ParseQualifiedName();
    } else {
      Fail("type");
    }
    if (AtOp("<")) Unsupported(Cur(), "generics");
    if (AtPunct("[")) Unsupported(Cur(), "array");
    return type;
  }

  // --- statements ----------------------------------------------------------

  Stmt ParseBlock() {
    Expect(TokenKind::kPunctuation, "{");
    Stmt block = Stmt::Block({});
    while (!AtPunct("}")) {
      if (AtEnd()) Fail("'}'");
      block.body.push_back(ParseStatement());
    }
    ++pos_;
    return block;
  }

  // True when the tokens at the cursor start a local variable declaration.
  bool AtDeclarationStart() const {
    if (AtEnd()) return false;
    const Token& t = Cur();
    if (IsBuiltinType(t)) {
      const Token* next = PeekTok(1);
      return !(t.lexeme == "String" && next &&
               next->Is(TokenKind::kPunctuation, "."));
    }
    if (IsUnsupportedPrimitive(t)) return true;
    if (t.kind != TokenKind::kIdentifier || IsForeignKeyword(t)) return false;
    if (t.lexeme == "final") return true;
    // Qualified or simple class type followed by a declarator name.
    size_t i = 1;
    while (true) {
      const Token* next = PeekTok(i);
      if (!next) return false;
      if (next->kind == TokenKind::kIdentifier) return true;
      if (next->Is(TokenKind::kOperator, "<") ||
          next->Is(TokenKind::kPunctuation, "[")) {
        // Only a declaration can follow `Ident <` or `Ident [` at statement
        // start; ParseType reports the exact construct.
        const Token* after = PeekTok(i + 1);
        return next->lexeme == "<" ||
               (after && after->Is(TokenKind::kPunctuation, "]"));
      }
      if (!next->Is(TokenKind::kPunctuation, ".")) return false;
      const Token* seg = PeekTok(i + 1);
      if (!seg || seg->kind != TokenKind::kIdentifier) return false;
      i += 2;
    }
  }

  Stmt ParseLocalDecl() {
    while (AtIdent("final") || AtPunct("@")) SkipModifiersAndAnnotations();
    std::string type = ParseType(/*allow_void=*/false);
    std::string name = ExpectIdentifier("variable name");
    if (AtPunct("[")) Unsupported(Cur(), "array");
    std::optional<Expr> init;
    if (AtOp("=")) {
      ++pos_;
      if (AtPunct("{")) Unsupported(Cur(), "array initializer");
      init = ParseExpr();
    }
    if (AtPunct(",")) Unsupported(Cur(), "multiple declarators");
    if (AtOp(":")) Unsupported(Cur(), "enhanced for");
    return Stmt::VarDecl(std::move(type), std::move(name), std::move(init));
  }

  // `x op= e`, `x++`, `x--`, `++x`, `--x` without the trailing `;`.
  std::optional<Stmt> TryParseAssignment() {
    if (AtOp("++") || AtOp("--")) {
      std::string op = Cur().lexeme;
      ++pos_;
      std::string target = ExpectIdentifier("variable");
      if (AtPunct(".") || AtPunct("[")) Unsupported(Cur(), "field assignment");
      return Stmt::Assign(std::move(target), std::move(op), std::nullopt);
    }
    if (AtEnd() || Cur().kind != TokenKind::kIdentifier ||
        IsForeignKeyword(Cur())) {
      return std::nullopt;
    }
    const Token* next = PeekTok(1);
    if (!next) return std::nullopt;
    if (next->kind == TokenKind::kOperator &&
        (next->lexeme == "++" || next->lexeme == "--")) {
      std::string target = toks_[pos_].lexeme;
      std::string op = next->lexeme;
      pos_ += 2;
      return Stmt::Assign(std::move(target), std::move(op), std::nullopt);
    }
    if (next->kind == TokenKind::kOperator && IsAssignOp(next->lexeme)) {
      if (next->lexeme != "=" && next->lexeme != "+=" &&
          next->lexeme != "-=" && next->lexeme != "*=" &&
          next->lexeme != "/=" && next->lexeme != "%=") {
        Unsupported(*next, "compound operator " + next->lexeme);
      }
      std::string target = toks_[pos_].lexeme;
      std::string op = next->lexeme;
      pos_ += 2;
      return Stmt::Assign(std::move(target), std::move(op), ParseExpr());
    }
    return std::nullopt;
  }

  Stmt ParseStatement() {
    if (AtEnd()) Fail("statement");
    const Token& t = Cur();
    if (AtPunct("{")) return ParseBlock();
    if (AtPunct(";")) Unsupported(t, "empty statement");
    if (t.kind == TokenKind::kKeyword) {
      const std::string& kw = t.lexeme;
      if (kw == "if") return ParseIf();
      if (kw == "while") return ParseWhile();
      if (kw == "do") return ParseDoWhile();
      if (kw == "for") return ParseFor();
      if (kw == "switch") return ParseSwitch();
      if (kw == "try") return ParseTry();
      if (kw == "return") {
        ++pos_;
        std::optional<Expr> value;
        if (!AtPunct(";")) value = ParseExpr();
        Expect(TokenKind::kPunctuation, ";");
        return Stmt::Return(std::move(value));
      }
      if (kw == "break" || kw == "continue") {
        ++pos_;
        if (!AtEnd() && Cur().kind == TokenKind::kIdentifier) {
          Unsupported(Cur(), "labeled " + kw);
        }
        Expect(TokenKind::kPunctuation, ";");
        return Stmt::Jump(kw == "break" ? StmtKind::kBreak
                                        : StmtKind::kContinue);
      }
      if (kw == "new") Unsupported(t, "object creation");
    }
    if (t.kind == TokenKind::kIdentifier) {
      if (IsForeignKeyword(t)) Unsupported(t, "keyword " + t.lexeme);
      const Token* next = PeekTok(1);
      if (next && next->Is(TokenKind::kOperator, ":")) {
        Unsupported(t, "labeled statement");
      }
    }
    if (AtDeclarationStart()) {
      Stmt decl = ParseLocalDecl();
      Expect(TokenKind::kPunctuation, ";");
      return decl;
    }
    if (auto assign = TryParseAssignment()) {
      Expect(TokenKind::kPunctuation, ";");
      return std::move(*assign);
    }
    const Token& start = Cur();
    Expr e = ParseExpr();
    if (!AtEnd() && Cur().kind == TokenKind::kOperator &&
        IsAssignOp(Cur().lexeme)) {
      Unsupported(Cur(), "field assignment");
    }
    if (e.kind != ExprKind::kCall) {
      throw ParseError(start.line, start.col, "statement", start.lexeme);
    }
    Expect(TokenKind::kPunctuation, ";");
    return Stmt::ExprStmt(std::move(e));
  }

  Expr ParseParenCondition() {
    Expect(TokenKind::kPunctuation, "(");
    Expr cond = ParseExpr();
    Expect(TokenKind::kPunctuation, ")");
    return cond;
  }

  Stmt ParseIf() {
    ++pos_;
    Expr cond = ParseParenCondition();
    Stmt then_stmt = ParseStatement();
    std::optional<Stmt> else_stmt;
    if (AtKeyword("else")) {
      ++pos_;
      else_stmt = ParseStatement();
    }
    return Stmt::If(std::move(cond), std::move(then_stmt),
                    std::move(else_stmt));
  }

  Stmt ParseWhile() {
    ++pos_;
    Expr cond = ParseParenCondition();
    return Stmt::While(std::move(cond), ParseStatement());
  }

  Stmt ParseDoWhile() {
    ++pos_;
    Stmt s;
    s.kind = StmtKind::kDoWhile;
    s.body.push_back(ParseStatement());
    Expect(TokenKind::kKeyword, "while");
    s.expr = ParseParenCondition();
    Expect(TokenKind::kPunctuation, ";");
    return s;
  }

  Stmt ParseFor() {
    ++pos_;
    Expect(TokenKind::kPunctuation, "(");
    Stmt s;
    s.kind = StmtKind::kFor;
    if (!AtPunct(";")) {
      if (AtDeclarationStart()) {
        s.init.push_back(ParseLocalDecl());
      } else if (auto assign = TryParseAssignment()) {
        s.init.push_back(std::move(*assign));
      } else {
        Unsupported(Cur(), "non-assignment for initializer");
      }
      if (AtPunct(",")) Unsupported(Cur(), "comma in for initializer");
    }
    Expect(TokenKind::kPunctuation, ";");
    if (!AtPunct(";")) s.expr = ParseExpr();
    Expect(TokenKind::kPunctuation, ";");
    if (!AtPunct(")")) {
      if (auto assign = TryParseAssignment()) {
        s.update.push_back(std::move(*assign));
      } else {
        Unsupported(Cur(), "non-assignment for update");
      }
      if (AtPunct(",")) Unsupported(Cur(), "comma in for update");
    }
    Expect(TokenKind::kPunctuation, ")");
    s.body.push_back(ParseStatement());
    return s;
  }

  Expr ParseCaseLabel() {
    const Token& t = Cur();
    if (AtOp("-")) {
      ++pos_;
      Expr lit = ParseCaseLabel();
      if (lit.kind != ExprKind::kIntLit && lit.kind != ExprKind::kLongLit) {
        Fail("integer literal");
      }
      return Expr::Unary("-", std::move(lit));
    }
    if (t.kind == TokenKind::kLiteral) return ParseLiteral();
    if (t.kind == TokenKind::kIdentifier) {
      Unsupported(t, "non-literal case label");
    }
    Fail("case label");
  }

  Stmt ParseSwitch() {
    const Token& kw = Cur();
    ++pos_;
    Stmt s;
    s.kind = StmtKind::kSwitch;
    s.expr = ParseParenCondition();
    Expect(TokenKind::kPunctuation, "{");
    bool has_default = false;
    while (!AtPunct("}")) {
      if (AtEnd()) Fail("'}'");
      SwitchCase c;
      if (AtKeyword("case")) {
        ++pos_;
        c.label = ParseCaseLabel();
        if (AtPunct(",")) Unsupported(Cur(), "multiple case labels");
      } else if (AtKeyword("default")) {
        if (has_default) {
          throw ParseError(Cur().line, Cur().col, "at most one default clause",
                           "default");
        }
        has_default = true;
        ++pos_;
      } else {
        Fail("'case' or 'default'");
      }
      if (AtOp("->")) Unsupported(Cur(), "arrow switch");
      Expect(TokenKind::kOperator, ":");
      while (!AtKeyword("case") && !AtKeyword("default") && !AtPunct("}")) {
        if (AtEnd()) Fail("'}'");
        c.body.push_back(ParseStatement());
      }
      s.cases.push_back(std::move(c));
    }
    ++pos_;
    (void)kw;
    return s;
  }

  Stmt ParseTry() {
    const Token& kw = Cur();
    ++pos_;
    if (AtPunct("(")) Unsupported(Cur(), "try-with-resources");
    Stmt s;
    s.kind = StmtKind::kTry;
    s.body.push_back(ParseBlock());
    while (AtKeyword("catch")) {
      ++pos_;
      Expect(TokenKind::kPunctuation, "(");
      SkipModifiersAndAnnotations();
      CatchClause c;
      c.type = ParseQualifiedName();
      if (AtOp("|")) Unsupported(Cur(), "multi-catch");
      c.name = ExpectIdentifier("exception variable");
      Expect(TokenKind::kPunctuation, ")");
      c.block.push_back(ParseBlock());
      s.catches.push_back(std::move(c));
    }
    if (AtKeyword("finally")) {
      ++pos_;
      s.else_body.push_back(ParseBlock());
    }
    if (s.catches.empty() && s.else_body.empty()) {
      throw ParseError(kw.line, kw.col, "'catch' or 'finally'", Cur().lexeme);
    }
    return s;
  }

  // --- expressions ---------------------------------------------------------

  Expr ParseExpr() {
    Expr cond = ParseBinary(1);
    if (AtOp("?")) {
      ++pos_;
      Expr then_expr = ParseExpr();
      Expect(TokenKind::kOperator, ":");
      Expr else_expr = ParseExpr();
      return Expr::Ternary(std::move(cond), std::move(then_expr),
                           std::move(else_expr));
    }
    if (AtOp("->")) Unsupported(Cur(), "lambda");
    return cond;
  }

  Expr ParseBinary(int min_prec) {
    Expr lhs = ParseUnary();
    while (!AtEnd()) {
      const Token& t = Cur();
      if (t.kind == TokenKind::kIdentifier && t.lexeme == "instanceof") {
        Unsupported(t, "instanceof");
      }
      if (t.kind != TokenKind::kOperator) break;
      if (t.lexeme == "&" || t.lexeme == "|" || t.lexeme == "^" ||
          t.lexeme == "<<" || t.lexeme == ">>" || t.lexeme == ">>>") {
        Unsupported(t, "bitwise operator " + t.lexeme);
      }
      if (IsAssignOp(t.lexeme)) Unsupported(t, "assignment expression");
      if (t.lexeme == "++" || t.lexeme == "--") {
        Unsupported(t, "increment expression");
      }
      int prec = BinaryPrecedence(t.lexeme);
      if (prec < 0 || prec < min_prec) break;
      std::string op = t.lexeme;
      ++pos_;
      Expr rhs = ParseBinary(prec + 1);
      lhs = Expr::Binary(std::move(op), std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  bool LooksLikeCast() const {
    // `(` Type `)` followed by something that can start an operand.
    const Token* type = PeekTok(1);
    const Token* close = PeekTok(2);
    if (!type || !close || !close->Is(TokenKind::kPunctuation, ")")) {
      return false;
    }
    if (IsBuiltinType(*type) || IsUnsupportedPrimitive(*type)) return true;
    if (type->kind != TokenKind::kIdentifier) return false;
    const Token* after = PeekTok(3);
    if (!after) return false;
    return after->kind == TokenKind::kIdentifier ||
           after->kind == TokenKind::kLiteral ||
           after->Is(TokenKind::kPunctuation, "(") ||
           (after->kind == TokenKind::kKeyword &&
            (after->lexeme == "true" || after->lexeme == "false" ||
             after->lexeme == "null" || after->lexeme == "new"));
  }

  Expr ParseUnary() {
    if (AtEnd()) Fail("expression");
    const Token& t = Cur();
    if (t.kind == TokenKind::kOperator) {
      if (t.lexeme == "!" || t.lexeme == "-") {
        std::string op = t.lexeme;
        ++pos_;
        return Expr::Unary(std::move(op), ParseUnary());
      }
      if (t.lexeme == "++" || t.lexeme == "--") {
        Unsupported(t, "increment expression");
      }
      if (t.lexeme == "+") Unsupported(t, "unary plus");
      if (t.lexeme == "~") Unsupported(t, "bitwise operator ~");
    }
    if (AtPunct("(")) {
      if (LooksLikeLambda()) Unsupported(t, "lambda");
      if (LooksLikeCast()) Unsupported(t, "cast");
      ++pos_;
      Expr inner = ParseExpr();
      Expect(TokenKind::kPunctuation, ")");
      return ParsePostfix(std::move(inner), t);
    }
    return ParsePostfix(ParsePrimary(), t);
  }

  // `( ... ) ->` starting at the current parenthesis.
  bool LooksLikeLambda() const {
    int depth = 0;
    for (size_t i = pos_; i < toks_.size(); ++i) {
      const Token& tok = toks_[i];
      if (tok.Is(TokenKind::kPunctuation, "(")) ++depth;
      if (tok.Is(TokenKind::kPunctuation, ")") && --depth == 0) {
        return i + 1 < toks_.size() &&
               toks_[i + 1].Is(TokenKind::kOperator, "->");
      }
    }
    return false;
  }

  Expr ParsePostfix(Expr e, const Token& start) {
    if (AtPunct(".")) Unsupported(Cur(), "member access on expression");
    if (AtPunct("[")) Unsupported(Cur(), "array");
    if (AtOp("::")) Unsupported(Cur(), "method reference");
    (void)start;
    return e;
  }

  Expr ParseLiteral() {
    const Token& t = Cur();
    const std::string& lx = t.lexeme;
    ExprKind kind;
    if (lx[0] == '"') {
      kind = ExprKind::kStringLit;
    } else if (lx[0] == '\'') {
      Unsupported(t, "char literal");
    } else {
      const char last = lx.back();
      const bool radix = lx.size() > 1 && lx[0] == '0' &&
                         (lx[1] == 'x' || lx[1] == 'X' || lx[1] == 'b' ||
                          lx[1] == 'B');
      if (last == 'L' || last == 'l') {
        kind = ExprKind::kLongLit;
      } else if (radix) {
        kind = ExprKind::kIntLit;
      } else if (last == 'f' || last == 'F') {
        Unsupported(t, "float literal");
      } else if (last == 'd' || last == 'D' ||
                 lx.find_first_of(".eE") != std::string::npos) {
        kind = ExprKind::kDoubleLit;
      } else {
        kind = ExprKind::kIntLit;
      }
    }
    ++pos_;
    return Expr::Literal(kind, lx);
  }

  std::vector<Expr> ParseArgs() {
    Expect(TokenKind::kPunctuation, "(");
    std::vector<Expr> args;
    if (!AtPunct(")")) {
      while (true) {
        args.push_back(ParseExpr());
        if (!AtPunct(",")) break;
        ++pos_;
      }
    }
    Expect(TokenKind::kPunctuation, ")");
    return args;
  }

  Expr ParsePrimary() {
    const Token& t = Cur();
    switch (t.kind) {
      case TokenKind::kLiteral:
        return ParseLiteral();
      case TokenKind::kKeyword:
        if (t.lexeme == "true" || t.lexeme == "false") {
          ++pos_;
          return Expr::Literal(ExprKind::kBoolLit, t.lexeme);
        }
        if (t.lexeme == "null") {
          ++pos_;
          return Expr::Literal(ExprKind::kNullLit, t.lexeme);
        }
        if (t.lexeme == "new") Unsupported(t, "object creation");
        if (t.lexeme == "String" && PeekTok(1) &&
            PeekTok(1)->Is(TokenKind::kPunctuation, ".")) {
          return ParseNameOrCall();
        }
        Fail("expression");
      case TokenKind::kIdentifier:
        if (IsForeignKeyword(t)) Unsupported(t, "keyword " + t.lexeme);
        return ParseNameOrCall();
      default:
        Fail("expression");
    }
  }

  // Identifier, call, or qualified call `a.b.c(...)`.
  Expr ParseNameOrCall() {
    const Token& first = Cur();
    std::vector<std::string> segments = {first.lexeme};
    ++pos_;
    if (AtOp("->")) Unsupported(first, "lambda");
    while (AtPunct(".")) {
      ++pos_;
      if (AtEnd() || Cur().kind != TokenKind::kIdentifier) {
        if (AtOp("<")) Unsupported(Cur(), "generics");
        Fail("identifier");
      }
      if (IsForeignKeyword(Cur())) Unsupported(Cur(), "keyword " + Cur().lexeme);
      segments.push_back(Cur().lexeme);
      ++pos_;
    }
    if (AtPunct("(")) {
      std::string name = segments.back();
      segments.pop_back();
      std::string qualifier;
      for (size_t i = 0; i < segments.size(); ++i) {
        if (i) qualifier += ".";
        qualifier += segments[i];
      }
      Expr call = Expr::Call(std::move(name), ParseArgs(), std::move(qualifier));
      if (AtPunct(".")) Unsupported(Cur(), "call chain");
      return call;
    }
    if (segments.size() > 1) Unsupported(first, "field access");
    if (first.kind == TokenKind::kKeyword) Fail("expression");
    return Expr::Var(segments[0]);
  }

  const std::vector<Token>& toks_;
  size_t pos_;
  size_t end_;
};

// Index one past the token that closes the bracket opened at |open|.
std::optional<size_t> MatchClose(const std::vector<Token>& toks, size_t open) {
  int depth = 0;
  for (size_t i = open; i < toks.size(); ++i) {
    if (toks[i].Is(TokenKind::kPunctuation, "{")) ++depth;
    if (toks[i].Is(TokenKind::kPunctuation, "}")) {
      if (--depth == 0) return i + 1;
    }
  }
  return std::nullopt;
}

class MemberScanner {
 public:
  explicit MemberScanner(const std::vector<Token>& toks) : toks_(toks) {}

  void Scan(size_t begin, size_t end, bool top_level, ExtractResult& out) {
    size_t i = begin;
    while (i < end) {
      const Token& t = toks_[i];
      if (top_level && t.kind == TokenKind::kIdentifier &&
          (t.lexeme == "package" || t.lexeme == "import")) {
        i = SkipPast(i, end, ";");
        continue;
      }
      if (t.Is(TokenKind::kPunctuation, ";")) {
        ++i;
        continue;
      }
      // Find the first `{`, `;` or `=` at paren depth 0.
      size_t j = i;
      int parens = 0;
      bool saw_paren = false;
      bool type_decl = false;
      bool is_enum = false;
      while (j < end) {
        const Token& u = toks_[j];
        if (u.Is(TokenKind::kPunctuation, "(")) {
          ++parens;
          saw_paren = true;
        } else if (u.Is(TokenKind::kPunctuation, ")")) {
          --parens;
        } else if (parens == 0) {
          if (u.Is(TokenKind::kPunctuation, "{") ||
              u.Is(TokenKind::kPunctuation, ";") ||
              u.Is(TokenKind::kOperator, "=")) {
            break;
          }
          if (u.kind == TokenKind::kIdentifier &&
              (u.lexeme == "class" || u.lexeme == "interface" ||
               u.lexeme == "enum")) {
            type_decl = true;
            is_enum = u.lexeme == "enum";
          }
        }
        ++j;
      }
      if (j >= end) {
        out.diagnostics.push_back(
            {t.line, t.col, "", "unterminated declaration"});
        return;
      }
      const Token& stop = toks_[j];
      if (stop.Is(TokenKind::kPunctuation, ";")) {
        i = j + 1;  // field or abstract method
        continue;
      }
      if (stop.Is(TokenKind::kOperator, "=")) {
        i = SkipPast(j, end, ";");  // field with initializer
        continue;
      }
      auto close = MatchClose(toks_, j);
      if (!close || *close > end) {
        out.diagnostics.push_back({stop.line, stop.col, "", "unbalanced braces"});
        return;
      }
      if (type_decl) {
        if (top_level && !is_enum) {
          Scan(j + 1, *close - 1, /*top_level=*/false, out);
        } else {
          out.diagnostics.push_back(
              {t.line, t.col, "",
               is_enum ? "unsupported construct: enum"
                       : "unsupported construct: nested class"});
        }
      } else if (saw_paren) {
        ParseOne(i, *close, out);
      }
      // Anything else (initializer blocks) is skipped.
      i = *close;
    }
  }

 private:
  size_t SkipPast(size_t i, size_t end, std::string_view punct) const {
    int depth = 0;
    while (i < end) {
      const Token& t = toks_[i];
      if (t.Is(TokenKind::kPunctuation, "{")) ++depth;
      if (t.Is(TokenKind::kPunctuation, "}")) --depth;
      if (depth <= 0 && t.Is(TokenKind::kPunctuation, punct)) return i + 1;
      ++i;
    }
    return end;
  }

  std::string GuessName(size_t begin, size_t end) const {
    for (size_t k = begin; k + 1 < end; ++k) {
      if (toks_[k].kind == TokenKind::kIdentifier &&
          toks_[k + 1].Is(TokenKind::kPunctuation, "(")) {
        return toks_[k].lexeme;
      }
    }
    return "";
  }

  void ParseOne(size_t begin, size_t end, ExtractResult& out) {
    try {
      out.methods.push_back(Parser(toks_, begin, end).ParseMethodDecl());
    } catch (const LexError& e) {
      out.diagnostics.push_back(
          {e.line(), e.col(), GuessName(begin, end), e.what()});
    } catch (const ParseError& e) {
      out.diagnostics.push_back(
          {e.line(), e.col(), GuessName(begin, end), e.what()});
    } catch (const UnsupportedConstruct& e) {
      out.diagnostics.push_back(
          {e.line(), e.col(), GuessName(begin, end), e.what()});
    } catch (const Error& e) {
      const Token& t = toks_[begin];
      out.diagnostics.push_back(
          {t.line, t.col, GuessName(begin, end), e.what()});
    }
  }

  const std::vector<Token>& toks_;
};

}  // namespace

MethodAst ParseMethod(std::string_view source) {
  std::vector<Token> tokens = Tokenize(source);
  return Parser(tokens, 0, tokens.size()).ParseMethodDecl();
}

ExtractResult ExtractMethods(std::string_view source) {
  ExtractResult out;
  std::vector<Token> tokens;
  try {
    tokens = Tokenize(source);
  } catch (const LexError& e) {
    out.diagnostics.push_back({e.line(), e.col(), "", e.what()});
    return out;
  }
  MemberScanner(tokens).Scan(0, tokens.size(), /*top_level=*/true, out);
  return out;
}

}  // namespace codemorph
