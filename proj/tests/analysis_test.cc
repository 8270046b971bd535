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

#include <gtest/gtest.h>

#include <set>

#include "codemorph/errors.h"
#include "codemorph/interp.h"
#include "codemorph/parser.h"

namespace codemorph {
namespace {

const Binding* Named(const SymbolTable& t, const std::string& name) {
  for (const Binding& b : t.bindings()) {
    if (b.name == name) return &b;
  }
  return nullptr;
}

std::set<std::string> Names(const SymbolTable& t, const std::set<int>& ids) {
  std::set<std::string> out;
  for (int id : ids) out.insert(t.Find(id)->name);
  return out;
}

TEST(ResolveTest, InitializerBindsToParameter) {
  MethodAst m = ParseMethod("void f(int a) { int b = a; }");
  SymbolTable t = ResolveScopes(m);
  const Expr& use = *m.body.body[0].expr;
  EXPECT_EQ(t.BindingOfUse(use.id), m.params[0].id);
  EXPECT_EQ(Named(t, "b")->kind, BindingKind::kLocal);
  EXPECT_FALSE(t.has_free_names());
}

TEST(ResolveTest, InnerShadowWins) {
  MethodAst m = ParseMethod("void f() { int x = 0; { int x = 1; use(x); } }");
  SymbolTable t = ResolveScopes(m);
  const Stmt& inner_decl = m.body.body[1].body[0];
  const Expr& arg = m.body.body[1].body[1].expr->children[0];
  EXPECT_EQ(t.BindingOfUse(arg.id), inner_decl.id);
}

TEST(ResolveTest, DuplicateDeclaration) {
  MethodAst m = ParseMethod("void f() { int x = 0; int x = 1; }");
  EXPECT_THROW(ResolveScopes(m), DuplicateDeclaration);
  MethodAst p = ParseMethod("void f(int x) { int x = 1; }");
  EXPECT_THROW(ResolveScopes(p), DuplicateDeclaration);
}

TEST(ResolveTest, FreeNamesAreFlagged) {
  MethodAst m = ParseMethod("int f() { return size + 1; }");
  SymbolTable t = ResolveScopes(m);
  EXPECT_TRUE(t.has_free_names());
  EXPECT_EQ(Named(t, "size")->kind, BindingKind::kFree);
  EXPECT_LT(Named(t, "size")->id, 0);
}

TEST(ResolveTest, DeclarationVisibleAfterItself) {
  // The initializer's x is the field, not the local being declared.
  MethodAst m = ParseMethod("void f() { { int x = x + 1; } }");
  SymbolTable t = ResolveScopes(m);
  const Expr& use = m.body.body[0].body[0].expr->children[0];
  EXPECT_LT(*t.BindingOfUse(use.id), 0);
}

TEST(DefUseTest, Assignment) {
  MethodAst m = ParseMethod("void f(int a, int b, int c) { a = b + c; }");
  SymbolTable t = ResolveScopes(m);
  ReadWriteSets rw = ComputeDefUse(m.body.body[0], t);
  EXPECT_EQ(Names(t, rw.reads), (std::set<std::string>{"b", "c"}));
  EXPECT_EQ(Names(t, rw.writes), (std::set<std::string>{"a"}));
  EXPECT_FALSE(rw.calls);
}

TEST(DefUseTest, DeclarationWithCall) {
  MethodAst m = ParseMethod("void f(int x) { int t = g(x); }");
  SymbolTable t = ResolveScopes(m);
  ReadWriteSets rw = ComputeDefUse(m.body.body[0], t);
  EXPECT_EQ(Names(t, rw.reads), (std::set<std::string>{"x"}));
  EXPECT_EQ(Names(t, rw.writes), (std::set<std::string>{"t"}));
  EXPECT_TRUE(rw.calls);
}

TEST(DefUseTest, IncrementInForUpdate) {
  MethodAst m = ParseMethod("void f() { for (int i = 0; i < 3; i++) { } }");
  SymbolTable t = ResolveScopes(m);
  ReadWriteSets rw = ComputeDefUse(m.body.body[0].update[0], t);
  EXPECT_EQ(Names(t, rw.reads), (std::set<std::string>{"i"}));
  EXPECT_EQ(Names(t, rw.writes), (std::set<std::string>{"i"}));
}

TEST(DefUseTest, JumpsBoundInsideDoNotEscape) {
  MethodAst m = ParseMethod(
      "void f(int n) { while (n > 0) { if (n == 2) { break; } n--; } "
      "if (n < 0) { return; } }");
  SymbolTable t = ResolveScopes(m);
  EXPECT_FALSE(ComputeDefUse(m.body.body[0], t).jumps);
  EXPECT_TRUE(ComputeDefUse(m.body.body[1], t).jumps);
}

TEST(IndependentTest, SpecExamples) {
  MethodAst m = ParseMethod(
      "void f(int a, int b, int x, int y) { int p = 1; int q = 2; a = 1; "
      "b = a; log(x); y = 2; }");
  SymbolTable t = ResolveScopes(m);
  const auto& s = m.body.body;
  EXPECT_TRUE(Independent(s[0], s[1], t));
  EXPECT_FALSE(Independent(s[2], s[3], t));  // read after write
  EXPECT_FALSE(Independent(s[4], s[5], t));  // call
}

TEST(IndependentTest, CallReorderingDivergesUnderStubs) {
  MethodAst a = ParseMethod("void f(int x, int y) { log(x); y = 2; g(y); }");
  MethodAst b = ParseMethod("void f(int x, int y) { y = 2; log(x); g(y); }");
  // Not divergent here, since y is local; but two calls swapped are.
  MethodAst c = ParseMethod("void f(int x) { log(x); g(x); }");
  MethodAst d = ParseMethod("void f(int x) { g(x); log(x); }");
  EXPECT_EQ(CheckEquivalence(a, b, 10, 1).status, VerdictStatus::kEquivalent);
  EXPECT_EQ(CheckEquivalence(c, d, 10, 1).status, VerdictStatus::kDivergent);
}

TEST(IndependentTest, DeclarationCaptureIsRejected) {
  MethodAst m =
      ParseMethod("void f() { int k = 1; { int j = 0; k = 2; } int z = k; }");
  SymbolTable t = ResolveScopes(m);
  // z reads k after k's declaration; swapping would lose the binding.
  EXPECT_FALSE(Independent(m.body.body[1], m.body.body[2], t));
  EXPECT_FALSE(Independent(m.body.body[0], m.body.body[1], t));
}

TEST(IndependentTest, FieldWritesStayOrdered) {
  MethodAst m = ParseMethod("void f(int a) { count = 1; int b = 4 / a; }");
  SymbolTable t = ResolveScopes(m);
  EXPECT_FALSE(Independent(m.body.body[0], m.body.body[1], t));
}

// Oracle statements with their read, write and declaration facts listed by
// hand rather than computed.
struct PoolStmt {
  const char* src;
  std::set<std::string> reads;
  std::set<std::string> writes;
  std::string declares;
  bool effect = false;  // call, jump or field write
};

const std::vector<PoolStmt>& Pool() {
  static const std::vector<PoolStmt> kPool = {
      {"a = 1;", {}, {"a"}, ""},
      {"b = a;", {"a"}, {"b"}, ""},
      {"c += b;", {"c", "b"}, {"c"}, ""},
      {"log(a);", {"a"}, {}, "", true},
      {"int x = a;", {"a"}, {"x"}, "x"},
      {"int y = 2;", {}, {"y"}, "y"},
      {"a = c;", {"c"}, {"a"}, ""},
      {"if (a > 0) { b = 1; }", {"a"}, {"b"}, ""},
      {"count = 1;", {}, {"count"}, "", true},
      {"return;", {}, {}, "", true},
      {"while (c < 3) { c++; }", {"c"}, {"c"}, ""},
  };
  return kPool;
}

bool OracleIndependent(const PoolStmt& p, const PoolStmt& q) {
  if (p.effect || q.effect) return false;
  auto meets = [](const std::set<std::string>& s,
                  const std::set<std::string>& t) {
    for (const auto& x : s) {
      if (t.count(x)) return true;
    }
    return false;
  };
  if (meets(p.writes, q.reads) || meets(p.writes, q.writes) ||
      meets(q.writes, p.reads)) {
    return false;
  }
  return true;
}

void CheckBlock(const std::vector<size_t>& picks) {
  std::string src = "void f(int a, int b, int c) { {";
  for (size_t i : picks) src += std::string(" ") + Pool()[i].src;
  src += " } }";
  MethodAst m = ParseMethod(src);
  SymbolTable t;
  try {
    t = ResolveScopes(m);
  } catch (const DuplicateDeclaration&) {
    return;
  }
  const int block_id = m.body.body[0].id;
  std::vector<Site> expected;
  const auto& stmts = m.body.body[0].body;
  for (size_t i = 0; i + 1 < picks.size(); ++i) {
    if (OracleIndependent(Pool()[picks[i]], Pool()[picks[i + 1]])) {
      expected.push_back(Site{TransformKind::kPermuteStatement, stmts[i].id,
                              {stmts[i].id, stmts[i + 1].id}});
    }
  }
  std::vector<Site> got;
  for (const Site& s : EnumerateSites(m, t, TransformKind::kPermuteStatement)) {
    if (FindStmt(m.body.body[0], s.anchor) && s.anchor != block_id) {
      got.push_back(s);
    }
  }
  EXPECT_EQ(got, expected) << src;
}

// Exhaustive over blocks of up to three pool statements, sampled up to five.
TEST(PermuteSitesTest, MatchesBruteForceOracle) {
  const size_t n = Pool().size();
  for (size_t a = 0; a < n; ++a) {
    for (size_t b = 0; b < n; ++b) {
      CheckBlock({a, b});
      for (size_t c = 0; c < n; ++c) CheckBlock({a, b, c});
    }
  }
  uint64_t state = 12345;
  auto next = [&] {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<size_t>(state >> 33);
  };
  for (int trial = 0; trial < 3000; ++trial) {
    std::vector<size_t> picks(4 + trial % 2);
    for (size_t& p : picks) p = next() % n;
    CheckBlock(picks);
  }
}

TEST(SitesTest, ThreeLocalsGiveThreeRenamingSites) {
  MethodAst m = ParseMethod(
      "void f() { int a = 1; int b = a; int c = b; g(c); }");
  auto sites = EnumerateSites(m, TransformKind::kVariableRenaming);
  ASSERT_EQ(sites.size(), 3u);
  EXPECT_LT(sites[0].anchor, sites[1].anchor);
  EXPECT_EQ(sites, EnumerateSites(m, TransformKind::kVariableRenaming));
}

TEST(SitesTest, NoLoopsNoLoopSites) {
  MethodAst m = ParseMethod("int f(int a) { return a; }");
  EXPECT_TRUE(EnumerateSites(m, TransformKind::kLoopExchange).empty());
}

TEST(SitesTest, OneIndependentPair) {
  MethodAst m = ParseMethod("int f() { int a = 1; int b = 2; return a + b; }");
  EXPECT_EQ(EnumerateSites(m, TransformKind::kPermuteStatement).size(), 1u);
}

TEST(SitesTest, UnusedStatementPerBlock) {
  MethodAst m = ParseMethod(
      "void f(int a) { if (a > 0) { g(); } else { h(); } { k(); } }");
  EXPECT_EQ(EnumerateSites(m, TransformKind::kUnusedStatement).size(), 4u);
}

TEST(SitesTest, SwitchEligibility) {
  auto count = [](const char* src) {
    return EnumerateSites(ParseMethod(src), TransformKind::kSwitchToIf).size();
  };
  EXPECT_EQ(count("void f(int x) { switch (x) { case 1: g(); break; "
                  "default: h(); } }"),
            0u);  // last clause falls off the end
  EXPECT_EQ(count("void f(int x) { switch (x) { case 1: g(); break; "
                  "default: h(); break; } }"),
            1u);
  EXPECT_EQ(count("void f(int x) { switch (x) { case 1: if (x > 0) { break; } "
                  "g(); break; } }"),
            0u);  // inner break bound to the switch
  EXPECT_EQ(count("void f(int x) { switch (x) { case 1: int y = 1; break; "
                  "case 2: y = 2; g(y); break; } }"),
            0u);  // declaration used across clauses
  EXPECT_EQ(count("void f(long x) { switch (x) { case 1: g(); break; } }"),
            0u);
}

TEST(SitesTest, BooleanEligibility) {
  auto count = [](const char* src) {
    return EnumerateSites(ParseMethod(src), TransformKind::kBooleanExchange)
        .size();
  };
  EXPECT_EQ(count("void f() { boolean b = true; if (!b) { g(); } b = false; }"),
            1u);
  EXPECT_EQ(count("void f() { int b = 1; g(b); }"), 0u);
  EXPECT_EQ(count("void f(boolean p) { g(p); }"), 0u);
}

TEST(CountTest, SpecExamples) {
  EXPECT_EQ(CountStatements(ParseMethod("void f() { }")), 0);
  EXPECT_EQ(CountStatements(ParseMethod("void f() { int a = 0; if (a > 0) "
                                        "{ a = 1; } }")),
            3);
  // Declaration, if-header, two returns, final return.
  EXPECT_EQ(CountStatements(ParseMethod(
                "int compareTo(int value, int otherValue) { int other = "
                "otherValue; if (value < other) { return -1; } else if "
                "(value > other) { return 1; } return 0; }")),
            6);
  EXPECT_EQ(CountStatements(ParseMethod(
                "void f() { for (int i = 0; i < 2; i++) { g(); } }")),
            2);
}

TEST(InferTypeTest, Basics) {
  MethodAst m = ParseMethod(
      "void f(int a, String s, long l) { g(a + 1, s + a, l * a, a > 1, "
      "h(), a / 2.0); }");
  SymbolTable t = ResolveScopes(m);
  const auto& args = m.body.body[0].expr->children;
  EXPECT_EQ(InferType(args[0], t), "int");
  EXPECT_EQ(InferType(args[1], t), "String");
  EXPECT_EQ(InferType(args[2], t), "long");
  EXPECT_EQ(InferType(args[3], t), "boolean");
  EXPECT_EQ(InferType(args[4], t), "");
  EXPECT_EQ(InferType(args[5], t), "double");
}

TEST(TransformKindTest, ParseNames) {
  EXPECT_EQ(ParseTransformKind("VariableRenaming"),
            TransformKind::kVariableRenaming);
  EXPECT_EQ(ParseTransformKind("switch-to-if"), TransformKind::kSwitchToIf);
  EXPECT_EQ(ParseTransformKind("unused_statement"),
            TransformKind::kUnusedStatement);
  EXPECT_FALSE(ParseTransformKind("rename"));
  EXPECT_EQ(kAllTransformKinds.size(), 6u);
}

}  // namespace
}  // namespace codemorph
