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

#include <gtest/gtest.h>

#include <algorithm>

#include "codemorph/errors.h"
#include "codemorph/interp.h"
#include "codemorph/parser.h"
#include "codemorph/printer.h"

namespace codemorph {
namespace {

// Canonical text of |src|, for comparing against expected rewrites.
std::string Canon(std::string_view src) { return PrintMethod(ParseMethod(src)); }

Site OnlySite(const MethodAst& m, TransformKind kind) {
  auto sites = EnumerateSites(m, kind);
  EXPECT_EQ(sites.size(), 1u);
  return sites.at(0);
}

int BindingNamed(const SymbolTable& t, const std::string& name) {
  for (const Binding& b : t.bindings()) {
    if (b.name == name && b.kind != BindingKind::kFree) return b.id;
  }
  ADD_FAILURE() << "no binding " << name;
  return -1;
}

void ExpectEquivalent(const MethodAst& a, const MethodAst& b) {
  EquivalenceVerdict v = CheckEquivalence(a, b, 20, 3);
  EXPECT_EQ(v.status, VerdictStatus::kEquivalent)
      << v.reason << "\n" << v.outcome_a.ToString() << "\n"
      << v.outcome_b.ToString() << "\n" << PrintMethod(b);
}

TEST(RenameTest, RenamesEveryOccurrence) {
  MethodAst m = ParseMethod("int f() { int count = 0; return count; }");
  SymbolTable t = ResolveScopes(m);
  MethodAst r = RenameVariable(m, t, BindingNamed(t, "count"), "var0");
  EXPECT_EQ(PrintMethod(r), Canon("int f() { int var0 = 0; return var0; }"));
  EXPECT_EQ(NodeKindSequence(r), NodeKindSequence(m));
}

TEST(RenameTest, CompareToExample) {
  MethodAst m = ParseMethod(
      "int compareTo(int value, int otherValue) { int other = otherValue; "
      "if (value < other) { return -1; } else if (value > other) "
      "{ return 1; } return 0; }");
  SymbolTable t = ResolveScopes(m);
  MethodAst r = RenameVariable(m, t, BindingNamed(t, "other"), "var0");
  EXPECT_EQ(PrintMethod(r),
            Canon("int compareTo(int value, int otherValue) { int var0 = "
                  "otherValue; if (value < var0) { return -1; } else if "
                  "(value > var0) { return 1; } return 0; }"));
  ExpectEquivalent(m, r);
}

TEST(RenameTest, ShadowedOuterLeavesInnerUsesAlone) {
  MethodAst m = ParseMethod(
      "int f(int x) { int s = x; { int t = 1; s += t; } "
      "for (int i = 0; i < 2; i++) { int s2 = i; s += s2; } return s; }");
  SymbolTable t = ResolveScopes(m);
  MethodAst r = RenameVariable(m, t, BindingNamed(t, "s"), "var0");
  EXPECT_NE(PrintMethod(r).find("int s2 = i;"), std::string::npos);
  EXPECT_NE(PrintMethod(r).find("var0 += s2;"), std::string::npos);
  ExpectEquivalent(m, r);
}

TEST(RenameTest, ShadowingInSiblingScopes) {
  MethodAst m = ParseMethod(
      "int f(int n) { int r = 0; { int a = n; r += a; } "
      "{ int a = 2 * n; r -= a; } return r; }");
  SymbolTable t = ResolveScopes(m);
  int first = -1;
  for (const Binding& b : t.bindings()) {
    if (b.name == "a") {
      first = b.id;
      break;
    }
  }
  MethodAst r = RenameVariable(m, t, first, "var0");
  EXPECT_EQ(PrintMethod(r),
            Canon("int f(int n) { int r = 0; { int var0 = n; r += var0; } "
                  "{ int a = 2 * n; r -= a; } return r; }"));
}

TEST(RenameTest, CollisionIsRejected) {
  MethodAst m = ParseMethod("int f(int var0) { int x = 1; return x; }");
  SymbolTable t = ResolveScopes(m);
  EXPECT_THROW(RenameVariable(m, t, BindingNamed(t, "x"), "var0"),
               NameCollision);
}

TEST(RenameTest, QualifiedReceiverFollowsRename) {
  MethodAst m = ParseMethod("int f(String s) { return s.length(); }");
  SymbolTable t = ResolveScopes(m);
  MethodAst r = RenameVariable(m, t, BindingNamed(t, "s"), "var0");
  EXPECT_EQ(PrintMethod(r), Canon("int f(String var0) { return var0.length(); }"));
  ExpectEquivalent(m, r);
}

TEST(BooleanExchangeTest, NegatesInitializerAndReads) {
  MethodAst m =
      ParseMethod("int f() { boolean flag = true; if (flag) { a(); } return 0; }");
  MethodAst r = BooleanExchange(m, ResolveScopes(m),
                                OnlySite(m, TransformKind::kBooleanExchange)
                                    .payload[0]);
  EXPECT_EQ(PrintMethod(r),
            Canon("int f() { boolean flag = false; if (!flag) { a(); } "
                  "return 0; }"));
  ExpectEquivalent(m, r);
}

TEST(BooleanExchangeTest, NegatesComparison) {
  MethodAst m = ParseMethod("boolean f(int x) { boolean b = x > 0; return b; }");
  MethodAst r = BooleanExchange(m, ResolveScopes(m),
                                OnlySite(m, TransformKind::kBooleanExchange)
                                    .payload[0]);
  EXPECT_EQ(PrintMethod(r),
            Canon("boolean f(int x) { boolean b = !(x > 0); return !b; }"));
  ExpectEquivalent(m, r);
}

TEST(BooleanExchangeTest, DoubleNegationCollapses) {
  MethodAst m = ParseMethod(
      "int f(boolean p) { boolean done = p; while (!done) { done = !done; } "
      "return 1; }");
  MethodAst r = BooleanExchange(m, ResolveScopes(m),
                                OnlySite(m, TransformKind::kBooleanExchange)
                                    .payload[0]);
  EXPECT_EQ(PrintMethod(r),
            Canon("int f(boolean p) { boolean done = !p; while (done) "
                  "{ done = !done; } return 1; }"));
  ExpectEquivalent(m, r);
}

TEST(BooleanExchangeTest, ParametersAreNotSites) {
  MethodAst m = ParseMethod("boolean f(boolean p) { return p; }");
  EXPECT_TRUE(EnumerateSites(m, TransformKind::kBooleanExchange).empty());
  EXPECT_THROW(BooleanExchange(m, ResolveScopes(m), m.params[0].id),
               IneligibleSite);
}

TEST(LoopExchangeTest, ForBecomesWhile) {
  MethodAst m = ParseMethod(
      "int f() { int s = 0; for (int i = 0; i < 10; i++) { s += i; } "
      "return s; }");
  MethodAst r = LoopExchange(m, OnlySite(m, TransformKind::kLoopExchange).anchor);
  EXPECT_EQ(PrintMethod(r),
            Canon("int f() { int s = 0; { int i = 0; while (i < 10) "
                  "{ s += i; i++; } } return s; }"));
  EXPECT_EQ(Evaluate(r, {}).value, Value::Int(45));
  ExpectEquivalent(m, r);
}

TEST(LoopExchangeTest, WhileBecomesFor) {
  MethodAst m = ParseMethod("int f(int x) { while (x > 0) { x--; } return x; }");
  MethodAst r = LoopExchange(m, OnlySite(m, TransformKind::kLoopExchange).anchor);
  EXPECT_EQ(PrintMethod(r),
            Canon("int f(int x) { for (; x > 0;) { x--; } return x; }"));
  ExpectEquivalent(m, r);
}

TEST(LoopExchangeTest, EmptyConditionIsTrue) {
  MethodAst m = ParseMethod("void f() { for (;;) { break; } }");
  MethodAst r = LoopExchange(m, OnlySite(m, TransformKind::kLoopExchange).anchor);
  EXPECT_EQ(PrintMethod(r), Canon("void f() { { while (true) { break; } } }"));
  ExpectEquivalent(m, r);
}

TEST(LoopExchangeTest, BodyStaysNestedWhenUpdateWouldBeCaptured) {
  MethodAst m = ParseMethod(
      "int f(int j) { int s = 0; for (int i = 0; i < 3; i = j) "
      "{ int j2 = i; s += j2; } return s; }");
  MethodAst r = LoopExchange(m, OnlySite(m, TransformKind::kLoopExchange).anchor);
  ExpectEquivalent(m, r);
  MethodAst m2 = ParseMethod(
      "void f(int k) { for (int i = 0; i < 3; i = k) { int k2 = 1; "
      "log(k2); } }");
  ExpectEquivalent(
      m2, LoopExchange(m2, OnlySite(m2, TransformKind::kLoopExchange).anchor));
}

TEST(LoopExchangeTest, BoundContinueIsIneligible) {
  MethodAst m = ParseMethod(
      "void f() { for (int i = 0; i < 3; i++) { if (i == 1) { continue; } "
      "g(i); } }");
  EXPECT_TRUE(EnumerateSites(m, TransformKind::kLoopExchange).empty());
  EXPECT_THROW(LoopExchange(m, m.body.body[0].id), IneligibleSite);
}

TEST(SwitchToIfTest, ConvertsWithTemporary) {
  MethodAst m = ParseMethod(
      "String f(int x) { switch (x) { case 1: return \"a\"; "
      "default: return \"b\"; } }");
  MethodAst r = SwitchToIf(m, ResolveScopes(m),
                           OnlySite(m, TransformKind::kSwitchToIf).anchor);
  EXPECT_EQ(PrintMethod(r),
            Canon("String f(int x) { { int tmp0 = x; if (tmp0 == 1) "
                  "{ return \"a\"; } else { return \"b\"; } } }"));
  for (int x : {0, 1, 2}) {
    EXPECT_EQ(Evaluate(m, {Value::Int(x)}), Evaluate(r, {Value::Int(x)}));
  }
}

TEST(SwitchToIfTest, NoDefaultMeansNoElse) {
  MethodAst m = ParseMethod(
      "int f(int x) { int r = 0; switch (x) { case 1: case 2: r = 5; break; "
      "case 3: r = 7; break; } return r; }");
  MethodAst r = SwitchToIf(m, ResolveScopes(m),
                           OnlySite(m, TransformKind::kSwitchToIf).anchor);
  EXPECT_EQ(PrintMethod(r),
            Canon("int f(int x) { int r = 0; { int tmp0 = x; if (tmp0 == 1 "
                  "|| tmp0 == 2) { r = 5; } else if (tmp0 == 3) { r = 7; } } "
                  "return r; }"));
  ExpectEquivalent(m, r);
}

TEST(SwitchToIfTest, StringScrutinee) {
  MethodAst m = ParseMethod(
      "int f(String s) { switch (s) { case \"a\": return 1; "
      "case \"abc\": return 2; default: return 0; } }");
  MethodAst r = SwitchToIf(m, ResolveScopes(m),
                           OnlySite(m, TransformKind::kSwitchToIf).anchor);
  EXPECT_NE(PrintMethod(r).find("String tmp0 = s;"), std::string::npos);
  ExpectEquivalent(m, r);
}

TEST(SwitchToIfTest, ScrutineeEvaluatedOnce) {
  MethodAst m = ParseMethod(
      "int f() { switch (next()) { case 1: return 1; case 2: return 2; "
      "default: return 3; } }");
  MethodAst r = SwitchToIf(m, ResolveScopes(m),
                           OnlySite(m, TransformKind::kSwitchToIf).anchor);
  ExpectEquivalent(m, r);
}

TEST(SwitchToIfTest, DefaultInTheMiddle) {
  MethodAst m = ParseMethod(
      "int f(int x) { switch (x) { case 1: return 10; default: return 0; "
      "case 2: return 20; } }");
  MethodAst r = SwitchToIf(m, ResolveScopes(m),
                           OnlySite(m, TransformKind::kSwitchToIf).anchor);
  ExpectEquivalent(m, r);
  EXPECT_EQ(Evaluate(r, {Value::Int(2)}).value, Value::Int(20));
}

TEST(SwitchToIfTest, FallThroughIsIneligible) {
  MethodAst m = ParseMethod(
      "int f(int x) { int r = 0; switch (x) { case 1: r = 1; case 2: r += 2; "
      "break; } return r; }");
  EXPECT_TRUE(EnumerateSites(m, TransformKind::kSwitchToIf).empty());
  EXPECT_THROW(SwitchToIf(m, ResolveScopes(m), m.body.body[1].id),
               IneligibleSite);
}

TEST(PermuteTest, SwapsIndependentDeclarations) {
  MethodAst m = ParseMethod(
      "int f() { int a = 1; int b = 2; int r = a + b; return r; }");
  SymbolTable t = ResolveScopes(m);
  MethodAst r = PermuteStatements(m, t, m.body.body[0].id, m.body.body[1].id);
  EXPECT_EQ(PrintMethod(r),
            Canon("int f() { int b = 2; int a = 1; int r = a + b; return r; }"));
  ExpectEquivalent(m, r);
}

TEST(PermuteTest, DependentPairIsRejected) {
  MethodAst m = ParseMethod("void f(int a, int b) { a = 1; b = a; log(b); }");
  SymbolTable t = ResolveScopes(m);
  EXPECT_THROW(
      PermuteStatements(m, t, m.body.body[0].id, m.body.body[1].id),
      IneligibleSite);
}

TEST(UnusedStatementTest, EmptyBlockGetsDeclaration) {
  MethodAst m = ParseMethod("void f() { }");
  Rng rng(1);
  MethodAst r = InsertUnusedStatement(m, m.body.id, rng);
  ASSERT_EQ(r.body.body.size(), 1u);
  EXPECT_EQ(r.body.body[0].kind, StmtKind::kVarDecl);
  EXPECT_EQ(r.body.body[0].name, "unused0");
  EXPECT_EQ(r.body.body[0].type, "int");
}

TEST(UnusedStatementTest, AddsExactlyOneStatement) {
  MethodAst m = ParseMethod(
      "int f(int x) { int y = x; if (y > 0) { y--; } return y; }");
  for (uint64_t seed = 0; seed < 20; ++seed) {
    for (const Variant& v :
         SinglePlace(m, "m", TransformKind::kUnusedStatement, seed)) {
      EXPECT_EQ(CountStatements(v.ast), CountStatements(m) + 1);
      ExpectEquivalent(m, v.ast);
    }
  }
}

TEST(UnusedStatementTest, FixedSeedPosition) {
  MethodAst m = ParseMethod("void f() { a(); b(); c(); }");
  // Seeds are scanned for one that places the declaration third of four.
  bool found = false;
  for (uint64_t seed = 0; seed < 64 && !found; ++seed) {
    Rng rng(seed);
    MethodAst r = InsertUnusedStatement(m, m.body.id, rng);
    ASSERT_EQ(r.body.body.size(), 4u);
    Rng replay(seed);
    const uint64_t pos = replay.Below(4);
    EXPECT_EQ(r.body.body[pos].kind, StmtKind::kVarDecl);
    found = pos == 2;
  }
  EXPECT_TRUE(found);
}

TEST(UnusedStatementTest, NeverAfterReturn) {
  MethodAst m = ParseMethod("int f() { return 1; }");
  for (uint64_t seed = 0; seed < 10; ++seed) {
    Rng rng(seed);
    MethodAst r = InsertUnusedStatement(m, m.body.id, rng);
    EXPECT_EQ(r.body.body[0].kind, StmtKind::kVarDecl);
  }
}

const char* kThreeVars =
    "int f(int a, int b) { int c = a + b; return c * 2; }";

TEST(ModeTest, SinglePlaceOneVariantPerSite) {
  MethodAst m = ParseMethod(kThreeVars);
  auto variants = SinglePlace(m, "m", TransformKind::kVariableRenaming, 1);
  ASSERT_EQ(variants.size(), 3u);
  std::set<std::string> sources;
  for (const Variant& v : variants) {
    EXPECT_EQ(v.applied_sites.size(), 1u);
    EXPECT_NE(v.source.find("var0"), std::string::npos);
    EXPECT_EQ(v.source.find("var1"), std::string::npos);
    EXPECT_EQ(v.source, PrintMethod(ParseMethod(v.source)));
    sources.insert(v.source);
  }
  EXPECT_EQ(sources.size(), 3u);
}

TEST(ModeTest, AllPlaceNamesInSiteOrder) {
  MethodAst m = ParseMethod(kThreeVars);
  auto v = AllPlace(m, "m", TransformKind::kVariableRenaming, 1);
  ASSERT_TRUE(v);
  EXPECT_EQ(v->source,
            Canon("int f(int var0, int var1) { int var2 = var0 + var1; "
                  "return var2 * 2; }"));
  EXPECT_FALSE(AllPlace(ParseMethod("void f() { }"), "m",
                        TransformKind::kLoopExchange, 1));
}

TEST(ModeTest, MultiSiteModesRejectPermuteAndUnused) {
  MethodAst m = ParseMethod(kThreeVars);
  EXPECT_THROW(AllPlace(m, "m", TransformKind::kPermuteStatement, 1),
               ModeUnsupported);
  EXPECT_THROW(AllPlace(m, "m", TransformKind::kUnusedStatement, 1),
               ModeUnsupported);
  EXPECT_THROW(XPercent(m, "m", TransformKind::kPermuteStatement, 50, 1),
               ModeUnsupported);
  EXPECT_THROW(XPercent(m, "m", TransformKind::kVariableRenaming, 30, 1),
               InvalidArgument);
}

TEST(ModeTest, PercentAppliesFloorOfShare) {
  MethodAst four =
      ParseMethod("int f(int a, int b, int c) { int d = a; return b + c + d; }");
  ASSERT_EQ(EnumerateSites(four, TransformKind::kVariableRenaming).size(), 4u);
  auto v25 = XPercent(four, "m", TransformKind::kVariableRenaming, 25, 5);
  auto v75 = XPercent(four, "m", TransformKind::kVariableRenaming, 75, 5);
  ASSERT_TRUE(v25 && v75);
  EXPECT_EQ(v25->applied_sites.size(), 1u);
  EXPECT_EQ(v75->applied_sites.size(), 3u);
  MethodAst three = ParseMethod(kThreeVars);
  EXPECT_FALSE(XPercent(three, "m", TransformKind::kVariableRenaming, 25, 5));
}

TEST(ModeTest, PercentChoiceDependsOnlyOnSeedAndIds) {
  MethodAst m = ParseMethod(
      "int f(int a, int b, int c, int d, int e) { return a + b + c + d + e; }");
  auto x = XPercent(m, "m", TransformKind::kVariableRenaming, 50, 11);
  auto y = XPercent(m, "m", TransformKind::kVariableRenaming, 50, 11);
  ASSERT_TRUE(x && y);
  EXPECT_EQ(x->applied_sites, y->applied_sites);
  EXPECT_EQ(x->source, y->source);
  EXPECT_EQ(x->variant_id, y->variant_id);
  std::set<std::vector<int>> choices;
  for (uint64_t seed = 0; seed < 30; ++seed) {
    auto v = XPercent(m, "m", TransformKind::kVariableRenaming, 50, seed);
    std::vector<int> anchors;
    for (const Site& s : v->applied_sites) anchors.push_back(s.anchor);
    choices.insert(anchors);
  }
  EXPECT_GT(choices.size(), 1u);
}

TEST(ModeTest, AllPlaceNestedLoopsAndSwitches) {
  MethodAst m = ParseMethod(
      "int f(int n) { int s = 0; for (int i = 0; i < n; i++) { int j = 0; "
      "while (j < i) { switch (j) { case 0: s += 1; break; default: "
      "switch (i) { case 1: s += 2; break; default: s += 3; break; } break; } "
      "j++; } } return s; }");
  for (TransformKind k : {TransformKind::kLoopExchange, TransformKind::kSwitchToIf}) {
    auto v = AllPlace(m, "m", k, 1);
    ASSERT_TRUE(v);
    EXPECT_EQ(v->applied_sites.size(), 2u);
    EXPECT_EQ(v->source, PrintMethod(ParseMethod(v->source)));
    ExpectEquivalent(m, v->ast);
  }
}

TEST(ModeTest, VariantIdsAreDistinct) {
  MethodAst m = ParseMethod(kThreeVars);
  std::set<std::string> ids;
  for (const Variant& v :
       SinglePlace(m, "m", TransformKind::kVariableRenaming, 1)) {
    ids.insert(v.variant_id);
    EXPECT_EQ(v.variant_id.size(), 16u);
  }
  EXPECT_EQ(ids.size(), 3u);
}

TEST(RequestTest, Validation) {
  EXPECT_NO_THROW((TransformRequest{TransformKind::kUnusedStatement,
                                    Mode::kSinglePlace, 0, 1}
                       .Validate()));
  EXPECT_THROW((TransformRequest{TransformKind::kUnusedStatement,
                                 Mode::kAllPlace, 0, 1}
                    .Validate()),
               ModeUnsupported);
  EXPECT_THROW((TransformRequest{TransformKind::kSwitchToIf, Mode::kPercent, 0,
                                 1}
                    .Validate()),
               InvalidArgument);
  EXPECT_EQ(ParseMode("percent"), Mode::kPercent);
  EXPECT_FALSE(ParseMode("some"));
}

}  // namespace
}  // namespace codemorph
