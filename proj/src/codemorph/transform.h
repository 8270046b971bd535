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


#ifndef CODEMORPH_TRANSFORM_H_
#define CODEMORPH_TRANSFORM_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "codemorph/analysis.h"
#include "codemorph/ast.h"
#include "codemorph/rng.h"
#include "codemorph/transform_kind.h"

namespace codemorph {

enum class Mode { kSinglePlace, kAllPlace, kPercent };

std::string_view ToString(Mode mode);  // "single", "all", "percent"
std::optional<Mode> ParseMode(std::string_view text);

struct TransformRequest {
  TransformKind kind = TransformKind::kVariableRenaming;
  Mode mode = Mode::kSinglePlace;
  int percent = 0;  // 25, 50 or 75 in kPercent mode, else 0
  uint64_t seed = 0;

  // Throws ModeUnsupported or InvalidArgument.
  void Validate() const;
};

struct Variant {
  std::string method_id;
  std::string variant_id;
  TransformKind kind = TransformKind::kVariableRenaming;
  Mode mode = Mode::kSinglePlace;
  int percent = 0;
  uint64_t seed = 0;
  std::vector<Site> applied_sites;  // sites of the original method
  MethodAst ast;                    // node ids renumbered in preorder
  std::string source;               // PrintMethod(ast)
};

// Single-site rewrites. Each returns a new method; nodes carried over keep
// their ids and new nodes get ids above MaxNodeId, so further sites of the
// original remain addressable.

// Throws NameCollision if |new_name| already occurs in the method and
// IneligibleSite if |binding_id| is not a parameter or local.
MethodAst RenameVariable(const MethodAst& method, const SymbolTable& symbols,
                         int binding_id, const std::string& new_name);
MethodAst BooleanExchange(const MethodAst& method, const SymbolTable& symbols,
                          int binding_id);
MethodAst LoopExchange(const MethodAst& method, int loop_id);
MethodAst SwitchToIf(const MethodAst& method, const SymbolTable& symbols,
                     int switch_id);
MethodAst PermuteStatements(const MethodAst& method, const SymbolTable& symbols,
                            int first_id, int second_id);
// Inserts `int unusedK = C;` into block |block_id| at an rng-chosen position
// no later than the block's first top-level jump.
MethodAst InsertUnusedStatement(const MethodAst& method, int block_id,
                                Rng& rng);

// Dispatches |site| to its rewrite. Renaming takes the smallest free varK.
MethodAst ApplySite(const MethodAst& method, const SymbolTable& symbols,
                    const Site& site, Rng& rng);

// One variant per site, each differing from the original at that site only.
std::vector<Variant> SinglePlace(const MethodAst& method,
                                 const std::string& method_id,
                                 TransformKind kind, uint64_t seed);
// Every site at once; nullopt without sites. Throws ModeUnsupported.
std::optional<Variant> AllPlace(const MethodAst& method,
                                const std::string& method_id,
                                TransformKind kind, uint64_t seed);
// floor(n * percent / 100) sites sampled without replacement; nullopt when
// that is zero. Throws ModeUnsupported or InvalidArgument.
std::optional<Variant> XPercent(const MethodAst& method,
                                const std::string& method_id,
                                TransformKind kind, int percent,
                                uint64_t seed);

// Runs |request| on one method.
std::vector<Variant> Transform(const MethodAst& method,
                               const std::string& method_id,
                               const TransformRequest& request);

// Content-addressed id over (method id, kind, mode, percent, seed, anchors).
std::string MakeVariantId(const std::string& method_id, TransformKind kind,
                          Mode mode, int percent, uint64_t seed,
                          const std::vector<Site>& sites);

}  // namespace codemorph

#endif  // CODEMORPH_TRANSFORM_H_
