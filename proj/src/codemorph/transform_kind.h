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

#ifndef CODEMORPH_TRANSFORM_KIND_H_
#define CODEMORPH_TRANSFORM_KIND_H_

#include <array>
#include <optional>
#include <string_view>

namespace codemorph {

// Declaration order is the canonical reporting order.
enum class TransformKind {
  kVariableRenaming,
  kBooleanExchange,
  kLoopExchange,
  kSwitchToIf,
  kPermuteStatement,
  kUnusedStatement,
};

inline constexpr std::array<TransformKind, 6> kAllTransformKinds = {
    TransformKind::kVariableRenaming, TransformKind::kBooleanExchange,
    TransformKind::kLoopExchange,     TransformKind::kSwitchToIf,
    TransformKind::kPermuteStatement, TransformKind::kUnusedStatement};

// "VariableRenaming", "BooleanExchange", ...
std::string_view ToString(TransformKind kind);

// Accepts the canonical name case-insensitively, plus the kebab/snake forms
// ("variable-renaming", "variable_renaming").
std::optional<TransformKind> ParseTransformKind(std::string_view text);

// All-place and X% modes apply only to these four kinds.
constexpr bool SupportsMultiSite(TransformKind kind) {
  return kind != TransformKind::kPermuteStatement &&
         kind != TransformKind::kUnusedStatement;
}

}  // namespace codemorph

#endif  // CODEMORPH_TRANSFORM_KIND_H_
