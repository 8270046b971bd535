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


#ifndef CODEMORPH_GENERATOR_H_
#define CODEMORPH_GENERATOR_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "codemorph/ast.h"
#include "codemorph/transform_kind.h"

namespace codemorph {

struct GeneratorOptions {
  // When set, the method is built to contain at least one site of this kind.
  std::optional<TransformKind> focus;
  int max_depth = 3;
  int max_block = 5;
};

// A random well-formed method of the subset. Parameters are int, boolean or
// String; loops are bounded, so most inputs run to completion. The result is
// printed and re-parsed, so node ids are canonical.
MethodAst GenerateMethod(uint64_t seed, const GeneratorOptions& options = {});

// |count| generated methods, each with at least one |focus| site.
std::vector<MethodAst> GenerateFixtures(TransformKind focus, int count,
                                        uint64_t seed);

}  // namespace codemorph

#endif  // CODEMORPH_GENERATOR_H_
