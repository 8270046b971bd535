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

#ifndef CODEMORPH_INTERP_H_
#define CODEMORPH_INTERP_H_

#include <cstdint>
#include <string>
#include <vector>

#include "codemorph/ast.h"

namespace codemorph {

enum class ValueType { kInt, kLong, kDouble, kBoolean, kString, kNull };

// A runtime value. Java `int` is held in 64 bits but always wrapped to the
// 32-bit two's-complement range.
struct Value {
  ValueType type = ValueType::kNull;
  int64_t i = 0;
  double d = 0.0;
  bool b = false;
  std::string s;

  static Value Int(int64_t v);
  static Value Long(int64_t v);
  static Value Double(double v);
  static Value Bool(bool v);
  static Value Str(std::string v);
  static Value Null() { return Value{}; }

  // Doubles compare bit-for-bit so NaN == NaN and 0.0 != -0.0.
  bool operator==(const Value& other) const;
  bool operator!=(const Value& other) const { return !(*this == other); }

  std::string ToString() const;  // for reports: 3, 4L, 1.5, true, "s", null
};

struct CallRecord {
  std::string callee;
  std::vector<Value> args;
  bool operator==(const CallRecord&) const = default;
};

enum class OutcomeStatus { kReturned, kCompleted, kTrapped, kFuelExhausted };

struct Outcome {
  OutcomeStatus status = OutcomeStatus::kCompleted;
  Value value;         // kReturned only
  std::string reason;  // kTrapped only
  std::vector<CallRecord> trace;

  bool operator==(const Outcome& other) const;
  std::string ToString() const;
};

inline constexpr int64_t kDefaultFuel = 100000;

// Runs |method| on |args|. External calls are stubbed: each call is appended
// to the trace and returns a value derived from a hash of the callee and
// arguments, shaped to the type its context expects. Reads of free names
// (fields) behave the same way; writes to them are traced.
//
// Throws TypeMismatch if |args| does not match the parameter list.
Outcome Evaluate(const MethodAst& method, const std::vector<Value>& args,
                 int64_t fuel = kDefaultFuel);

enum class VerdictStatus { kEquivalent, kDivergent, kNotCheckable };

struct EquivalenceVerdict {
  VerdictStatus status = VerdictStatus::kNotCheckable;
  int trials = 0;  // trials actually compared
  std::string reason;
  // Set when Divergent.
  std::vector<Value> witness;
  Outcome outcome_a;
  Outcome outcome_b;
};

bool IsCheckableType(const std::string& type);

// Differential check over |trials| generated input vectors. Ints are drawn
// from [-100, 100] plus the boundary values; booleans, doubles and Strings
// from fixed pools.
EquivalenceVerdict CheckEquivalence(const MethodAst& a, const MethodAst& b,
                                    int trials, uint64_t seed,
                                    int64_t fuel = kDefaultFuel);

// The input vectors CheckEquivalence would use, exposed for replay.
std::vector<std::vector<Value>> GenerateInputs(const MethodAst& method,
                                               int trials, uint64_t seed);

std::string_view ToString(VerdictStatus status);

}  // namespace codemorph

#endif  // CODEMORPH_INTERP_H_
