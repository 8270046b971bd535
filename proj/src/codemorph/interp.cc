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

#include "codemorph/interp.h"

#include <charconv>
#include <cmath>
#include <cstring>
#include <limits>
#include <map>
#include <optional>

#include "codemorph/errors.h"
#include "codemorph/rng.h"

namespace codemorph {

namespace {

int64_t Wrap32(int64_t v) {
  return static_cast<int32_t>(static_cast<uint32_t>(static_cast<uint64_t>(v)));
}

uint64_t DoubleBits(double d) {
  uint64_t bits;
  std::memcpy(&bits, &d, sizeof bits);
  return bits;
}

std::string FormatDouble(double d) {
  if (std::isnan(d)) return "NaN";
  if (std::isinf(d)) return d > 0 ? "Infinity" : "-Infinity";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, d);
  std::string s(buf, res.ptr);
  if (s.find_first_of(".e") == std::string::npos) s += ".0";
  return s;
}

}  // namespace

Value Value::Int(int64_t v) {
  Value out;
  out.type = ValueType::kInt;
  out.i = Wrap32(v);
  return out;
}

Value Value::Long(int64_t v) {
  Value out;
  out.type = ValueType::kLong;
  out.i = v;
  return out;
}

Value Value::Double(double v) {
  Value out;
  out.type = ValueType::kDouble;
  out.d = v;
  return out;
}

Value Value::Bool(bool v) {
  Value out;
  out.type = ValueType::kBoolean;
  out.b = v;
  return out;
}

Value Value::Str(std::string v) {
  Value out;
  out.type = ValueType::kString;
  out.s = std::move(v);
  return out;
}

bool Value::operator==(const Value& other) const {
  if (type != other.type) return false;
  switch (type) {
    case ValueType::kInt:
    case ValueType::kLong:
      return i == other.i;
    case ValueType::kDouble:
      return DoubleBits(d) == DoubleBits(other.d);
    case ValueType::kBoolean:
      return b == other.b;
    case ValueType::kString:
      return s == other.s;
    case ValueType::kNull:
      return true;
  }
  return false;
}

std::string Value::ToString() const {
  switch (type) {
    case ValueType::kInt: return std::to_string(i);
    case ValueType::kLong: return std::to_string(i) + "L";
    case ValueType::kDouble: return FormatDouble(d);
    case ValueType::kBoolean: return b ? "true" : "false";
    case ValueType::kString: return "\"" + s + "\"";
    case ValueType::kNull: return "null";
  }
  return "?";
}

bool Outcome::operator==(const Outcome& other) const {
  if (status != other.status || trace != other.trace) return false;
  if (status == OutcomeStatus::kReturned) return value == other.value;
  if (status == OutcomeStatus::kTrapped) return reason == other.reason;
  return true;
}

std::string Outcome::ToString() const {
  std::string out;
  switch (status) {
    case OutcomeStatus::kReturned: out = "Returned(" + value.ToString() + ")"; break;
    case OutcomeStatus::kCompleted: out = "Completed"; break;
    case OutcomeStatus::kTrapped: out = "Trapped(" + reason + ")"; break;
    case OutcomeStatus::kFuelExhausted: out = "FuelExhausted"; break;
  }
  out += " trace=[";
  for (size_t i = 0; i < trace.size(); ++i) {
    if (i) out += ", ";
    out += trace[i].callee + "(";
    for (size_t j = 0; j < trace[i].args.size(); ++j) {
      if (j) out += ", ";
      out += trace[i].args[j].ToString();
    }
    out += ")";
  }
  return out + "]";
}

std::string_view ToString(VerdictStatus status) {
  switch (status) {
    case VerdictStatus::kEquivalent: return "Equivalent";
    case VerdictStatus::kDivergent: return "Divergent";
    case VerdictStatus::kNotCheckable: return "NotCheckable";
  }
  return "?";
}

bool IsCheckableType(const std::string& type) {
  return type == "int" || type == "long" || type == "double" ||
         type == "boolean" || type == "String";
}

namespace {

struct Trap {
  std::string reason;
};
struct OutOfFuel {};

enum class Flow { kNormal, kBreak, kContinue, kReturn };

const std::vector<std::string>& StringPool() {
  static const std::vector<std::string> kPool = {"",      "a",  "abc",
                                                 "Hello", "42", "x y"};
  return kPool;
}

const std::vector<double>& DoublePool() {
  static const std::vector<double> kPool = {-2.5, -1.0, -0.5, 0.0,
                                            0.5,  1.0,  2.5,  100.25};
  return kPool;
}

// A value of type |hint| derived deterministically from |h|.
Value StubValue(uint64_t h, const std::string& hint) {
  const int64_t small = static_cast<int64_t>(h % 201) - 100;
  if (hint == "long") return Value::Long(small);
  if (hint == "double") {
    return Value::Double(DoublePool()[h % DoublePool().size()]);
  }
  if (hint == "boolean") return Value::Bool((h & 1) != 0);
  if (hint == "String") return Value::Str(StringPool()[h % StringPool().size()]);
  if (hint == "void") return Value::Null();
  if (hint.empty() || hint == "int") return Value::Int(small);
  return Value::Null();  // class-typed context
}

std::optional<uint64_t> ParseUnsigned(std::string_view digits, int base) {
  uint64_t v = 0;
  for (char c : digits) {
    if (c == '_') continue;
    int d;
    if (c >= '0' && c <= '9') {
      d = c - '0';
    } else if (c >= 'a' && c <= 'f') {
      d = c - 'a' + 10;
    } else if (c >= 'A' && c <= 'F') {
      d = c - 'A' + 10;
    } else {
      return std::nullopt;
    }
    if (d >= base) return std::nullopt;
    v = v * static_cast<uint64_t>(base) + static_cast<uint64_t>(d);
  }
  return v;
}

uint64_t IntegerLiteral(std::string_view lx) {
  if (!lx.empty() && (lx.back() == 'L' || lx.back() == 'l')) {
    lx.remove_suffix(1);
  }
  std::optional<uint64_t> v;
  if (lx.size() > 2 && lx[0] == '0' && (lx[1] == 'x' || lx[1] == 'X')) {
    v = ParseUnsigned(lx.substr(2), 16);
  } else if (lx.size() > 2 && lx[0] == '0' && (lx[1] == 'b' || lx[1] == 'B')) {
    v = ParseUnsigned(lx.substr(2), 2);
  } else if (lx.size() > 1 && lx[0] == '0') {
    v = ParseUnsigned(lx.substr(1), 8);
  } else {
    v = ParseUnsigned(lx, 10);
  }
  if (!v) throw Trap{"malformed literal"};
  return *v;
}

double DoubleLiteral(std::string_view lx) {
  std::string clean;
  for (char c : lx) {
    if (c != '_' && c != 'd' && c != 'D') clean += c;
  }
  double d = 0.0;
  auto res = std::from_chars(clean.data(), clean.data() + clean.size(), d);
  if (res.ec != std::errc()) throw Trap{"malformed literal"};
  return d;
}

std::string DecodeString(std::string_view lx) {
  std::string out;
  for (size_t i = 1; i + 1 < lx.size(); ++i) {
    char c = lx[i];
    if (c != '\\') {
      out += c;
      continue;
    }
    char e = lx[++i];
    switch (e) {
      case 'n': out += '\n'; break;
      case 't': out += '\t'; break;
      case 'r': out += '\r'; break;
      case 'b': out += '\b'; break;
      case 'f': out += '\f'; break;
      case '0': out += '\0'; break;
      default: out += e; break;
    }
  }
  return out;
}

bool IsNumeric(const Value& v) {
  return v.type == ValueType::kInt || v.type == ValueType::kLong ||
         v.type == ValueType::kDouble;
}

double AsDouble(const Value& v) {
  return v.type == ValueType::kDouble ? v.d : static_cast<double>(v.i);
}

std::string ConcatText(const Value& v) {
  switch (v.type) {
    case ValueType::kString: return v.s;
    case ValueType::kLong: return std::to_string(v.i);
    default: return v.ToString();
  }
}

// Java's saturating double-to-integral conversion.
int64_t DoubleToIntegral(double d, int64_t lo, int64_t hi) {
  if (std::isnan(d)) return 0;
  if (d <= static_cast<double>(lo)) return lo;
  if (d >= static_cast<double>(hi)) return hi;
  return static_cast<int64_t>(d);
}

Value Arithmetic(const std::string& op, const Value& l, const Value& r) {
  if (op == "+" && (l.type == ValueType::kString ||
                    r.type == ValueType::kString)) {
    return Value::Str(ConcatText(l) + ConcatText(r));
  }
  if (!IsNumeric(l) || !IsNumeric(r)) throw Trap{"type error"};
  if (l.type == ValueType::kDouble || r.type == ValueType::kDouble) {
    const double a = AsDouble(l), b = AsDouble(r);
    if (op == "+") return Value::Double(a + b);
    if (op == "-") return Value::Double(a - b);
    if (op == "*") return Value::Double(a * b);
    if (op == "/") return Value::Double(a / b);
    return Value::Double(std::fmod(a, b));
  }
  const bool is_long =
      l.type == ValueType::kLong || r.type == ValueType::kLong;
  const uint64_t a = static_cast<uint64_t>(l.i);
  const uint64_t b = static_cast<uint64_t>(r.i);
  auto make = [&](uint64_t v) {
    return is_long ? Value::Long(static_cast<int64_t>(v))
                   : Value::Int(static_cast<int64_t>(v));
  };
  if (op == "+") return make(a + b);
  if (op == "-") return make(a - b);
  if (op == "*") return make(a * b);
  if (r.i == 0) throw Trap{"division by zero"};
  const int64_t min = is_long ? std::numeric_limits<int64_t>::min()
                              : std::numeric_limits<int32_t>::min();
  if (r.i == -1 && l.i == min) return make(op == "/" ? a : 0);
  if (op == "/") return make(static_cast<uint64_t>(l.i / r.i));
  return make(static_cast<uint64_t>(l.i % r.i));
}

bool Compare(const std::string& op, const Value& l, const Value& r) {
  if (op == "==" || op == "!=") {
    bool eq;
    if (IsNumeric(l) && IsNumeric(r)) {
      if (l.type == ValueType::kDouble || r.type == ValueType::kDouble) {
        eq = AsDouble(l) == AsDouble(r);
      } else {
        eq = l.i == r.i;
      }
    } else if (l.type == ValueType::kBoolean && r.type == ValueType::kBoolean) {
      eq = l.b == r.b;
    } else if ((l.type == ValueType::kString || l.type == ValueType::kNull) &&
               (r.type == ValueType::kString || r.type == ValueType::kNull)) {
      // String equality is by value.
      eq = l.type == r.type && l.s == r.s;
    } else {
      throw Trap{"type error"};
    }
    return op == "==" ? eq : !eq;
  }
  if (!IsNumeric(l) || !IsNumeric(r)) throw Trap{"type error"};
  if (l.type == ValueType::kDouble || r.type == ValueType::kDouble) {
    const double a = AsDouble(l), b = AsDouble(r);
    if (op == "<") return a < b;
    if (op == "<=") return a <= b;
    if (op == ">") return a > b;
    return a >= b;
  }
  if (op == "<") return l.i < r.i;
  if (op == "<=") return l.i <= r.i;
  if (op == ">") return l.i > r.i;
  return l.i >= r.i;
}

// Converts |v| for storage in a variable of |type|. |narrowing| allows the
// implicit cast of compound assignment.
Value Coerce(const std::string& type, const Value& v, bool narrowing) {
  if (type == "int") {
    if (v.type == ValueType::kInt) return v;
    if (narrowing && v.type == ValueType::kLong) return Value::Int(v.i);
    if (narrowing && v.type == ValueType::kDouble) {
      return Value::Int(DoubleToIntegral(v.d, std::numeric_limits<int32_t>::min(),
                                         std::numeric_limits<int32_t>::max()));
    }
  } else if (type == "long") {
    if (v.type == ValueType::kInt || v.type == ValueType::kLong) {
      return Value::Long(v.i);
    }
    if (narrowing && v.type == ValueType::kDouble) {
      return Value::Long(DoubleToIntegral(v.d,
                                          std::numeric_limits<int64_t>::min(),
                                          std::numeric_limits<int64_t>::max()));
    }
  } else if (type == "double") {
    if (IsNumeric(v)) return Value::Double(AsDouble(v));
  } else if (type == "boolean") {
    if (v.type == ValueType::kBoolean) return v;
  } else if (type == "String") {
    if (v.type == ValueType::kString || v.type == ValueType::kNull) return v;
  } else {
    return v;  // class types are opaque
  }
  throw Trap{"type error"};
}

struct Slot {
  std::string type;
  std::optional<Value> value;
};

class Interpreter {
 public:
  Interpreter(const MethodAst& method, int64_t fuel)
      : method_(method), fuel_(fuel) {}

  Outcome Run(const std::vector<Value>& args) {
    Outcome out;
    try {
      Push();
      for (size_t i = 0; i < args.size(); ++i) {
        scopes_.back()[method_.params[i].name] =
            Slot{method_.params[i].type, args[i]};
      }
      Flow flow = Flow::kNormal;
      for (const Stmt& s : method_.body.body) {
        flow = Exec(s);
        if (flow != Flow::kNormal) break;
      }
      if (flow == Flow::kReturn && return_value_) {
        out.status = OutcomeStatus::kReturned;
        out.value = *return_value_;
      } else {
        out.status = OutcomeStatus::kCompleted;
      }
    } catch (const Trap& t) {
      out.status = OutcomeStatus::kTrapped;
      out.reason = t.reason;
    } catch (const OutOfFuel&) {
      out.status = OutcomeStatus::kFuelExhausted;
    }
    out.trace = std::move(trace_);
    return out;
  }

 private:
  void Burn() {
    if (--fuel_ < 0) throw OutOfFuel{};
  }

  void Push() { scopes_.emplace_back(); }
  void Pop() { scopes_.pop_back(); }

  Slot* Lookup(const std::string& name) {
    for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it) {
      auto found = it->find(name);
      if (found != it->end()) return &found->second;
    }
    return nullptr;
  }

  Value ReadVar(const std::string& name, const std::string& hint) {
    if (Slot* slot = Lookup(name)) {
      if (!slot->value) throw Trap{"read of unassigned variable"};
      return *slot->value;
    }
    auto it = globals_.find(name);
    if (it == globals_.end()) {
      it = globals_.emplace(name, StubValue(Fnv1a64("field:" + name), hint))
               .first;
    }
    return it->second;
  }

  void WriteVar(const std::string& name, const Value& v, bool narrowing) {
    if (Slot* slot = Lookup(name)) {
      slot->value = Coerce(slot->type, v, narrowing);
      return;
    }
    globals_[name] = v;
    trace_.push_back(CallRecord{"<field>=" + name, {v}});
  }

  std::string TypeOfVar(const std::string& name) {
    Slot* slot = Lookup(name);
    return slot ? slot->type : "";
  }

  bool Truth(const Expr& e) {
    Value v = Eval(e, "boolean");
    if (v.type != ValueType::kBoolean) throw Trap{"type error"};
    return v.b;
  }

  Value Eval(const Expr& e, const std::string& hint) {
    switch (e.kind) {
      case ExprKind::kIntLit:
        return Value::Int(static_cast<int64_t>(IntegerLiteral(e.text)));
      case ExprKind::kLongLit:
        return Value::Long(static_cast<int64_t>(IntegerLiteral(e.text)));
      case ExprKind::kDoubleLit:
        return Value::Double(DoubleLiteral(e.text));
      case ExprKind::kBoolLit:
        return Value::Bool(e.text == "true");
      case ExprKind::kStringLit:
        return Value::Str(DecodeString(e.text));
      case ExprKind::kNullLit:
        return Value::Null();
      case ExprKind::kVarRef:
        return ReadVar(e.text, hint);
      case ExprKind::kUnary: {
        if (e.text == "!") return Value::Bool(!Truth(e.children[0]));
        Value v = Eval(e.children[0], hint);
        if (v.type == ValueType::kInt) {
          return Value::Int(static_cast<int64_t>(0 - static_cast<uint64_t>(v.i)));
        }
        if (v.type == ValueType::kLong) {
          return Value::Long(
              static_cast<int64_t>(0 - static_cast<uint64_t>(v.i)));
        }
        if (v.type == ValueType::kDouble) return Value::Double(-v.d);
        throw Trap{"type error"};
      }
      case ExprKind::kBinary: {
        const std::string& op = e.text;
        if (op == "&&") {
          return Value::Bool(Truth(e.children[0]) && Truth(e.children[1]));
        }
        if (op == "||") {
          return Value::Bool(Truth(e.children[0]) || Truth(e.children[1]));
        }
        const bool arith = op == "+" || op == "-" || op == "*" || op == "/" ||
                           op == "%";
        const std::string operand_hint =
            arith && (hint == "int" || hint == "long" || hint == "double")
                ? hint
                : "";
        Value l = Eval(e.children[0], operand_hint);
        Value r = Eval(e.children[1], operand_hint);
        if (arith) return Arithmetic(op, l, r);
        return Value::Bool(Compare(op, l, r));
      }
      case ExprKind::kTernary:
        return Truth(e.children[0]) ? Eval(e.children[1], hint)
                                    : Eval(e.children[2], hint);
      case ExprKind::kCall:
        return Call(e, hint);
    }
    throw Trap{"unknown expression"};
  }

  Value Call(const Expr& e, const std::string& hint) {
    CallRecord rec;
    if (!e.qualifier.empty()) {
      const size_t dot = e.qualifier.find('.');
      const std::string head = e.qualifier.substr(0, dot);
      if (Slot* slot = Lookup(head)) {
        // Receiver is a local: trace its value, not its spelling.
        if (!slot->value) throw Trap{"read of unassigned variable"};
        rec.callee = "<local>" +
                     (dot == std::string::npos ? "" : e.qualifier.substr(dot)) +
                     "." + e.text;
        rec.args.push_back(*slot->value);
      } else {
        rec.callee = e.qualifier + "." + e.text;
      }
    } else {
      rec.callee = e.text;
    }
    for (const Expr& arg : e.children) rec.args.push_back(Eval(arg, ""));
    std::string key = rec.callee;
    for (const Value& v : rec.args) key += "|" + v.ToString();
    const uint64_t h = SplitMix64(Fnv1a64(key));
    trace_.push_back(std::move(rec));
    return StubValue(h, hint);
  }

  Flow ExecNested(const Stmt& s) {
    Push();
    Flow f = Exec(s);
    Pop();
    return f;
  }

  Flow ExecList(const std::vector<Stmt>& stmts, size_t from = 0) {
    for (size_t i = from; i < stmts.size(); ++i) {
      Flow f = Exec(stmts[i]);
      if (f != Flow::kNormal) return f;
    }
    return Flow::kNormal;
  }

  // Runs a loop body; returns true when the loop must stop, with |flow| set
  // to the flow to propagate.
  bool LoopBody(const Stmt& body, Flow& flow) {
    Burn();
    Flow f = ExecNested(body);
    if (f == Flow::kBreak) {
      flow = Flow::kNormal;
      return true;
    }
    if (f == Flow::kReturn) {
      flow = Flow::kReturn;
      return true;
    }
    return false;
  }

  Value Apply(const std::string& op, const std::string& name) {
    Value cur = ReadVar(name, TypeOfVar(name));
    if (op == "++" || op == "--") {
      Value one = Value::Int(1);
      return Arithmetic(op == "++" ? "+" : "-", cur, one);
    }
    return cur;
  }

  Flow Exec(const Stmt& s) {
    Burn();
    switch (s.kind) {
      case StmtKind::kVarDecl: {
        std::optional<Value> v;
        if (s.expr) v = Coerce(s.type, Eval(*s.expr, s.type), false);
        scopes_.back()[s.name] = Slot{s.type, v};
        return Flow::kNormal;
      }
      case StmtKind::kAssign: {
        const std::string type = TypeOfVar(s.name);
        if (s.op == "=") {
          WriteVar(s.name, Eval(*s.expr, type), false);
        } else if (s.op == "++" || s.op == "--") {
          WriteVar(s.name, Apply(s.op, s.name), true);
        } else {
          Value cur = ReadVar(s.name, type);
          Value rhs = Eval(*s.expr, type == "String" ? "" : type);
          WriteVar(s.name, Arithmetic(s.op.substr(0, 1), cur, rhs), true);
        }
        return Flow::kNormal;
      }
      case StmtKind::kExprStmt:
        Eval(*s.expr, "void");
        return Flow::kNormal;
      case StmtKind::kReturn:
        if (s.expr) {
          return_value_ = Coerce(method_.return_type,
                                 Eval(*s.expr, method_.return_type), false);
        } else {
          return_value_.reset();
        }
        return Flow::kReturn;
      case StmtKind::kBreak:
        return Flow::kBreak;
      case StmtKind::kContinue:
        return Flow::kContinue;
      case StmtKind::kBlock: {
        Push();
        Flow f = ExecList(s.body);
        Pop();
        return f;
      }
      case StmtKind::kIf:
        if (Truth(*s.expr)) return ExecNested(s.body[0]);
        if (!s.else_body.empty()) return ExecNested(s.else_body[0]);
        return Flow::kNormal;
      case StmtKind::kWhile: {
        Flow flow = Flow::kNormal;
        while (Truth(*s.expr)) {
          if (LoopBody(s.body[0], flow)) break;
        }
        return flow;
      }
      case StmtKind::kDoWhile: {
        Flow flow = Flow::kNormal;
        do {
          if (LoopBody(s.body[0], flow)) break;
        } while (Truth(*s.expr));
        return flow;
      }
      case StmtKind::kFor: {
        Push();
        Flow flow = Flow::kNormal;
        for (const Stmt& i : s.init) Exec(i);
        while (!s.expr || Truth(*s.expr)) {
          if (LoopBody(s.body[0], flow)) break;
          for (const Stmt& u : s.update) Exec(u);
        }
        Pop();
        return flow;
      }
      case StmtKind::kSwitch:
        return ExecSwitch(s);
      case StmtKind::kTry:
        throw Trap{"opaque construct: try"};
    }
    return Flow::kNormal;
  }

  Flow ExecSwitch(const Stmt& s) {
    std::string hint = "int";
    for (const SwitchCase& c : s.cases) {
      if (c.label && c.label->kind == ExprKind::kStringLit) hint = "String";
    }
    Value scrutinee = Eval(*s.expr, hint);
    if (scrutinee.type == ValueType::kNull) throw Trap{"null switch"};
    std::optional<size_t> target;
    for (size_t i = 0; i < s.cases.size() && !target; ++i) {
      const SwitchCase& c = s.cases[i];
      if (c.label && Compare("==", scrutinee, Eval(*c.label, hint))) {
        target = i;
      }
    }
    if (!target) {
      for (size_t i = 0; i < s.cases.size(); ++i) {
        if (s.cases[i].is_default()) target = i;
      }
    }
    if (!target) return Flow::kNormal;
    Push();
    Flow flow = Flow::kNormal;
    for (size_t i = *target; i < s.cases.size(); ++i) {
      flow = ExecList(s.cases[i].body);
      if (flow != Flow::kNormal) break;
    }
    Pop();
    return flow == Flow::kBreak ? Flow::kNormal : flow;
  }

  const MethodAst& method_;
  int64_t fuel_;
  std::vector<std::map<std::string, Slot>> scopes_;
  std::map<std::string, Value> globals_;
  std::vector<CallRecord> trace_;
  std::optional<Value> return_value_;
};

bool Matches(const std::string& type, const Value& v) {
  if (type == "int") return v.type == ValueType::kInt;
  if (type == "long") return v.type == ValueType::kLong;
  if (type == "double") return v.type == ValueType::kDouble;
  if (type == "boolean") return v.type == ValueType::kBoolean;
  if (type == "String") {
    return v.type == ValueType::kString || v.type == ValueType::kNull;
  }
  return v.type == ValueType::kNull;
}

bool ContainsTry(const MethodAst& m) {
  bool found = false;
  VisitStmts(m.body, [&](const Stmt& s) {
    if (s.kind == StmtKind::kTry) found = true;
  });
  return found;
}

Value RandomValue(const std::string& type, Rng& rng) {
  if (type == "boolean") return Value::Bool(rng.Coin());
  if (type == "double") {
    return Value::Double(DoublePool()[rng.Below(DoublePool().size())]);
  }
  if (type == "String") return Value::Str(StringPool()[rng.Below(StringPool().size())]);
  const bool is_long = type == "long";
  if (rng.Below(4) == 0) {
    const int64_t min = is_long ? std::numeric_limits<int64_t>::min()
                                : std::numeric_limits<int32_t>::min();
    const int64_t max = is_long ? std::numeric_limits<int64_t>::max()
                                : std::numeric_limits<int32_t>::max();
    const int64_t boundary[] = {min, -1, 0, 1, max};
    const int64_t v = boundary[rng.Below(5)];
    return is_long ? Value::Long(v) : Value::Int(v);
  }
  const int64_t v = rng.Range(-100, 100);
  return is_long ? Value::Long(v) : Value::Int(v);
}

}  // namespace

Outcome Evaluate(const MethodAst& method, const std::vector<Value>& args,
                 int64_t fuel) {
  if (args.size() != method.params.size()) {
    throw TypeMismatch("expected " + std::to_string(method.params.size()) +
                       " arguments, got " + std::to_string(args.size()));
  }
  for (size_t i = 0; i < args.size(); ++i) {
    if (!Matches(method.params[i].type, args[i])) {
      throw TypeMismatch("argument " + std::to_string(i) + " (" +
                         args[i].ToString() + ") does not match parameter type " +
                         method.params[i].type);
    }
  }
  return Interpreter(method, fuel).Run(args);
}

std::vector<std::vector<Value>> GenerateInputs(const MethodAst& method,
                                               int trials, uint64_t seed) {
  Rng rng(DeriveSeed(seed, "inputs"));
  std::vector<std::vector<Value>> out;
  for (int t = 0; t < trials; ++t) {
    std::vector<Value> args;
    for (const Param& p : method.params) args.push_back(RandomValue(p.type, rng));
    out.push_back(std::move(args));
  }
  return out;
}

EquivalenceVerdict CheckEquivalence(const MethodAst& a, const MethodAst& b,
                                    int trials, uint64_t seed, int64_t fuel) {
  EquivalenceVerdict verdict;
  if (a.params.size() != b.params.size() || a.return_type != b.return_type) {
    verdict.reason = "signature mismatch";
    return verdict;
  }
  for (size_t i = 0; i < a.params.size(); ++i) {
    if (a.params[i].type != b.params[i].type) {
      verdict.reason = "signature mismatch";
      return verdict;
    }
    if (!IsCheckableType(a.params[i].type)) {
      verdict.reason = "unsupported parameter type " + a.params[i].type;
      return verdict;
    }
  }
  if (ContainsTry(a) || ContainsTry(b)) {
    verdict.reason = "contains try statement";
    return verdict;
  }
  int compared = 0;
  for (auto& input : GenerateInputs(a, trials, seed)) {
    Outcome oa = Evaluate(a, input, fuel);
    Outcome ob = Evaluate(b, input, fuel);
    const bool exhausted = oa.status == OutcomeStatus::kFuelExhausted ||
                           ob.status == OutcomeStatus::kFuelExhausted;
    bool diverged;
    if (exhausted) {
      const size_t n = std::min(oa.trace.size(), ob.trace.size());
      diverged = !std::equal(oa.trace.begin(), oa.trace.begin() + n,
                             ob.trace.begin());
    } else {
      diverged = !(oa == ob);
    }
    if (diverged) {
      verdict.status = VerdictStatus::kDivergent;
      verdict.trials = compared + 1;
      verdict.witness = std::move(input);
      verdict.outcome_a = std::move(oa);
      verdict.outcome_b = std::move(ob);
      verdict.reason = "outcomes differ";
      return verdict;
    }
    if (!exhausted) ++compared;
  }
  verdict.trials = compared;
  if (compared == 0) {
    verdict.reason = "fuel exhausted on every trial";
    return verdict;
  }
  verdict.status = VerdictStatus::kEquivalent;
  return verdict;
}

}  // namespace codemorph
