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

#ifndef CODEMORPH_ERRORS_H_
#define CODEMORPH_ERRORS_H_

#include <stdexcept>
#include <string>

namespace codemorph {

// Base of every error raised by the core library. The C API maps each
// subclass onto a distinct status code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class LexError : public Error {
 public:
  LexError(int line, int col, const std::string& message)
      : Error(std::to_string(line) + ":" + std::to_string(col) +
              ": lex error: " + message),
        line_(line),
        col_(col) {}
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_;
  int col_;
};

class ParseError : public Error {
 public:
  ParseError(int line, int col, const std::string& expected,
             const std::string& found)
      : Error(std::to_string(line) + ":" + std::to_string(col) +
              ": parse error: expected " + expected + ", found " + found),
        line_(line),
        col_(col),
        expected_(expected),
        found_(found) {}
  int line() const { return line_; }
  int col() const { return col_; }
  const std::string& expected() const { return expected_; }
  const std::string& found() const { return found_; }

 private:
  int line_;
  int col_;
  std::string expected_;
  std::string found_;
};

class UnsupportedConstruct : public Error {
 public:
  UnsupportedConstruct(int line, int col, const std::string& construct)
      : Error(std::to_string(line) + ":" + std::to_string(col) +
              ": unsupported construct: " + construct),
        line_(line),
        col_(col),
        construct_(construct) {}
  int line() const { return line_; }
  int col() const { return col_; }
  const std::string& construct() const { return construct_; }

 private:
  int line_;
  int col_;
  std::string construct_;
};

class DuplicateDeclaration : public Error {
 public:
  DuplicateDeclaration(const std::string& name, int node_id)
      : Error("duplicate declaration of '" + name + "' at node " +
              std::to_string(node_id)),
        name_(name),
        node_id_(node_id) {}
  const std::string& name() const { return name_; }
  int node_id() const { return node_id_; }

 private:
  std::string name_;
  int node_id_;
};

class IneligibleSite : public Error {
 public:
  using Error::Error;
};

class NameCollision : public Error {
 public:
  using Error::Error;
};

class ModeUnsupported : public Error {
 public:
  using Error::Error;
};

class TypeMismatch : public Error {
 public:
  using Error::Error;
};

class EmptyInput : public Error {
 public:
  using Error::Error;
};

class EmptyName : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class EmptyCorpus : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace codemorph

#endif  // CODEMORPH_ERRORS_H_
