// Copyright 2026 The Wubikit Authors
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wubi {

/// Base class for all recoverable toolkit errors. The CLI maps these to
/// exit code 1; usage errors are handled separately by the argument parser.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& message) : std::runtime_error(message) {}
};

/// Malformed input data (table files, lexicons, corpus files).
/// `line` is 1-based; 0 means "not tied to a specific line".
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line = 0)
      : Error(line ? "line " + std::to_string(line) + ": " + message : message),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_ = 0;
};

/// A character or token that cannot be encoded in strict mode.
/// `token_index` is the 0-based position of the offending token in its
/// sentence; `character` holds the offending scalar as UTF-8.
class EncodeError : public Error {
 public:
  EncodeError(const std::string& message, std::string character,
              std::size_t token_index)
      : Error(message + " (token " + std::to_string(token_index) + ")"),
        character_(std::move(character)),
        token_index_(token_index) {}

  const std::string& character() const { return character_; }
  std::size_t token_index() const { return token_index_; }

 private:
  std::string character_;
  std::size_t token_index_;
};

/// A token that cannot be decoded back to Chinese.
class DecodeError : public Error {
 public:
  DecodeError(const std::string& message, std::string token, std::string code)
      : Error(message + ": token '" + token + "', code '" + code + "'"),
        token_(std::move(token)),
        code_(std::move(code)) {}

  const std::string& token() const { return token_; }
  const std::string& code() const { return code_; }

 private:
  std::string token_;
  std::string code_;
};

}  // namespace wubi
