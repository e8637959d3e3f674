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

#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

namespace wubi {

/// Pure per-line transform; `line_no` is 1-based. Must be safe to call from
/// several threads at once (shared state is the caller's problem).
using LineFn = std::function<std::string(std::string_view line, std::size_t line_no)>;

/// Maps `fn` over the lines of `in` and writes one output line per input
/// line, in input order, regardless of `threads`. Memory stays bounded by a
/// fixed window of in-flight lines. If `fn` throws, the exception for the
/// earliest offending line is rethrown after the workers drain; output stops
/// just before that line. Returns the number of lines processed.
std::size_t for_each_line_ordered(std::istream& in, std::ostream& out,
                                  unsigned threads, const LineFn& fn);

}  // namespace wubi
