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

#include <iosfwd>
#include <string>
#include <vector>

namespace wubi {

/// Reads all lines (LF or CRLF) into memory.
std::vector<std::string> read_lines(std::istream& in);

/// Same, from a file path. Throws Error when the file cannot be opened.
std::vector<std::string> read_lines_file(const std::string& path);

}  // namespace wubi
