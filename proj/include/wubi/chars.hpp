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

#include <string>
#include <string_view>

namespace wubi {

inline constexpr const char* kSpaceToken = "<sp>";

/// Character granularity: every scalar becomes its own token and original
/// spaces become the reserved `<sp>` token, so the transform is invertible.
std::string to_characters(std::string_view sentence);

/// Inverse of to_characters.
std::string from_characters(std::string_view char_tokens);

}  // namespace wubi
