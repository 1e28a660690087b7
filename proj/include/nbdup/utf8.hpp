// Copyright 2026 The nbdup Authors
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

namespace nbdup::utf8 {

/// Decodes UTF-8 into Unicode scalar values. Each byte of an ill-formed
/// sequence decodes to U+FFFD, so decoding never fails.
std::u32string decode(std::string_view bytes);

std::string encode(std::u32string_view text);

/// Number of scalar values `decode(bytes)` would produce.
std::size_t length(std::string_view bytes);

}  // namespace nbdup::utf8
