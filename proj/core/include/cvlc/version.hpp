// Copyright 2026 The cvlc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>

namespace cvlc {

inline constexpr const char *kVersion = "0.1.0";

/// Plain-text statement of every sign and ordering convention the engine uses.
const std::string &convention_sheet();

/// 16 hex digits of FNV-1a over convention_sheet(); embedded in reports.
std::string convention_hash();

}  // namespace cvlc
