// Copyright 2026 The coopgame Authors
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

#ifndef COOPGAME_VERSION_HPP_
#define COOPGAME_VERSION_HPP_

#include <string_view>

namespace coopgame {

inline constexpr std::string_view kVersion = "0.1.0";

}  // namespace coopgame

#endif  // COOPGAME_VERSION_HPP_
