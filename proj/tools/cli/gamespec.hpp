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

#ifndef COOPGAME_CLI_GAMESPEC_HPP_
#define COOPGAME_CLI_GAMESPEC_HPP_

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "coopgame/coop.hpp"
#include "json.hpp"

namespace coopgame::cli {

// On-disk description of a bimatrix game (JSON object with these fields).
struct GameSpec {
  std::string name;
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<double>> A;
  std::vector<std::vector<double>> B;
  std::vector<std::string> row_labels;  // empty = absent
  std::vector<std::string> col_labels;  // empty = absent
  std::optional<std::array<double, 2>> threat;

  Bimatrix to_bimatrix() const;
};

GameSpec game_spec_from_bimatrix(std::string name, const Bimatrix& g,
                                 std::vector<std::string> row_labels = {},
                                 std::vector<std::string> col_labels = {});

// Both throw InputError on malformed content.
GameSpec parse_game_spec(const nlohmann::json& j);
GameSpec load_game_spec(const std::filesystem::path& path);

nlohmann::json to_json(const GameSpec& spec);

}  // namespace coopgame::cli

#endif  // COOPGAME_CLI_GAMESPEC_HPP_
