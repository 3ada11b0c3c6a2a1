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

#include "cli/gamespec.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "cli/numfmt.hpp"

namespace coopgame::cli {
namespace {

void validate(const GameSpec& s) {
  if (s.rows <= 0 || s.cols <= 0) {
    throw InputError("game spec: rows and cols must be positive");
  }
  for (const auto* m : {&s.A, &s.B}) {
    if (static_cast<int>(m->size()) != s.rows) {
      throw InputError("game spec: matrix row count does not match rows");
    }
    for (const auto& row : *m) {
      if (static_cast<int>(row.size()) != s.cols) {
        throw InputError("game spec: matrix row length does not match cols");
      }
      for (double x : row) {
        if (!std::isfinite(x)) throw InputError("game spec: non-finite payoff");
      }
    }
  }
  if (!s.row_labels.empty() && static_cast<int>(s.row_labels.size()) != s.rows) {
    throw InputError("game spec: row_labels length does not match rows");
  }
  if (!s.col_labels.empty() && static_cast<int>(s.col_labels.size()) != s.cols) {
    throw InputError("game spec: col_labels length does not match cols");
  }
  if (s.threat) {
    for (double x : *s.threat) {
      if (!std::isfinite(x)) throw InputError("game spec: non-finite threat");
    }
  }
}

}  // namespace

Bimatrix GameSpec::to_bimatrix() const {
  return Bimatrix(Matrix::from_rows(A), Matrix::from_rows(B));
}

GameSpec game_spec_from_bimatrix(std::string name, const Bimatrix& g,
                                 std::vector<std::string> row_labels,
                                 std::vector<std::string> col_labels) {
  GameSpec s;
  s.name = std::move(name);
  s.rows = g.rows();
  s.cols = g.cols();
  s.A.assign(s.rows, std::vector<double>(s.cols));
  s.B.assign(s.rows, std::vector<double>(s.cols));
  for (int i = 0; i < s.rows; ++i) {
    for (int j = 0; j < s.cols; ++j) {
      s.A[i][j] = g.a()(i, j);
      s.B[i][j] = g.b()(i, j);
    }
  }
  s.row_labels = std::move(row_labels);
  s.col_labels = std::move(col_labels);
  validate(s);
  return s;
}

GameSpec parse_game_spec(const nlohmann::json& j) {
  try {
    if (!j.is_object()) throw InputError("game spec: expected a JSON object");
    GameSpec s;
    s.name = j.at("name").get<std::string>();
    s.rows = j.at("rows").get<int>();
    s.cols = j.at("cols").get<int>();
    s.A = j.at("A").get<std::vector<std::vector<double>>>();
    s.B = j.at("B").get<std::vector<std::vector<double>>>();
    if (j.contains("row_labels")) {
      s.row_labels = j.at("row_labels").get<std::vector<std::string>>();
    }
    if (j.contains("col_labels")) {
      s.col_labels = j.at("col_labels").get<std::vector<std::string>>();
    }
    if (j.contains("threat")) {
      const auto t = j.at("threat").get<std::vector<double>>();
      if (t.size() != 2) throw InputError("game spec: threat must be a pair");
      s.threat = {t[0], t[1]};
    }
    validate(s);
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("game spec: ") + e.what());
  }
}

GameSpec load_game_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw InputError("game spec: cannot open '" + path.string() + "'");
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(buffer.str());
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("game spec: ") + e.what());
  }
  return parse_game_spec(j);
}

nlohmann::json to_json(const GameSpec& spec) {
  nlohmann::json j;
  j["name"] = spec.name;
  j["rows"] = spec.rows;
  j["cols"] = spec.cols;
  j["A"] = rounded_matrix(spec.A);
  j["B"] = rounded_matrix(spec.B);
  if (!spec.row_labels.empty()) j["row_labels"] = spec.row_labels;
  if (!spec.col_labels.empty()) j["col_labels"] = spec.col_labels;
  if (spec.threat) {
    j["threat"] = {round_sig((*spec.threat)[0]), round_sig((*spec.threat)[1])};
  }
  return j;
}

}  // namespace coopgame::cli
