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

#ifndef COOPGAME_MATGAME_HPP_
#define COOPGAME_MATGAME_HPP_

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "coopgame/errors.hpp"

namespace coopgame {

// Dense row-major matrix of finite payoffs. Construction validates shape
// and entry finiteness; all solver code below may assume a valid matrix.
class Matrix {
 public:
  Matrix(int rows, int cols, std::vector<double> entries);
  static Matrix from_rows(const std::vector<std::vector<double>>& rows);
  static Matrix zeros(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  double operator()(int i, int j) const { return entries_[i * cols_ + j]; }
  double& operator()(int i, int j) { return entries_[i * cols_ + j]; }
  std::span<const double> entries() const { return entries_; }

  Matrix transposed() const;
  Matrix shifted(double offset) const;  // adds offset to every entry
  double min_entry() const;
  double max_entry() const;

  friend Matrix operator-(const Matrix& lhs, const Matrix& rhs);
  friend Matrix operator+(const Matrix& lhs, const Matrix& rhs);
  friend Matrix operator*(double scale, const Matrix& m);

 private:
  int rows_;
  int cols_;
  std::vector<double> entries_;
};

// Probability vector over a player's pure strategies.
struct MixedStrategy {
  std::vector<double> probs;

  // Point mass on strategy `index` out of `n`.
  static MixedStrategy pure(int n, int index);
  // Clamps small negative noise to zero and rescales to sum exactly one.
  static MixedStrategy normalized(std::vector<double> weights);

  int size() const { return static_cast<int>(probs.size()); }
  double operator[](int i) const { return probs[i]; }
};

struct SaddlePoint {
  int row = 0;
  int col = 0;
  double value = 0.0;
};

// Value and one optimal strategy per player for a zero-sum matrix game.
struct GameValue {
  double value = 0.0;
  MixedStrategy row_strategy;
  MixedStrategy col_strategy;
  bool via_saddle = false;
};

// First cell (lexicographically) that is simultaneously a row minimum and a
// column maximum, or nullopt when the game has no pure saddle point.
std::optional<SaddlePoint> saddle_point(const Matrix& m);

// Solves the zero-sum game for the row maximizer: saddle-point fast path,
// otherwise a dense simplex on the shifted-positive formulation.
GameValue solve_zero_sum(const Matrix& m);

// (pure maximin, pure minimax): the value of the game lies between the two.
std::pair<double, double> value_bounds(const Matrix& m);

// p^T M q.
double expected_payoff(const MixedStrategy& p, const Matrix& m,
                       const MixedStrategy& q);

}  // namespace coopgame

#endif  // COOPGAME_MATGAME_HPP_
