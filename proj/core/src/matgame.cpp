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

#include "coopgame/matgame.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace coopgame {
namespace {

constexpr double kPivotEps = 1e-9;
constexpr double kRatioTieEps = 1e-12;
constexpr int kMaxSimplexIterations = 1000;

struct UnitLpResult {
  double objective = 0.0;       // sum of the primal variables at the optimum
  std::vector<double> primal;   // one entry per matrix column
  std::vector<double> dual;     // one entry per matrix constraint row
};

void pivot(std::vector<std::vector<double>>& t, std::vector<int>& basis,
           int pivot_row, int pivot_col) {
  const double inv = 1.0 / t[pivot_row][pivot_col];
  for (double& x : t[pivot_row]) x *= inv;
  t[pivot_row][pivot_col] = 1.0;
  for (int i = 0; i < static_cast<int>(t.size()); ++i) {
    if (i == pivot_row) continue;
    const double factor = t[i][pivot_col];
    if (factor == 0.0) continue;
    for (int j = 0; j < static_cast<int>(t[i].size()); ++j) {
      t[i][j] -= factor * t[pivot_row][j];
    }
    t[i][pivot_col] = 0.0;
  }
  basis[pivot_row] = pivot_col;
}

// maximize 1^T y  subject to  a y <= 1, y >= 0, for strictly positive `a`.
// The all-slack basis is feasible, so a single phase suffices. Bland's
// entering rule plus lowest-basis-index ratio ties keep pivoting
// deterministic and cycle-free.
UnitLpResult maximize_unit_lp(const Matrix& a) {
  const int m = a.rows();
  const int n = a.cols();
  const int width = n + m + 1;
  std::vector<std::vector<double>> t(m + 1, std::vector<double>(width, 0.0));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) t[i][j] = a(i, j);
    t[i][n + i] = 1.0;
    t[i][width - 1] = 1.0;
  }
  for (int j = 0; j < n; ++j) t[m][j] = -1.0;

  std::vector<int> basis(m);
  std::iota(basis.begin(), basis.end(), n);

  for (int iter = 0;; ++iter) {
    if (iter >= kMaxSimplexIterations) {
      throw ConvergenceError("matrix game LP: simplex iteration limit reached");
    }
    int enter = -1;
    for (int j = 0; j < n + m; ++j) {
      if (t[m][j] < -kPivotEps) {
        enter = j;
        break;
      }
    }
    if (enter < 0) break;

    int leave = -1;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (int i = 0; i < m; ++i) {
      if (t[i][enter] <= kPivotEps) continue;
      const double ratio = t[i][width - 1] / t[i][enter];
      if (leave < 0 || ratio < best_ratio - kRatioTieEps) {
        leave = i;
        best_ratio = ratio;
      } else if (ratio <= best_ratio + kRatioTieEps && basis[i] < basis[leave]) {
        leave = i;
        best_ratio = std::min(best_ratio, ratio);
      }
    }
    if (leave < 0) {
      throw ConvergenceError("matrix game LP: unbounded program");
    }
    pivot(t, basis, leave, enter);
  }

  UnitLpResult out;
  out.objective = t[m][width - 1];
  out.primal.assign(n, 0.0);
  for (int i = 0; i < m; ++i) {
    if (basis[i] < n) out.primal[basis[i]] = t[i][width - 1];
  }
  out.dual.assign(m, 0.0);
  for (int i = 0; i < m; ++i) out.dual[i] = t[m][n + i];
  return out;
}

}  // namespace

Matrix::Matrix(int rows, int cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows_ <= 0 || cols_ <= 0) {
    throw InputError("matrix: rows and cols must be positive");
  }
  if (entries_.size() != static_cast<size_t>(rows_) * static_cast<size_t>(cols_)) {
    throw InputError("matrix: entry count does not match rows * cols");
  }
  for (double x : entries_) {
    if (!std::isfinite(x)) throw InputError("matrix: non-finite entry");
  }
}

Matrix Matrix::from_rows(const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) throw InputError("matrix: no rows");
  const size_t cols = rows.front().size();
  std::vector<double> entries;
  entries.reserve(rows.size() * cols);
  for (const auto& r : rows) {
    if (r.size() != cols) throw InputError("matrix: ragged rows");
    entries.insert(entries.end(), r.begin(), r.end());
  }
  return Matrix(static_cast<int>(rows.size()), static_cast<int>(cols),
                std::move(entries));
}

Matrix Matrix::zeros(int rows, int cols) {
  if (rows <= 0 || cols <= 0) {
    throw InputError("matrix: rows and cols must be positive");
  }
  return Matrix(rows, cols,
                std::vector<double>(static_cast<size_t>(rows) * cols, 0.0));
}

Matrix Matrix::transposed() const {
  Matrix out = Matrix::zeros(cols_, rows_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  }
  return out;
}

Matrix Matrix::shifted(double offset) const {
  std::vector<double> entries(entries_);
  for (double& x : entries) x += offset;
  return Matrix(rows_, cols_, std::move(entries));
}

double Matrix::min_entry() const {
  return *std::min_element(entries_.begin(), entries_.end());
}

double Matrix::max_entry() const {
  return *std::max_element(entries_.begin(), entries_.end());
}

Matrix operator-(const Matrix& lhs, const Matrix& rhs) {
  if (lhs.rows_ != rhs.rows_ || lhs.cols_ != rhs.cols_) {
    throw InputError("matrix subtraction: shape mismatch");
  }
  std::vector<double> entries(lhs.entries_);
  for (size_t k = 0; k < entries.size(); ++k) entries[k] -= rhs.entries_[k];
  return Matrix(lhs.rows_, lhs.cols_, std::move(entries));
}

Matrix operator+(const Matrix& lhs, const Matrix& rhs) {
  if (lhs.rows_ != rhs.rows_ || lhs.cols_ != rhs.cols_) {
    throw InputError("matrix addition: shape mismatch");
  }
  std::vector<double> entries(lhs.entries_);
  for (size_t k = 0; k < entries.size(); ++k) entries[k] += rhs.entries_[k];
  return Matrix(lhs.rows_, lhs.cols_, std::move(entries));
}

Matrix operator*(double scale, const Matrix& m) {
  std::vector<double> entries(m.entries_);
  for (double& x : entries) x *= scale;
  return Matrix(m.rows_, m.cols_, std::move(entries));
}

MixedStrategy MixedStrategy::pure(int n, int index) {
  if (n <= 0 || index < 0 || index >= n) {
    throw InputError("mixed strategy: pure index out of range");
  }
  MixedStrategy s;
  s.probs.assign(n, 0.0);
  s.probs[index] = 1.0;
  return s;
}

MixedStrategy MixedStrategy::normalized(std::vector<double> weights) {
  if (weights.empty()) throw InputError("mixed strategy: empty weight vector");
  double sum = 0.0;
  for (double& w : weights) {
    if (!std::isfinite(w) || w < -kPivotEps) {
      throw InputError("mixed strategy: negative weight");
    }
    w = std::clamp(w, 0.0, std::numeric_limits<double>::max());
    sum += w;
  }
  if (!(sum > 0.0)) throw InputError("mixed strategy: weights sum to zero");
  MixedStrategy s;
  s.probs = std::move(weights);
  for (double& w : s.probs) w = std::clamp(w / sum, 0.0, 1.0);
  return s;
}

std::optional<SaddlePoint> saddle_point(const Matrix& m) {
  std::vector<double> row_min(m.rows(), std::numeric_limits<double>::infinity());
  std::vector<double> col_max(m.cols(), -std::numeric_limits<double>::infinity());
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      row_min[i] = std::min(row_min[i], m(i, j));
      col_max[j] = std::max(col_max[j], m(i, j));
    }
  }
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (m(i, j) == row_min[i] && m(i, j) == col_max[j]) {
        return SaddlePoint{i, j, m(i, j)};
      }
    }
  }
  return std::nullopt;
}

GameValue solve_zero_sum(const Matrix& m) {
  if (auto s = saddle_point(m)) {
    return GameValue{s->value, MixedStrategy::pure(m.rows(), s->row),
                     MixedStrategy::pure(m.cols(), s->col), true};
  }

  // Shift all entries above zero, solve the normalized column-player LP
  // (max sum y, m' y <= 1); the row strategy falls out of the duals and the
  // value is the reciprocal of the objective, un-shifted.
  const double shift = 1.0 - m.min_entry();
  const UnitLpResult lp = maximize_unit_lp(m.shifted(shift));
  if (!(lp.objective > 0.0)) {
    throw ConvergenceError("matrix game LP: nonpositive objective");
  }

  GameValue out;
  out.value = 1.0 / lp.objective - shift;
  out.row_strategy = MixedStrategy::normalized(lp.dual);
  out.col_strategy = MixedStrategy::normalized(lp.primal);
  out.via_saddle = false;
  return out;
}

std::pair<double, double> value_bounds(const Matrix& m) {
  double maximin = -std::numeric_limits<double>::infinity();
  double minimax = std::numeric_limits<double>::infinity();
  for (int i = 0; i < m.rows(); ++i) {
    double row_min = std::numeric_limits<double>::infinity();
    for (int j = 0; j < m.cols(); ++j) row_min = std::min(row_min, m(i, j));
    maximin = std::max(maximin, row_min);
  }
  for (int j = 0; j < m.cols(); ++j) {
    double col_max = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < m.rows(); ++i) col_max = std::max(col_max, m(i, j));
    minimax = std::min(minimax, col_max);
  }
  return {maximin, minimax};
}

double expected_payoff(const MixedStrategy& p, const Matrix& m,
                       const MixedStrategy& q) {
  if (p.size() != m.rows() || q.size() != m.cols()) {
    throw InputError("expected payoff: strategy length does not match matrix");
  }
  double total = 0.0;
  for (int i = 0; i < m.rows(); ++i) {
    if (p[i] == 0.0) continue;
    double row = 0.0;
    for (int j = 0; j < m.cols(); ++j) row += m(i, j) * q[j];
    total += p[i] * row;
  }
  return total;
}

}  // namespace coopgame
