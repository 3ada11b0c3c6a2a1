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

#ifndef COOPGAME_COOP_HPP_
#define COOPGAME_COOP_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "coopgame/geom.hpp"
#include "coopgame/matgame.hpp"

namespace coopgame {

// Finite two-player game: A holds player 1's payoffs, B player 2's.
class Bimatrix {
 public:
  Bimatrix(Matrix a, Matrix b);

  const Matrix& a() const { return a_; }
  const Matrix& b() const { return b_; }
  int rows() const { return a_.rows(); }
  int cols() const { return a_.cols(); }

 private:
  Matrix a_;
  Matrix b_;
};

struct PureEquilibrium {
  int row = 0;
  int col = 0;
  PayoffPoint payoff;
};

// Transferable-utility solution: the players jointly realize the maximal cell
// sum sigma and split it at phi = ((sigma+delta)/2, (sigma-delta)/2), where
// delta is the value of the zero-sum threat game A - B.
struct TuSolution {
  double sigma = 0.0;
  double delta = 0.0;
  MixedStrategy row_threat;
  MixedStrategy col_threat;
  PayoffPoint disagreement;          // payoffs under the optimal threats
  PayoffPoint phi;                   // the agreed split
  std::pair<int, int> coop_cell{0, 0};  // lexicographically first argmax cell
  double side_payment = 0.0;         // paid by player 1 to player 2
};

// Bargaining solution over the feasible set: the frontier point maximizing
// (u - u*)(v - v*). `degenerate` is set when no feasible point strictly
// dominates the threat; the point then maximizes min(u-u*, v-v*) instead.
struct NtuSolution {
  PayoffPoint point;
  PayoffPoint threat;
  double nash_product = 0.0;
  bool degenerate = false;
};

struct LambdaSolution {
  double lambda_star = 0.0;
  PayoffPoint point;
  double sigma_of_lambda = 0.0;
  double delta_of_lambda = 0.0;
  int iterations = 0;
};

struct LambdaOptions {
  double bracket_lo = 1e-6;
  double bracket_hi = 1e6;
  double tol = 1e-9;    // accepted distance from the frontier
  int probe_count = 64;
  int max_bisect_steps = 200;
};

// All cells that are simultaneous best responses, in lexicographic order.
std::vector<PureEquilibrium> pure_nash(const Bimatrix& g);

TuSolution tu_solution(const Bimatrix& g);

// The game's pure-outcome payoff pairs, row-major.
std::vector<PayoffPoint> payoff_points(const Bimatrix& g);

// Convex hull of the pure-outcome payoff pairs.
FeasibleSet feasible_set_of(const Bimatrix& g);

// Nash bargaining over an explicit feasible set. The threat must lie in the
// set (within 1e-9). The product is maximized segment by segment in closed
// form: substituting the segment line v(u) makes it a quadratic in u whose
// vertex is clamped to the segment's u-interval.
NtuSolution nash_bargaining(const FeasibleSet& s, PayoffPoint threat);

// Nash bargaining on the game's own payoff cloud. Without an explicit threat
// the TU disagreement point (optimal-threat payoffs) is used.
NtuSolution ntu_nash(const Bimatrix& g,
                     std::optional<PayoffPoint> threat = std::nullopt);

// Rescales player 1's utility by lambda until the TU split phi(lambda) lands
// on the Pareto frontier. phi(lambda) always lies on the support line
// lambda*u + v = sigma(lambda), so membership reduces to whether its
// u-coordinate falls inside the supporting face; the sign of the offset is
// bisected over the bracket, scanning log-spaced probes for the first sign
// change and returning the smallest root found.
LambdaSolution lambda_transfer(const Bimatrix& g,
                               const LambdaOptions& options = {});

// max over cells of lambda*a_ij + b_ij, lambda > 0.
double sigma_of_lambda(const Bimatrix& g, double lambda);

// Value of the zero-sum game lambda*A - B, lambda > 0.
double delta_of_lambda(const Bimatrix& g, double lambda);

}  // namespace coopgame

#endif  // COOPGAME_COOP_HPP_
