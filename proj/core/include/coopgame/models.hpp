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

#ifndef COOPGAME_MODELS_HPP_
#define COOPGAME_MODELS_HPP_

#include <array>
#include <vector>

#include "coopgame/coop.hpp"

namespace coopgame::models {

// Strategy labels shared by every game in the counter-terrorism family.
inline constexpr std::array<const char*, 3> kPolicyLabels = {
    "Preempt", "Status Quo", "Deter"};

// Four-parameter family: preemption yields a public benefit at a private
// cost, deterrence yields a private benefit at a public cost. Requires
// 0 < B, 0 < C, B < c < 2B and C < b < 2C (strict within 1e-12).
struct GeneralParams {
  double preempt_benefit = 0.0;  // B, public benefit of preemption
  double preempt_cost = 0.0;     // c, private cost of preemption
  double deter_benefit = 0.0;    // b, private benefit of deterrence
  double deter_cost = 0.0;       // C, public cost of deterrence
};

// Two-parameter normalization: B = C = 1, c = alpha, b = beta with
// 1 < alpha, beta < 2 (strict within 1e-12).
struct NormalizedParams {
  double alpha = 0.0;
  double beta = 0.0;
};

enum class SlopeCase { kAlphaLess, kAlphaGreater, kEqual };

const char* to_string(SlopeCase c);

// What every solution method must return on a normalized game: all three
// cooperative solutions sit at (2-alpha, 2-alpha), the disagreement point at
// (-(2-beta), -(2-beta)), sigma = 2(2-alpha), delta = 0 and lambda* = 1.
struct ClosedFormPrediction {
  PayoffPoint tu_phi;
  PayoffPoint ntu_point;
  PayoffPoint lambda_point;
  PayoffPoint disagreement;
  double sigma = 0.0;
  double delta = 0.0;
  double lambda_star = 1.0;
  SlopeCase case_tag = SlopeCase::kEqual;
};

// A Pareto-frontier segment together with its line v = slope * u + intercept.
struct FrontierSegment {
  Segment seg;
  double slope = 0.0;
  double intercept = 0.0;
};

// The 3x3 game with public benefit 4, private cost 6, private benefit 6 and
// public cost 4; rows and columns ordered Preempt, Status Quo, Deter.
Bimatrix basic_game();

Bimatrix general_game(const GeneralParams& p);

// general_game with B = C = 1, c = alpha, b = beta.
Bimatrix normalized_game(const NormalizedParams& p);

ClosedFormPrediction closed_form(const NormalizedParams& p);

// The Pareto frontier of the normalized game in closed form: two segments
// when alpha <= beta, four when alpha > beta.
std::vector<FrontierSegment> frontier_segments(const NormalizedParams& p);

}  // namespace coopgame::models

#endif  // COOPGAME_MODELS_HPP_
