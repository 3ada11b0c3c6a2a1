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

#include "coopgame/models.hpp"

#include <cmath>
#include <string>

namespace coopgame::models {
namespace {

// The family's inequalities are strict; parameters this close to a boundary
// degenerate the dominance structure and are rejected.
constexpr double kStrictMargin = 1e-12;

void require_strict(double lhs, double rhs, const char* rule) {
  if (!(lhs + kStrictMargin < rhs)) {
    throw ConstraintError(std::string(rule) + " violated");
  }
}

void check(const NormalizedParams& p) {
  require_strict(1.0, p.alpha, "1 < alpha");
  require_strict(p.alpha, 2.0, "alpha < 2");
  require_strict(1.0, p.beta, "1 < beta");
  require_strict(p.beta, 2.0, "beta < 2");
}

}  // namespace

const char* to_string(SlopeCase c) {
  switch (c) {
    case SlopeCase::kAlphaLess: return "alpha_less";
    case SlopeCase::kAlphaGreater: return "alpha_greater";
    case SlopeCase::kEqual: return "equal";
  }
  return "unknown";
}

Bimatrix basic_game() {
  return general_game(GeneralParams{4.0, 6.0, 6.0, 4.0});
}

Bimatrix general_game(const GeneralParams& p) {
  const double pb = p.preempt_benefit;
  const double pc = p.preempt_cost;
  const double db = p.deter_benefit;
  const double dc = p.deter_cost;
  if (!(pb > 0.0)) throw ConstraintError("B > 0 violated");
  if (!(dc > 0.0)) throw ConstraintError("C > 0 violated");
  require_strict(pb, pc, "B < c");
  require_strict(pc, 2.0 * pb, "c < 2B");
  require_strict(dc, db, "C < b");
  require_strict(db, 2.0 * dc, "b < 2C");

  Matrix a = Matrix::from_rows({
      {2.0 * pb - pc, pb - pc, pb - pc - dc},
      {pb, 0.0, -dc},
      {pb + db - dc, db - dc, db - 2.0 * dc},
  });
  Matrix b = Matrix::from_rows({
      {2.0 * pb - pc, pb, pb + db - dc},
      {pb - pc, 0.0, db - dc},
      {pb - pc - dc, -dc, db - 2.0 * dc},
  });
  return Bimatrix(std::move(a), std::move(b));
}

Bimatrix normalized_game(const NormalizedParams& p) {
  check(p);
  return general_game(GeneralParams{1.0, p.alpha, p.beta, 1.0});
}

ClosedFormPrediction closed_form(const NormalizedParams& p) {
  check(p);
  ClosedFormPrediction out;
  const double split = 2.0 - p.alpha;
  out.tu_phi = out.ntu_point = out.lambda_point = {split, split};
  const double fallback = -(2.0 - p.beta);
  out.disagreement = {fallback, fallback};
  out.sigma = 2.0 * split;
  out.delta = 0.0;
  out.lambda_star = 1.0;
  if (std::abs(p.alpha - p.beta) <= kStrictMargin) {
    out.case_tag = SlopeCase::kEqual;
  } else {
    out.case_tag = p.alpha < p.beta ? SlopeCase::kAlphaLess : SlopeCase::kAlphaGreater;
  }
  return out;
}

std::vector<FrontierSegment> frontier_segments(const NormalizedParams& p) {
  check(p);
  const double alpha = p.alpha;
  const double beta = p.beta;
  const PayoffPoint top{-alpha, beta};
  const PayoffPoint mid{2.0 - alpha, 2.0 - alpha};
  const PayoffPoint bot{beta, -alpha};

  if (alpha <= beta + kStrictMargin) {
    // Two segments; at alpha == beta the four-segment chain collapses onto
    // these same lines.
    const double slope1 = -(alpha + beta - 2.0) / 2.0;
    const double slope2 = -2.0 / (alpha + beta - 2.0);
    return {
        {Segment{top, mid}, slope1, (2.0 - alpha) * (alpha + beta) / 2.0},
        {Segment{mid, bot}, slope2,
         (2.0 - alpha) * (alpha + beta) / (alpha + beta - 2.0)},
    };
  }

  const PayoffPoint upper{-(alpha - 1.0), 1.0};
  const PayoffPoint lower{1.0, -(alpha - 1.0)};
  return {
      {Segment{top, upper}, -(beta - 1.0), alpha + beta - alpha * beta},
      {Segment{upper, mid}, -(alpha - 1.0), alpha * (2.0 - alpha)},
      {Segment{mid, lower}, -1.0 / (alpha - 1.0),
       alpha * (2.0 - alpha) / (alpha - 1.0)},
      {Segment{lower, bot}, -1.0 / (beta - 1.0),
       (alpha + beta - alpha * beta) / (beta - 1.0)},
  };
}

}  // namespace coopgame::models
