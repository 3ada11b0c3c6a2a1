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

#ifndef COOPGAME_GEOM_HPP_
#define COOPGAME_GEOM_HPP_

#include <span>
#include <vector>

#include "coopgame/errors.hpp"

namespace coopgame {

// A jointly achievable payoff pair (u for player 1, v for player 2).
struct PayoffPoint {
  double u = 0.0;
  double v = 0.0;
};

// Directed segment with a.u <= b.u. A degenerate segment (a == b) stands for
// a single point.
struct Segment {
  PayoffPoint a;
  PayoffPoint b;
  bool is_point() const { return a.u == b.u && a.v == b.v; }
};

struct SupportFace {
  double value = 0.0;  // max of lambda*u + v over the hull
  Segment face;        // where the maximum is attained (possibly degenerate)
};

// Convex hull of a payoff cloud together with its Pareto-optimal boundary.
//
// The hull is stored counter-clockwise with collinear vertices merged
// (cross-product tolerance 1e-12). The frontier is the undominated portion of
// the boundary, ordered from the point of maximal v to the point of maximal
// u; every frontier segment strictly gains u and strictly loses v, except for
// the degenerate single-point frontier.
class FeasibleSet {
 public:
  explicit FeasibleSet(std::span<const PayoffPoint> points);

  const std::vector<PayoffPoint>& hull() const { return hull_; }
  const std::vector<Segment>& frontier() const { return frontier_; }

  // True iff p is inside the hull or within distance tol of its boundary.
  bool contains(PayoffPoint p, double tol) const;

  // Support of the hull in direction (lambda, 1), lambda > 0.
  SupportFace support(double lambda) const;

 private:
  void build_frontier();

  std::vector<PayoffPoint> hull_;
  std::vector<Segment> frontier_;
};

double distance(PayoffPoint a, PayoffPoint b);
double distance_to_segment(PayoffPoint p, const Segment& s);
double distance_to_frontier(const FeasibleSet& s, PayoffPoint p);

}  // namespace coopgame

#endif  // COOPGAME_GEOM_HPP_
