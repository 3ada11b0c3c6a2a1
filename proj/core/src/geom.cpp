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

#include "coopgame/geom.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>

namespace coopgame {
namespace {

// Collinear hull vertices are merged at this cross-product tolerance; the
// bundled game families produce exactly collinear payoff triples.
constexpr double kCollinearEps = 1e-12;

double cross(const PayoffPoint& o, const PayoffPoint& a, const PayoffPoint& b) {
  return (a.u - o.u) * (b.v - o.v) - (a.v - o.v) * (b.u - o.u);
}

bool lex_less(const PayoffPoint& x, const PayoffPoint& y) {
  return x.u < y.u || (x.u == y.u && x.v < y.v);
}

bool same(const PayoffPoint& x, const PayoffPoint& y) {
  return x.u == y.u && x.v == y.v;
}

}  // namespace

FeasibleSet::FeasibleSet(std::span<const PayoffPoint> points) {
  if (points.empty()) {
    throw InputError("feasible set: at least one point required");
  }
  for (const PayoffPoint& p : points) {
    if (!std::isfinite(p.u) || !std::isfinite(p.v)) {
      throw InputError("feasible set: non-finite coordinate");
    }
  }

  std::vector<PayoffPoint> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end(), same), pts.end());

  if (pts.size() == 1) {
    hull_ = pts;
  } else {
    // Andrew's monotone chain, counter-clockwise, dropping collinear middles.
    const size_t n = pts.size();
    std::vector<PayoffPoint> h(2 * n);
    size_t k = 0;
    for (size_t i = 0; i < n; ++i) {
      while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= kCollinearEps) --k;
      h[k++] = pts[i];
    }
    const size_t lower_end = k + 1;
    for (size_t i = n - 1; i-- > 0;) {
      while (k >= lower_end && cross(h[k - 2], h[k - 1], pts[i]) <= kCollinearEps) --k;
      h[k++] = pts[i];
    }
    h.resize(k - 1);
    hull_ = std::move(h);
  }
  build_frontier();
}

void FeasibleSet::build_frontier() {
  const int n = static_cast<int>(hull_.size());
  int max_v = 0;  // highest vertex, ties resolved toward larger u
  int max_u = 0;  // rightmost vertex, ties resolved toward larger v
  for (int i = 1; i < n; ++i) {
    const PayoffPoint& p = hull_[i];
    const PayoffPoint& pv = hull_[max_v];
    const PayoffPoint& pu = hull_[max_u];
    if (p.v > pv.v || (p.v == pv.v && p.u > pv.u)) max_v = i;
    if (p.u > pu.u || (p.u == pu.u && p.v > pu.v)) max_u = i;
  }

  if (max_v == max_u) {
    frontier_ = {Segment{hull_[max_v], hull_[max_v]}};
    return;
  }

  // Walk clockwise (backwards in the CCW order) from the top vertex to the
  // rightmost one; this is exactly the undominated part of the boundary.
  int i = max_v;
  while (i != max_u) {
    const int j = (i - 1 + n) % n;
    frontier_.push_back(Segment{hull_[i], hull_[j]});
    i = j;
  }
  for (const Segment& s : frontier_) {
    assert(s.a.u < s.b.u && s.a.v > s.b.v);
    (void)s;
  }
}

bool FeasibleSet::contains(PayoffPoint p, double tol) const {
  if (!std::isfinite(p.u) || !std::isfinite(p.v)) return false;
  const int n = static_cast<int>(hull_.size());
  if (n == 1) return distance(p, hull_[0]) <= tol;
  if (n == 2) return distance_to_segment(p, Segment{hull_[0], hull_[1]}) <= tol;
  for (int i = 0; i < n; ++i) {
    const PayoffPoint& a = hull_[i];
    const PayoffPoint& b = hull_[(i + 1) % n];
    const double len = std::hypot(b.u - a.u, b.v - a.v);
    if (cross(a, b, p) < -tol * len) return false;
  }
  return true;
}

SupportFace FeasibleSet::support(double lambda) const {
  if (!(lambda > 0.0)) {
    throw DomainError("support: direction requires lambda > 0");
  }
  double best = -std::numeric_limits<double>::infinity();
  for (const PayoffPoint& p : hull_) {
    best = std::max(best, lambda * p.u + p.v);
  }
  // Exact attainment: mathematically tied vertices tie exactly in floating
  // point for the games of interest, and an exact face keeps root finding on
  // top of this function sharp.
  bool first = true;
  PayoffPoint lo, hi;
  for (const PayoffPoint& p : hull_) {
    if (lambda * p.u + p.v != best) continue;
    if (first) {
      lo = hi = p;
      first = false;
    } else {
      if (p.u < lo.u) lo = p;
      if (p.u > hi.u) hi = p;
    }
  }
  return SupportFace{best, Segment{lo, hi}};
}

double distance(PayoffPoint a, PayoffPoint b) {
  return std::hypot(a.u - b.u, a.v - b.v);
}

double distance_to_segment(PayoffPoint p, const Segment& s) {
  const double du = s.b.u - s.a.u;
  const double dv = s.b.v - s.a.v;
  const double len2 = du * du + dv * dv;
  double t = len2 > 0.0 ? ((p.u - s.a.u) * du + (p.v - s.a.v) * dv) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return std::hypot(p.u - (s.a.u + t * du), p.v - (s.a.v + t * dv));
}

double distance_to_frontier(const FeasibleSet& s, PayoffPoint p) {
  double best = std::numeric_limits<double>::infinity();
  for (const Segment& seg : s.frontier()) {
    best = std::min(best, distance_to_segment(p, seg));
  }
  return best;
}

}  // namespace coopgame
