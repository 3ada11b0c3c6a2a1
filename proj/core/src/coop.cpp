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

#include "coopgame/coop.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

namespace coopgame {
namespace {

constexpr double kBestResponseEps = 1e-12;
constexpr double kThreatMembershipTol = 1e-9;

struct Candidate {
  PayoffPoint point;
  double score = -std::numeric_limits<double>::infinity();
};

double segment_slope(const Segment& s) {
  return (s.b.v - s.a.v) / (s.b.u - s.a.u);
}

PayoffPoint on_line(const Segment& s, double slope, double u) {
  return PayoffPoint{u, s.a.v + slope * (u - s.a.u)};
}

// Maximizes min(u - t.u, v - t.v) over one frontier segment. The minimum of
// an increasing and a decreasing linear function is concave, so the maximum
// sits at their crossing clamped to the segment.
PayoffPoint best_min_gain_point(const Segment& s, PayoffPoint t) {
  if (s.is_point()) return s.a;
  const double slope = segment_slope(s);
  double u = (t.u - t.v + s.a.v - slope * s.a.u) / (1.0 - slope);
  u = std::clamp(u, s.a.u, s.b.u);
  return on_line(s, slope, u);
}

}  // namespace

Bimatrix::Bimatrix(Matrix a, Matrix b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_.rows() != b_.rows() || a_.cols() != b_.cols()) {
    throw InputError("bimatrix: payoff matrices must share one shape");
  }
}

std::vector<PureEquilibrium> pure_nash(const Bimatrix& g) {
  const Matrix& a = g.a();
  const Matrix& b = g.b();
  std::vector<double> col_max_a(g.cols(), -std::numeric_limits<double>::infinity());
  std::vector<double> row_max_b(g.rows(), -std::numeric_limits<double>::infinity());
  for (int i = 0; i < g.rows(); ++i) {
    for (int j = 0; j < g.cols(); ++j) {
      col_max_a[j] = std::max(col_max_a[j], a(i, j));
      row_max_b[i] = std::max(row_max_b[i], b(i, j));
    }
  }
  std::vector<PureEquilibrium> out;
  for (int i = 0; i < g.rows(); ++i) {
    for (int j = 0; j < g.cols(); ++j) {
      if (a(i, j) >= col_max_a[j] - kBestResponseEps &&
          b(i, j) >= row_max_b[i] - kBestResponseEps) {
        out.push_back(PureEquilibrium{i, j, PayoffPoint{a(i, j), b(i, j)}});
      }
    }
  }
  return out;
}

TuSolution tu_solution(const Bimatrix& g) {
  const Matrix& a = g.a();
  const Matrix& b = g.b();

  TuSolution out;
  out.sigma = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < g.rows(); ++i) {
    for (int j = 0; j < g.cols(); ++j) {
      const double sum = a(i, j) + b(i, j);
      if (sum > out.sigma) {
        out.sigma = sum;
        out.coop_cell = {i, j};
      }
    }
  }

  const GameValue threat_game = solve_zero_sum(a - b);
  out.delta = threat_game.value;
  out.row_threat = threat_game.row_strategy;
  out.col_threat = threat_game.col_strategy;
  out.disagreement = {
      expected_payoff(out.row_threat, a, out.col_threat),
      expected_payoff(out.row_threat, b, out.col_threat),
  };
  out.phi = {(out.sigma + out.delta) / 2.0, (out.sigma - out.delta) / 2.0};
  out.side_payment = a(out.coop_cell.first, out.coop_cell.second) - out.phi.u;
  return out;
}

std::vector<PayoffPoint> payoff_points(const Bimatrix& g) {
  std::vector<PayoffPoint> pts;
  pts.reserve(static_cast<size_t>(g.rows()) * g.cols());
  for (int i = 0; i < g.rows(); ++i) {
    for (int j = 0; j < g.cols(); ++j) {
      pts.push_back(PayoffPoint{g.a()(i, j), g.b()(i, j)});
    }
  }
  return pts;
}

FeasibleSet feasible_set_of(const Bimatrix& g) {
  return FeasibleSet(payoff_points(g));
}

NtuSolution nash_bargaining(const FeasibleSet& s, PayoffPoint threat) {
  if (!s.contains(threat, kThreatMembershipTol)) {
    throw DomainError("nash bargaining: threat point lies outside the feasible set");
  }
  const std::vector<Segment>& chain = s.frontier();

  // Screen for a frontier point strictly dominating the threat; the fallback
  // rule below keeps the solution total when none exists.
  Candidate best_min;
  for (const Segment& seg : chain) {
    const PayoffPoint p = best_min_gain_point(seg, threat);
    const double gain = std::min(p.u - threat.u, p.v - threat.v);
    if (gain > best_min.score ||
        (gain == best_min.score &&
         p.u + p.v > best_min.point.u + best_min.point.v)) {
      best_min = {p, gain};
    }
  }

  NtuSolution out;
  out.threat = threat;
  if (!(best_min.score > 0.0)) {
    out.point = best_min.point;
    out.degenerate = true;
  } else {
    Candidate best;
    auto consider = [&](PayoffPoint p) {
      const double product = (p.u - threat.u) * (p.v - threat.v);
      if (product > best.score) best = {p, product};
    };
    for (const Segment& seg : chain) {
      if (seg.is_point()) {
        if (seg.a.u >= threat.u && seg.a.v >= threat.v) consider(seg.a);
        continue;
      }
      const double slope = segment_slope(seg);
      const double intercept = seg.a.v - slope * seg.a.u;
      // Keep only the part of the segment that weakly dominates the threat;
      // the product is spuriously positive where both gains are negative.
      const double lo = std::max(seg.a.u, threat.u);
      const double hi = std::min(seg.b.u, (threat.v - intercept) / slope);
      if (lo > hi) continue;
      const double vertex =
          (slope * threat.u + threat.v - intercept) / (2.0 * slope);
      const double u = std::clamp(vertex, lo, hi);
      consider(PayoffPoint{u, intercept + slope * u});
    }
    out.point = best.point;
    out.degenerate = false;
  }
  out.nash_product = (out.point.u - threat.u) * (out.point.v - threat.v);
  return out;
}

NtuSolution ntu_nash(const Bimatrix& g, std::optional<PayoffPoint> threat) {
  const FeasibleSet fs = feasible_set_of(g);
  const PayoffPoint t = threat ? *threat : tu_solution(g).disagreement;
  return nash_bargaining(fs, t);
}

double sigma_of_lambda(const Bimatrix& g, double lambda) {
  if (!(lambda > 0.0)) throw DomainError("sigma(lambda): lambda must be positive");
  double best = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < g.rows(); ++i) {
    for (int j = 0; j < g.cols(); ++j) {
      best = std::max(best, lambda * g.a()(i, j) + g.b()(i, j));
    }
  }
  return best;
}

double delta_of_lambda(const Bimatrix& g, double lambda) {
  if (!(lambda > 0.0)) throw DomainError("delta(lambda): lambda must be positive");
  return solve_zero_sum(lambda * g.a() - g.b()).value;
}

LambdaSolution lambda_transfer(const Bimatrix& g, const LambdaOptions& options) {
  if (!(options.bracket_lo > 0.0) || !(options.bracket_hi > options.bracket_lo)) {
    throw DomainError("lambda transfer: bracket must satisfy 0 < lo < hi");
  }
  if (!(options.tol > 0.0)) {
    throw DomainError("lambda transfer: tolerance must be positive");
  }

  const FeasibleSet fs = feasible_set_of(g);

  auto split_u = [&](double lambda) {
    return (sigma_of_lambda(g, lambda) + delta_of_lambda(g, lambda)) /
           (2.0 * lambda);
  };
  // Signed horizontal offset of the split from the supporting face; zero
  // means the split lies on the frontier.
  auto offset = [&](double lambda) {
    const SupportFace sup = fs.support(lambda);
    const double u = split_u(lambda);
    return u - std::clamp(u, sup.face.a.u, sup.face.b.u);
  };

  auto finish = [&](double lambda_star, int iterations) {
    LambdaSolution out;
    out.lambda_star = lambda_star;
    out.sigma_of_lambda = sigma_of_lambda(g, lambda_star);
    out.delta_of_lambda = delta_of_lambda(g, lambda_star);
    out.point = {(out.sigma_of_lambda + out.delta_of_lambda) / (2.0 * lambda_star),
                 (out.sigma_of_lambda - out.delta_of_lambda) / 2.0};
    out.iterations = iterations;
    if (distance_to_frontier(fs, out.point) > options.tol) {
      throw ConvergenceError(
          "lambda transfer: split missed the Pareto frontier at lambda = " +
          std::to_string(lambda_star));
    }
    return out;
  };

  const int probes = std::max(2, options.probe_count);
  std::vector<double> lambda_at(probes);
  std::vector<double> offset_at(probes);
  const double ratio = options.bracket_hi / options.bracket_lo;
  for (int k = 0; k < probes; ++k) {
    lambda_at[k] =
        options.bracket_lo * std::pow(ratio, static_cast<double>(k) / (probes - 1));
  }
  lambda_at.front() = options.bracket_lo;
  lambda_at.back() = options.bracket_hi;
  for (int k = 0; k < probes; ++k) offset_at[k] = offset(lambda_at[k]);

  int bracket = -1;
  for (int k = 0; k < probes; ++k) {
    if (offset_at[k] == 0.0) return finish(lambda_at[k], 0);
    if (k + 1 < probes && offset_at[k] * offset_at[k + 1] < 0.0) {
      bracket = k;
      break;
    }
  }
  if (bracket < 0) {
    std::string msg = "lambda transfer: no sign change over the bracket; probes:";
    for (int k = 0; k < probes; ++k) {
      char buf[64];
      std::snprintf(buf, sizeof buf, " %.3g:%.3g", lambda_at[k], offset_at[k]);
      msg += buf;
    }
    throw ConvergenceError(msg);
  }

  double lo = lambda_at[bracket];
  double hi = lambda_at[bracket + 1];
  double offset_lo = offset_at[bracket];
  int iterations = 0;
  while (iterations < options.max_bisect_steps) {
    const double mid = 0.5 * (lo + hi);
    if (!(mid > lo && mid < hi)) break;  // no representable point left between
    const double mid_offset = offset(mid);
    ++iterations;
    if (mid_offset == 0.0) {
      lo = hi = mid;
      break;
    }
    if ((mid_offset > 0.0) == (offset_lo > 0.0)) {
      lo = mid;
      offset_lo = mid_offset;
    } else {
      hi = mid;
    }
    if (hi - lo <= 1e-15 * std::max(1.0, hi)) break;
  }
  return finish(0.5 * (lo + hi), iterations);
}

}  // namespace coopgame
