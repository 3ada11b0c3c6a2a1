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

#ifndef COOPGAME_CLI_SVG_PLOT_HPP_
#define COOPGAME_CLI_SVG_PLOT_HPP_

#include <string>
#include <utility>
#include <vector>

#include "coopgame/coop.hpp"

namespace coopgame::cli {

// Everything the SVG renderer draws, in payoff coordinates plus the pixel
// transform, so callers can recompute where any payoff point lands.
struct PlotScene {
  static constexpr int kWidth = 720;
  static constexpr int kHeight = 720;
  static constexpr double kMarginLeft = 72.0;
  static constexpr double kMarginRight = 24.0;
  static constexpr double kMarginTop = 24.0;
  static constexpr double kMarginBottom = 64.0;

  std::string title;
  std::vector<PayoffPoint> hull;
  std::vector<PayoffPoint> frontier_chain;
  PayoffPoint threat;
  PayoffPoint tu_point;
  PayoffPoint ntu_point;
  PayoffPoint lambda_point;
  double nash_product = 0.0;
  bool degenerate = false;

  // Data window (payoff units), padded around everything drawn.
  double u_min = 0.0, u_max = 1.0, v_min = 0.0, v_max = 1.0;

  std::pair<double, double> map(PayoffPoint p) const;
};

PlotScene make_scene(const std::string& title, const FeasibleSet& fs,
                     const TuSolution& tu, const NtuSolution& ntu,
                     const LambdaSolution& lambda);

std::string render_svg(const PlotScene& scene);

// Pixel coordinates are emitted with this fixed formatting.
std::string fmt_px(double x);

}  // namespace coopgame::cli

#endif  // COOPGAME_CLI_SVG_PLOT_HPP_
