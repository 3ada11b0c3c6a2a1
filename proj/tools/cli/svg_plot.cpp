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

#include "cli/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace coopgame::cli {
namespace {

constexpr int kCurveSamples = 160;

std::string xml_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string fmt_val(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

void extend(double& lo, double& hi, double x) {
  lo = std::min(lo, x);
  hi = std::max(hi, x);
}

std::string points_attr(const PlotScene& scene,
                        const std::vector<PayoffPoint>& pts) {
  std::ostringstream os;
  for (size_t i = 0; i < pts.size(); ++i) {
    const auto [x, y] = scene.map(pts[i]);
    if (i) os << ' ';
    os << fmt_px(x) << ',' << fmt_px(y);
  }
  return os.str();
}

void emit_marker(std::ostringstream& os, const PlotScene& scene,
                 PayoffPoint p, const char* id, const char* color,
                 const char* label, double label_dy) {
  const auto [x, y] = scene.map(p);
  os << "  <circle id=\"" << id << "\" cx=\"" << fmt_px(x) << "\" cy=\""
     << fmt_px(y) << "\" r=\"4\" fill=\"" << color << "\"/>\n";
  const double lx = std::clamp(x + 8.0, 4.0, PlotScene::kWidth - 64.0);
  const double ly = std::clamp(y + label_dy, 14.0, PlotScene::kHeight - 6.0);
  os << "  <text x=\"" << fmt_px(lx) << "\" y=\"" << fmt_px(ly)
     << "\" font-size=\"12\" fill=\"" << color << "\">" << label
     << "</text>\n";
}

}  // namespace

std::string fmt_px(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

std::pair<double, double> PlotScene::map(PayoffPoint p) const {
  const double plot_w = kWidth - kMarginLeft - kMarginRight;
  const double plot_h = kHeight - kMarginTop - kMarginBottom;
  const double x = kMarginLeft + (p.u - u_min) / (u_max - u_min) * plot_w;
  const double y = kHeight - kMarginBottom - (p.v - v_min) / (v_max - v_min) * plot_h;
  return {x, y};
}

PlotScene make_scene(const std::string& title, const FeasibleSet& fs,
                     const TuSolution& tu, const NtuSolution& ntu,
                     const LambdaSolution& lambda) {
  PlotScene scene;
  scene.title = title;
  scene.hull = fs.hull();
  const auto& chain = fs.frontier();
  scene.frontier_chain.push_back(chain.front().a);
  for (const Segment& seg : chain) {
    if (!seg.is_point()) scene.frontier_chain.push_back(seg.b);
  }
  scene.threat = ntu.threat;
  scene.tu_point = tu.phi;
  scene.ntu_point = ntu.point;
  scene.lambda_point = lambda.point;
  scene.nash_product = ntu.nash_product;
  scene.degenerate = ntu.degenerate;

  double u_lo = scene.threat.u, u_hi = scene.threat.u;
  double v_lo = scene.threat.v, v_hi = scene.threat.v;
  for (const PayoffPoint& p : scene.hull) {
    extend(u_lo, u_hi, p.u);
    extend(v_lo, v_hi, p.v);
  }
  for (const PayoffPoint& p : {scene.tu_point, scene.ntu_point, scene.lambda_point}) {
    extend(u_lo, u_hi, p.u);
    extend(v_lo, v_hi, p.v);
  }
  double u_pad = 0.08 * (u_hi - u_lo);
  double v_pad = 0.08 * (v_hi - v_lo);
  if (u_pad < 1e-9) u_pad = 1.0;
  if (v_pad < 1e-9) v_pad = 1.0;
  scene.u_min = u_lo - u_pad;
  scene.u_max = u_hi + u_pad;
  scene.v_min = v_lo - v_pad;
  scene.v_max = v_hi + v_pad;
  return scene;
}

std::string render_svg(const PlotScene& scene) {
  std::ostringstream os;
  const int w = PlotScene::kWidth;
  const int h = PlotScene::kHeight;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w
     << "\" height=\"" << h << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
  os << "  <title>" << xml_escape(scene.title) << "</title>\n";

  const double frame_x = PlotScene::kMarginLeft;
  const double frame_y = PlotScene::kMarginTop;
  const double frame_w = w - PlotScene::kMarginLeft - PlotScene::kMarginRight;
  const double frame_h = h - PlotScene::kMarginTop - PlotScene::kMarginBottom;
  os << "  <rect x=\"" << fmt_px(frame_x) << "\" y=\"" << fmt_px(frame_y)
     << "\" width=\"" << fmt_px(frame_w) << "\" height=\"" << fmt_px(frame_h)
     << "\" fill=\"white\" stroke=\"#999999\"/>\n";

  if (scene.hull.size() >= 3) {
    os << "  <polygon id=\"hull\" points=\"" << points_attr(scene, scene.hull)
       << "\" fill=\"#d7deeb\" stroke=\"#7c8db5\" stroke-width=\"1\"/>\n";
  } else if (scene.hull.size() == 2) {
    os << "  <polyline id=\"hull\" points=\"" << points_attr(scene, scene.hull)
       << "\" fill=\"none\" stroke=\"#7c8db5\" stroke-width=\"2\"/>\n";
  }

  os << "  <polyline id=\"frontier\" points=\""
     << points_attr(scene, scene.frontier_chain)
     << "\" fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"3\"/>\n";

  if (!scene.degenerate && scene.nash_product > 1e-9) {
    // Level curve (u - u*)(v - v*) = nash_product through the solution.
    std::vector<PayoffPoint> curve;
    const double span = scene.u_max - scene.u_min;
    for (int k = 0; k <= kCurveSamples; ++k) {
      const double u = scene.u_min + span * k / kCurveSamples;
      if (u <= scene.threat.u + 1e-9 * span) continue;
      const double v = scene.threat.v + scene.nash_product / (u - scene.threat.u);
      if (v < scene.v_min || v > scene.v_max) continue;
      curve.push_back(PayoffPoint{u, v});
    }
    if (curve.size() >= 2) {
      os << "  <polyline id=\"level-curve\" points=\""
         << points_attr(scene, curve)
         << "\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"1.5\""
         << " stroke-dasharray=\"6 4\"/>\n";
    }
  }

  emit_marker(os, scene, scene.threat, "threat", "#333333", "threat", 18.0);
  emit_marker(os, scene, scene.tu_point, "tu", "#2ca02c", "TU", -8.0);
  emit_marker(os, scene, scene.ntu_point, "ntu-nash", "#1f77b4", "NTU", 6.0);
  emit_marker(os, scene, scene.lambda_point, "ntu-lambda", "#9467bd", "lambda", 20.0);

  // Axis annotations.
  os << "  <text x=\"" << fmt_px(frame_x) << "\" y=\"" << fmt_px(h - 28.0)
     << "\" font-size=\"11\" fill=\"#555555\">" << fmt_val(scene.u_min)
     << "</text>\n";
  os << "  <text x=\"" << fmt_px(frame_x + frame_w - 36.0) << "\" y=\""
     << fmt_px(h - 28.0) << "\" font-size=\"11\" fill=\"#555555\">"
     << fmt_val(scene.u_max) << "</text>\n";
  os << "  <text x=\"" << fmt_px(12.0) << "\" y=\""
     << fmt_px(frame_y + frame_h) << "\" font-size=\"11\" fill=\"#555555\">"
     << fmt_val(scene.v_min) << "</text>\n";
  os << "  <text x=\"" << fmt_px(12.0) << "\" y=\"" << fmt_px(frame_y + 10.0)
     << "\" font-size=\"11\" fill=\"#555555\">" << fmt_val(scene.v_max)
     << "</text>\n";
  os << "  <text x=\"" << fmt_px(frame_x + frame_w / 2.0 - 60.0) << "\" y=\""
     << fmt_px(h - 10.0)
     << "\" font-size=\"14\">Player 1's payoff</text>\n";
  os << "  <text x=\"" << fmt_px(16.0) << "\" y=\""
     << fmt_px(frame_y + frame_h / 2.0) << "\" font-size=\"14\""
     << " transform=\"rotate(-90 16 " << fmt_px(frame_y + frame_h / 2.0)
     << ")\">Player 2's payoff</text>\n";

  os << "</svg>\n";
  return os.str();
}

}  // namespace coopgame::cli
