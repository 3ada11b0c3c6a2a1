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

#include "testutil.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include "doctest.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

namespace testutil {
namespace {

constexpr double kEps = 1e-9;

double cross(PayoffPoint o, PayoffPoint a, PayoffPoint b) {
  return (a.u - o.u) * (b.v - o.v) - (a.v - o.v) * (b.u - o.u);
}

double dist2(PayoffPoint a, PayoffPoint b) {
  const double du = a.u - b.u;
  const double dv = a.v - b.v;
  return du * du + dv * dv;
}

}  // namespace

Matrix random_matrix(std::mt19937& rng, int rows, int cols, double lo,
                     double hi) {
  std::uniform_real_distribution<double> dist(lo, hi);
  std::vector<double> entries(static_cast<size_t>(rows) * cols);
  for (double& x : entries) x = dist(rng);
  return Matrix(rows, cols, std::move(entries));
}

Bimatrix random_bimatrix(std::mt19937& rng, int max_dim) {
  std::uniform_int_distribution<int> dim(2, max_dim);
  const int rows = dim(rng);
  const int cols = dim(rng);
  return Bimatrix(random_matrix(rng, rows, cols),
                  random_matrix(rng, rows, cols));
}

Bimatrix random_symmetric_bimatrix(std::mt19937& rng, int max_dim) {
  std::uniform_int_distribution<int> dim(2, max_dim);
  const int n = dim(rng);
  Matrix a = random_matrix(rng, n, n);
  Matrix b = a.transposed();
  return Bimatrix(std::move(a), std::move(b));
}

double two_row_game_value(const Matrix& m) {
  REQUIRE(m.rows() == 2);
  const int n = m.cols();
  auto column_line = [&](int j, double p) {
    return p * m(0, j) + (1.0 - p) * m(1, j);
  };
  auto envelope = [&](double p) {
    double lo = std::numeric_limits<double>::infinity();
    for (int j = 0; j < n; ++j) lo = std::min(lo, column_line(j, p));
    return lo;
  };
  std::vector<double> candidates = {0.0, 1.0};
  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) {
      const double denom = (m(0, j) - m(1, j)) - (m(0, k) - m(1, k));
      if (std::abs(denom) < 1e-14) continue;
      const double p = (m(1, k) - m(1, j)) / denom;
      if (p > 0.0 && p < 1.0) candidates.push_back(p);
    }
  }
  double best = -std::numeric_limits<double>::infinity();
  for (double p : candidates) best = std::max(best, envelope(p));
  return best;
}

std::vector<PayoffPoint> naive_hull(std::vector<PayoffPoint> pts) {
  auto lex_less = [](PayoffPoint a, PayoffPoint b) {
    return a.u < b.u || (a.u == b.u && a.v < b.v);
  };
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](PayoffPoint a, PayoffPoint b) {
                          return a.u == b.u && a.v == b.v;
                        }),
            pts.end());
  if (pts.size() <= 2) return pts;

  // Gift wrapping, counter-clockwise, keeping only extreme points (among
  // collinear candidates the farthest one wins).
  std::vector<PayoffPoint> hull;
  const PayoffPoint start = pts.front();
  PayoffPoint current = start;
  for (size_t guard = 0; guard <= pts.size(); ++guard) {
    hull.push_back(current);
    PayoffPoint next = pts[0];
    if (next.u == current.u && next.v == current.v) next = pts[1];
    for (const PayoffPoint& r : pts) {
      if (r.u == current.u && r.v == current.v) continue;
      const double c = cross(current, next, r);
      if (c < -1e-12 ||
          (std::abs(c) <= 1e-12 && dist2(current, r) > dist2(current, next))) {
        next = r;
      }
    }
    current = next;
    if (current.u == start.u && current.v == start.v) break;
  }
  return hull;
}

bool segment_dominates(PayoffPoint a, PayoffPoint b, PayoffPoint p) {
  const double du = b.u - a.u;
  const double dv = b.v - a.v;
  double t_lo = 0.0;
  double t_hi = 1.0;
  auto constrain = [&](double start, double delta, double bound) {
    if (std::abs(delta) < 1e-14) return start >= bound - 1e-12;
    const double t = (bound - start) / delta;
    if (delta > 0.0) {
      t_lo = std::max(t_lo, t);
    } else {
      t_hi = std::min(t_hi, t);
    }
    return true;
  };
  if (!constrain(a.u, du, p.u)) return false;
  if (!constrain(a.v, dv, p.v)) return false;
  if (t_lo > t_hi + 1e-15) return false;
  for (double t : {t_lo, t_hi}) {
    const PayoffPoint q{a.u + t * du, a.v + t * dv};
    if (q.u > p.u + kEps || q.v > p.v + kEps) return true;
  }
  return false;
}

std::vector<PayoffPoint> naive_pareto_points(
    const std::vector<PayoffPoint>& input,
    const std::vector<PayoffPoint>& hull) {
  std::vector<PayoffPoint> out;
  for (const PayoffPoint& p : input) {
    bool dominated = false;
    for (size_t i = 0; i < hull.size() && !dominated; ++i) {
      for (size_t j = i; j < hull.size() && !dominated; ++j) {
        dominated = segment_dominates(hull[i], hull[j], p);
      }
    }
    if (!dominated) out.push_back(p);
  }
  return out;
}

std::vector<PayoffPoint> frontier_samples(const FeasibleSet& fs, int n) {
  const auto& chain = fs.frontier();
  std::vector<PayoffPoint> out;
  out.reserve(n);
  const double u0 = chain.front().a.u;
  const double u1 = chain.back().b.u;
  if (u1 <= u0) {
    out.assign(n, chain.front().a);
    return out;
  }
  size_t seg = 0;
  for (int k = 0; k < n; ++k) {
    const double u = u0 + (u1 - u0) * k / (n - 1);
    while (seg + 1 < chain.size() && u > chain[seg].b.u) ++seg;
    const auto& s = chain[seg];
    const double t = (u - s.a.u) / (s.b.u - s.a.u);
    out.push_back(PayoffPoint{u, s.a.v + t * (s.b.v - s.a.v)});
  }
  return out;
}

CliResult run_cli(const std::string& args) {
  static int counter = 0;
  const auto err_path =
      std::filesystem::temp_directory_path() /
      ("coopgame_err_" + std::to_string(::getpid()) + "_" +
       std::to_string(counter++) + ".txt");
  const std::string cmd =
      std::string(COOPGAME_CLI_PATH) + " " + args + " 2>" + err_path.string();

  CliResult result;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  size_t got = 0;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) {
    result.out.append(buf, got);
  }
  const int status = ::pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;

  std::ifstream err_file(err_path);
  std::stringstream err;
  err << err_file.rdbuf();
  result.err = err.str();
  std::filesystem::remove(err_path);
  return result;
}

std::filesystem::path write_temp_file(const std::string& stem,
                                      const std::string& contents) {
  static int counter = 0;
  const auto path = std::filesystem::temp_directory_path() /
                    (stem + "_" + std::to_string(::getpid()) + "_" +
                     std::to_string(counter++));
  std::ofstream out(path);
  REQUIRE(out.good());
  out << contents;
  return path;
}

bool xml_well_formed(const std::string& s, std::string* error) {
  auto fail = [&](const std::string& msg) {
    if (error) *error = msg;
    return false;
  };
  const size_t n = s.size();
  size_t i = 0;
  std::vector<std::string> stack;
  int roots = 0;
  auto skip_ws = [&] {
    while (i < n && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  auto name_char = [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '-' ||
           c == '_' || c == ':';
  };

  skip_ws();
  if (s.compare(i, 5, "<?xml") == 0) {
    const size_t end = s.find("?>", i);
    if (end == std::string::npos) return fail("unterminated xml declaration");
    i = end + 2;
  }
  while (i < n) {
    if (s[i] != '<') {
      if (stack.empty() && !std::isspace(static_cast<unsigned char>(s[i]))) {
        return fail("text outside the root element");
      }
      ++i;
      continue;
    }
    if (s.compare(i, 4, "<!--") == 0) {
      const size_t end = s.find("-->", i);
      if (end == std::string::npos) return fail("unterminated comment");
      i = end + 3;
      continue;
    }
    if (s.compare(i, 2, "</") == 0) {
      i += 2;
      std::string name;
      while (i < n && name_char(s[i])) name += s[i++];
      skip_ws();
      if (i >= n || s[i] != '>') return fail("malformed closing tag");
      ++i;
      if (stack.empty() || stack.back() != name) {
        return fail("mismatched closing tag: " + name);
      }
      stack.pop_back();
      continue;
    }
    ++i;
    std::string name;
    while (i < n && name_char(s[i])) name += s[i++];
    if (name.empty()) return fail("empty tag name");
    bool self_closing = false;
    for (;;) {
      skip_ws();
      if (i >= n) return fail("unterminated tag: " + name);
      if (s[i] == '/') {
        if (i + 1 >= n || s[i + 1] != '>') return fail("malformed self-closing tag");
        self_closing = true;
        i += 2;
        break;
      }
      if (s[i] == '>') {
        ++i;
        break;
      }
      std::string attr;
      while (i < n && s[i] != '=' && s[i] != '>' && s[i] != '/' &&
             !std::isspace(static_cast<unsigned char>(s[i]))) {
        attr += s[i++];
      }
      if (attr.empty()) return fail("malformed attribute in <" + name + ">");
      skip_ws();
      if (i >= n || s[i] != '=') return fail("attribute without value: " + attr);
      ++i;
      skip_ws();
      if (i >= n || s[i] != '"') return fail("unquoted attribute value: " + attr);
      ++i;
      while (i < n && s[i] != '"') {
        if (s[i] == '<') return fail("raw '<' inside attribute value");
        ++i;
      }
      if (i >= n) return fail("unterminated attribute value");
      ++i;
    }
    if (stack.empty() && ++roots > 1) return fail("multiple root elements");
    if (!self_closing) stack.push_back(name);
  }
  if (!stack.empty()) return fail("unclosed element: " + stack.back());
  if (roots != 1) return fail("missing root element");
  return true;
}

std::vector<SvgTag> parse_tags(const std::string& xml) {
  std::vector<SvgTag> tags;
  const size_t n = xml.size();
  size_t i = 0;
  auto name_char = [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '-' ||
           c == '_' || c == ':';
  };
  while (i < n) {
    if (xml[i] != '<') {
      ++i;
      continue;
    }
    if (xml.compare(i, 4, "<!--") == 0) {
      i = xml.find("-->", i);
      if (i == std::string::npos) break;
      i += 3;
      continue;
    }
    if (xml.compare(i, 2, "<?") == 0 || xml.compare(i, 2, "</") == 0) {
      i = xml.find('>', i);
      if (i == std::string::npos) break;
      ++i;
      continue;
    }
    ++i;
    SvgTag tag;
    while (i < n && name_char(xml[i])) tag.name += xml[i++];
    while (i < n && xml[i] != '>') {
      while (i < n && std::isspace(static_cast<unsigned char>(xml[i]))) ++i;
      if (i < n && (xml[i] == '/' || xml[i] == '>')) {
        if (xml[i] == '/') ++i;
        continue;
      }
      std::string attr;
      while (i < n && xml[i] != '=' && xml[i] != '>' &&
             !std::isspace(static_cast<unsigned char>(xml[i]))) {
        attr += xml[i++];
      }
      if (i >= n || xml[i] != '=') continue;
      ++i;
      if (i >= n || xml[i] != '"') continue;
      ++i;
      std::string value;
      while (i < n && xml[i] != '"') value += xml[i++];
      if (i < n) ++i;
      tag.attrs[attr] = value;
    }
    if (i < n) ++i;
    tags.push_back(std::move(tag));
  }
  return tags;
}

std::vector<std::pair<double, double>> declared_points(const std::string& svg) {
  std::vector<std::pair<double, double>> out;
  for (const SvgTag& tag : parse_tags(svg)) {
    auto points = tag.attrs.find("points");
    if (points != tag.attrs.end()) {
      std::istringstream is(points->second);
      std::string pair;
      while (is >> pair) {
        const auto comma = pair.find(',');
        REQUIRE(comma != std::string::npos);
        out.emplace_back(std::stod(pair.substr(0, comma)),
                         std::stod(pair.substr(comma + 1)));
      }
    }
    auto cx = tag.attrs.find("cx");
    auto cy = tag.attrs.find("cy");
    if (cx != tag.attrs.end() && cy != tag.attrs.end()) {
      out.emplace_back(std::stod(cx->second), std::stod(cy->second));
    }
    auto x = tag.attrs.find("x");
    auto y = tag.attrs.find("y");
    if (x != tag.attrs.end() && y != tag.attrs.end()) {
      out.emplace_back(std::stod(x->second), std::stod(y->second));
    }
  }
  return out;
}

}  // namespace testutil
