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

#ifndef COOPGAME_CLI_NUMFMT_HPP_
#define COOPGAME_CLI_NUMFMT_HPP_

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

namespace coopgame::cli {

// Emitted numbers carry 12 significant digits: below solver precision, above
// every test tolerance, and stable across runs.
inline double round_sig(double x) {
  if (!std::isfinite(x) || x == 0.0) return x;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

inline std::string fmt_sig(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

inline std::vector<std::vector<double>> rounded_matrix(
    const std::vector<std::vector<double>>& m) {
  std::vector<std::vector<double>> out(m);
  for (auto& row : out) {
    for (double& x : row) x = round_sig(x);
  }
  return out;
}

}  // namespace coopgame::cli

#endif  // COOPGAME_CLI_NUMFMT_HPP_
