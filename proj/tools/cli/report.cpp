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

#include "cli/report.hpp"

#include "cli/numfmt.hpp"

namespace coopgame::cli {
namespace {

nlohmann::json point_json(const PayoffPoint& p) {
  return {round_sig(p.u), round_sig(p.v)};
}

PayoffPoint point_from(const nlohmann::json& j) {
  return {j.at(0).get<double>(), j.at(1).get<double>()};
}

nlohmann::json strategy_json(const MixedStrategy& s) {
  nlohmann::json out = nlohmann::json::array();
  for (double p : s.probs) out.push_back(round_sig(p));
  return out;
}

MixedStrategy strategy_from(const nlohmann::json& j) {
  MixedStrategy s;
  s.probs = j.get<std::vector<double>>();
  return s;
}

}  // namespace

nlohmann::json to_json(const SolveReport& report) {
  nlohmann::json j;
  j["version"] = report.version;
  j["method"] = report.method;
  j["game"] = to_json(report.game);
  if (report.nash) {
    nlohmann::json list = nlohmann::json::array();
    for (const PureEquilibrium& e : *report.nash) {
      list.push_back({{"row", e.row},
                      {"col", e.col},
                      {"payoff", point_json(e.payoff)}});
    }
    j["nash"] = {{"equilibria", list}};
  }
  if (report.tu) {
    const TuSolution& tu = *report.tu;
    j["tu"] = {
        {"sigma", round_sig(tu.sigma)},
        {"delta", round_sig(tu.delta)},
        {"row_threat", strategy_json(tu.row_threat)},
        {"col_threat", strategy_json(tu.col_threat)},
        {"disagreement", point_json(tu.disagreement)},
        {"phi", point_json(tu.phi)},
        {"coop_cell", {tu.coop_cell.first, tu.coop_cell.second}},
        {"side_payment", round_sig(tu.side_payment)},
    };
  }
  if (report.ntu) {
    const NtuSolution& ntu = *report.ntu;
    j["ntu-nash"] = {
        {"point", point_json(ntu.point)},
        {"threat", point_json(ntu.threat)},
        {"nash_product", round_sig(ntu.nash_product)},
        {"degenerate", ntu.degenerate},
    };
  }
  if (report.lambda) {
    const LambdaSolution& lam = *report.lambda;
    j["ntu-lambda"] = {
        {"lambda_star", round_sig(lam.lambda_star)},
        {"point", point_json(lam.point)},
        {"sigma_of_lambda", round_sig(lam.sigma_of_lambda)},
        {"delta_of_lambda", round_sig(lam.delta_of_lambda)},
        {"iterations", lam.iterations},
    };
  }
  return j;
}

SolveReport report_from_json(const nlohmann::json& j) {
  try {
    SolveReport r;
    r.version = j.at("version").get<std::string>();
    r.method = j.at("method").get<std::string>();
    r.game = parse_game_spec(j.at("game"));
    if (j.contains("nash")) {
      std::vector<PureEquilibrium> list;
      for (const auto& e : j.at("nash").at("equilibria")) {
        list.push_back(PureEquilibrium{e.at("row").get<int>(),
                                       e.at("col").get<int>(),
                                       point_from(e.at("payoff"))});
      }
      r.nash = std::move(list);
    }
    if (j.contains("tu")) {
      const auto& t = j.at("tu");
      TuSolution tu;
      tu.sigma = t.at("sigma").get<double>();
      tu.delta = t.at("delta").get<double>();
      tu.row_threat = strategy_from(t.at("row_threat"));
      tu.col_threat = strategy_from(t.at("col_threat"));
      tu.disagreement = point_from(t.at("disagreement"));
      tu.phi = point_from(t.at("phi"));
      tu.coop_cell = {t.at("coop_cell").at(0).get<int>(),
                      t.at("coop_cell").at(1).get<int>()};
      tu.side_payment = t.at("side_payment").get<double>();
      r.tu = std::move(tu);
    }
    if (j.contains("ntu-nash")) {
      const auto& n = j.at("ntu-nash");
      NtuSolution ntu;
      ntu.point = point_from(n.at("point"));
      ntu.threat = point_from(n.at("threat"));
      ntu.nash_product = n.at("nash_product").get<double>();
      ntu.degenerate = n.at("degenerate").get<bool>();
      r.ntu = ntu;
    }
    if (j.contains("ntu-lambda")) {
      const auto& l = j.at("ntu-lambda");
      LambdaSolution lam;
      lam.lambda_star = l.at("lambda_star").get<double>();
      lam.point = point_from(l.at("point"));
      lam.sigma_of_lambda = l.at("sigma_of_lambda").get<double>();
      lam.delta_of_lambda = l.at("delta_of_lambda").get<double>();
      lam.iterations = l.at("iterations").get<int>();
      r.lambda = lam;
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("solve report: ") + e.what());
  }
}

std::string render_report(const SolveReport& report) {
  return to_json(report).dump(2) + "\n";
}

}  // namespace coopgame::cli
