// Copyright 2026 The povm-forge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "povm/curves.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "povm/error.hpp"
#include "povm/sastom.hpp"

namespace povm {

CurveTable theta_curves(std::vector<double> eps_list, int grid) {
  if (grid < 2) throw Error(ErrorCode::kOutOfRange, "grid must have at least two points");
  for (double e : eps_list) {
    if (!(e > 0.0 && e <= 1.0)) throw Error(ErrorCode::kOutOfRange, "epsilon must lie in (0, 1]");
  }
  std::sort(eps_list.begin(), eps_list.end());
  eps_list.erase(std::unique(eps_list.begin(), eps_list.end()), eps_list.end());

  std::vector<double> rs;
  for (int i = 0; i < grid; ++i) rs.push_back(static_cast<double>(i) / (grid - 1));
  rs.push_back(std::numbers::sqrt2 / 2.0);
  std::sort(rs.begin(), rs.end());
  rs.erase(std::unique(rs.begin(), rs.end()), rs.end());

  CurveTable table;
  for (double eps : eps_list) {
    const double lack = (1.0 - eps) * (1.0 + eps);
    for (double r : rs) {
      const double den = 4.0 * r * r * (1.0 - r) * (1.0 + r);
      double w2;
      if (den == 0.0) {
        if (lack != 0.0) {
          ++table.skipped;
          continue;
        }
        w2 = 0.0;
      } else {
        w2 = 1.0 - lack / den;
      }
      if (!(w2 >= 0.0 && w2 <= 1.0)) {
        ++table.skipped;
        continue;
      }
      table.rows.push_back({eps, r, characterize_sastom(r, std::sqrt(w2)).theta});
    }
  }
  return table;
}

std::string curves_csv(const CurveTable& table) {
  std::string out = "epsilon,r,theta\n";
  char buf[96];
  for (const CurvePoint& p : table.rows) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", p.epsilon, p.r, p.theta);
    out += buf;
  }
  std::snprintf(buf, sizeof buf, "# skipped %zu infeasible points\n", table.skipped);
  out += buf;
  return out;
}

}  // namespace povm
