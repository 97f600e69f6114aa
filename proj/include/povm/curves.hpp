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

#pragma once

// theta(r) at fixed strength: for each r the |w| required by the strength
// relation is solved and the polar angle of m+ evaluated.

#include <string>
#include <vector>

namespace povm {

struct CurvePoint {
  double epsilon;
  double r;
  double theta;
};

struct CurveTable {
  std::vector<CurvePoint> rows;  // sorted by (epsilon, r)
  std::size_t skipped = 0;       // grid points with |w|^2 outside [0, 1]
};

/// r runs over `grid` evenly spaced points of [0, 1] with 1/sqrt2 added.
/// Throws Error(kOutOfRange) unless every eps is in (0, 1] and grid >= 2.
CurveTable theta_curves(std::vector<double> eps_list, int grid);

/// CSV with header "epsilon,r,theta", 17 significant digits, and a
/// "# skipped N infeasible points" footer.
std::string curves_csv(const CurveTable& table);

}  // namespace povm
