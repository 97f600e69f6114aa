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

// JSON encodings of configs and built measurements, the kind-dispatching
// builder and the artifact validator.
//
// Matrix: [[re,im],[re,im],[re,im],[re,im]] row-major. State: {"cH":[re,im],
// "cV":[re,im]} or a preset name.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "povm/chain.hpp"
#include "povm/gtom.hpp"
#include "povm/qubit.hpp"
#include "povm/solidstate.hpp"

namespace povm {

using Json = nlohmann::json;

Json to_json(Complex z);
Json to_json(const Complex2x2& m);
Json to_json(const Ket& v);
Json to_json(const PolarizationState& s);
Json to_json(const SastomConfig& cfg);
Json to_json(const GtomConfig& cfg);
Json to_json(const ChainConfig& cfg);
Json to_json(const SolidStateConfig& cfg);

// All parsers throw Error(kParse) on malformed input.
Complex complex_from_json(const Json& j);
Complex2x2 matrix_from_json(const Json& j);
PolarizationState state_from_json(const Json& j);
SastomConfig sastom_config_from_json(const Json& j);
GtomConfig gtom_config_from_json(const Json& j);
ChainConfig chain_config_from_json(const Json& j);
SolidStateConfig solidstate_config_from_json(const Json& j);

struct Measurement {
  std::string kind;
  std::vector<Complex2x2> operators;
  MultiOutcomePovm chain;  // two-outcome kinds are held as one-stage chains
  Json artifact;
};

/// Dispatches on "kind" (sastom, gtom, chain, solidstate); an unknown kind
/// is Error(kParse).
Measurement build_measurement(const Json& config, const BuildOptions& opts = {});

/// Re-checks every invariant of a built artifact, including agreement with a
/// rebuild from its embedded config. Throws Error(kValidation) naming the
/// violated invariant.
void validate_artifact(const Json& artifact, double tol = kDefaultTol);

}  // namespace povm
