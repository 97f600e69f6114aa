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

#include <doctest.h>

#include <cmath>

#include "povm/artifact.hpp"
#include "povm/error.hpp"
#include "povm/inverse.hpp"
#include "support/oracles.hpp"

using namespace povm;
using oracle::kPi;

namespace {

template <class F>
ErrorCode code_of(F f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kIo;
}

std::vector<Json> sample_configs() {
  oracle::Random rng(101);
  std::vector<Json> out;
  for (int i = 0; i < 20; ++i) {
    out.push_back(to_json(rng.sastom()));
    out.push_back(to_json(rng.gtom()));
    out.push_back(to_json(rng.chain(6)));
    out.push_back(to_json(SolidStateConfig{rng.uniform(), rng.uniform(-4, 4)}));
  }
  out.push_back(Json::parse(R"({"kind":"sastom","preset":"iinuma","eta":0.3})"));
  out.push_back(Json::parse(R"({"kind":"solidstate","alpha":0.9})"));
  out.push_back(Json::parse(R"({"kind":"gtom","r":0.8})"));
  return out;
}

}  // namespace

TEST_CASE("complex and matrix encodings") {
  const Complex2x2 m{Complex(1, 2), 3.0, Complex(0, -1), Complex(0.25, 0.5)};
  CHECK(matrix_from_json(to_json(m)) == m);
  CHECK(matrix_from_json(Json::parse("[1, [0, 1], 0, 2]")) == Complex2x2{1.0, Complex(0, 1), 0.0, 2.0});
  CHECK(complex_from_json(Json::parse("[0.5, -2]")) == Complex(0.5, -2));
  CHECK(code_of([] { matrix_from_json(Json::parse("[1, 2, 3]")); }) == ErrorCode::kParse);
  CHECK(code_of([] { complex_from_json(Json::parse("\"x\"")); }) == ErrorCode::kParse);
  const PolarizationState d = PolarizationState::preset("D");
  const PolarizationState e = state_from_json(to_json(d));
  CHECK(std::abs(e.c_h() - d.c_h()) <= 1e-15);
  CHECK(std::abs(e.c_v() - d.c_v()) <= 1e-15);
  CHECK(std::abs(state_from_json(Json("V")).c_v()) == 1.0);
}

TEST_CASE("config round trips") {
  oracle::Random rng(102);
  for (int i = 0; i < 50; ++i) {
    const GtomConfig g = rng.gtom();
    const GtomConfig h = gtom_config_from_json(to_json(g));
    CHECK(h.r_prime == g.r_prime);
    CHECK(h.swap_outputs == g.swap_outputs);
    CHECK(to_json(h) == to_json(g));
    const ChainConfig c = rng.chain(8);
    CHECK(to_json(chain_config_from_json(to_json(c))) == to_json(c));
    const Json dumped = Json::parse(to_json(c).dump());
    CHECK(max_abs_diff(build_chain(chain_config_from_json(dumped)).k_ops.back(), build_chain(c).k_ops.back()) == 0.0);
  }
}

TEST_CASE("built artifacts validate, and rebuilding is stable") {
  for (const Json& cfg : sample_configs()) {
    const Measurement m = build_measurement(cfg);
    CHECK_NOTHROW(validate_artifact(m.artifact));
    const Json again = build_measurement(m.artifact.at("config")).artifact;
    CHECK(again == m.artifact);
    CHECK_NOTHROW(validate_artifact(Json::parse(m.artifact.dump())));
    CHECK(completeness_error(m.operators) <= 1e-10);
    CHECK(m.chain.outcomes() == m.operators.size());
  }
}

TEST_CASE("artifact fields") {
  const Measurement s = build_measurement(to_json(solve_sastom_params({0.6, 1.0, 0.5})));
  CHECK(s.kind == "sastom");
  CHECK(std::abs(s.artifact.at("epsilon").get<double>() - 0.6) <= 1e-8);
  CHECK(std::abs(s.artifact.at("theta").get<double>() - 1.0) <= 1e-8);
  for (const char* k : {"M1", "M2", "V1", "V2", "w", "mPlus", "mMinus", "phi"}) CHECK(s.artifact.contains(k));

  GtomConfig g;
  g.sastom = solve_sastom_params({0.5, 0.0, 0.0});
  g.r_prime = 0.5;
  const Json ga = build_measurement(to_json(g)).artifact;
  CHECK(ga.at("onBoundary").get<bool>());
  CHECK(std::abs(ga.at("p").get<double>() - 0.75) <= 1e-8);
  CHECK(std::abs(ga.at("q").get<double>() - 1.0) <= 1e-8);
  CHECK(ga.at("gate").is_string());

  const Json sa = build_measurement(Json::parse(R"({"kind":"solidstate","alpha":0.8})")).artifact;
  CHECK(sa.at("basis") == "plus-minus");
  CHECK(std::abs(sa.at("alphaPrime").get<double>() - 0.8) <= 1e-15);

  ChainConfig c;
  c.stages = {g, g};
  const Json ca = build_measurement(to_json(c)).artifact;
  CHECK(ca.at("K").size() == 3);
  CHECK(ca.at("Y").size() == 3);
  CHECK(ca.at("W").size() == 3);
  CHECK(ca.at("stages").size() == 2);
  CHECK(ca.at("gram").size() == 3);
}

TEST_CASE("iinuma preset") {
  const Measurement m = build_measurement(Json::parse(R"({"kind":"sastom","preset":"iinuma","eta":0.2})"));
  const SastomCharacterization c = characterize_sastom(iinuma_config(0.2));
  CHECK(std::abs(m.artifact.at("epsilon").get<double>() - c.epsilon) <= 1e-15);
}

TEST_CASE("tampered artifacts fail validation") {
  const auto tamper = [](Json a, const char* key, int idx, double delta) {
    a[key][idx][0] = a[key][idx][0].get<double>() + delta;
    return code_of([&] { validate_artifact(a); });
  };
  const Json s = build_measurement(to_json(solve_sastom_params({0.6, 1.0, 0.5}))).artifact;
  CHECK(tamper(s, "M1", 0, 1e-6) == ErrorCode::kValidation);
  CHECK(tamper(s, "V2", 3, 1e-6) == ErrorCode::kValidation);
  Json e = s;
  e["epsilon"] = 0.61;
  CHECK(code_of([&] { validate_artifact(e); }) == ErrorCode::kValidation);

  oracle::Random rng(103);
  const Json c = build_measurement(to_json(rng.chain(5))).artifact;
  Json k = c;
  k["K"][1][0][0] = k["K"][1][0][0].get<double>() + 1e-6;
  CHECK(code_of([&] { validate_artifact(k); }) == ErrorCode::kValidation);

  const Json ss = build_measurement(Json::parse(R"({"kind":"solidstate","alpha":0.7,"xi":1.0})")).artifact;
  CHECK(tamper(ss, "correction0", 0, 1e-6) == ErrorCode::kValidation);
  Json ap = ss;
  ap["alphaPrime"] = 0.5;
  CHECK(code_of([&] { validate_artifact(ap); }) == ErrorCode::kValidation);

  GtomConfig g;
  g.sastom.r = 0.8;
  g.r_prime = 0.7;
  const Json ga = build_measurement(to_json(g)).artifact;
  CHECK(tamper(ga, "M2", 0, 1e-6) == ErrorCode::kValidation);
  Json q = ga;
  q["q"] = q["q"].get<double>() + 1e-6;
  CHECK(code_of([&] { validate_artifact(q); }) == ErrorCode::kValidation);
  // the tolerance is honoured
  CHECK_NOTHROW(validate_artifact(q, 1e-5));
}

TEST_CASE("parse errors") {
  CHECK(code_of([] { build_measurement(Json::parse(R"({"kind":"laser"})")); }) == ErrorCode::kParse);
  CHECK(code_of([] { build_measurement(Json::parse(R"({"r":0.5})")); }) == ErrorCode::kParse);
  CHECK(code_of([] { build_measurement(Json::parse(R"({"kind":"sastom"})")); }) == ErrorCode::kParse);
  CHECK(code_of([] { build_measurement(Json::parse(R"({"kind":"sastom","r":"x"})")); }) == ErrorCode::kParse);
  CHECK(code_of([] { build_measurement(Json::parse(R"({"kind":"chain","stages":3})")); }) == ErrorCode::kParse);
  CHECK(code_of([] {
          build_measurement(Json::parse(R"({"kind":"sastom","r":0.5,"u1":{"type":"mirror"}})"));
        }) == ErrorCode::kParse);
  CHECK(code_of([] { validate_artifact(Json::parse("[]")); }) == ErrorCode::kParse);
  CHECK(code_of([] { build_measurement(Json::parse(R"({"kind":"sastom","r":1.5})")); }) ==
        ErrorCode::kInvalidConfig);
  CHECK(code_of([] { build_measurement(Json::parse(R"({"kind":"solidstate","alpha":3})")); }) ==
        ErrorCode::kOutOfRange);
}
