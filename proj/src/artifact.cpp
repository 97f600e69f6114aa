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

#include "povm/artifact.hpp"

#include <cmath>
#include <numbers>

#include "povm/error.hpp"
#include "povm/sastom.hpp"

namespace povm {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorCode::kParse, what); }

double number(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) parse_fail(std::string("missing field \"") + key + "\"");
  const Json& v = j.at(key);
  if (!v.is_number()) parse_fail(std::string("field \"") + key + "\" must be a number");
  return v.get<double>();
}

double number_or(const Json& j, const char* key, double fallback) {
  return j.contains(key) ? number(j, key) : fallback;
}

bool bool_or(const Json& j, const char* key, bool fallback) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_boolean()) parse_fail(std::string("field \"") + key + "\" must be a boolean");
  return j.at(key).get<bool>();
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) parse_fail(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

UnitarySpec unitary_from_json(const Json& j) {
  if (!j.is_object()) parse_fail("unitary spec must be an object");
  const Json& type = field(j, "type");
  if (type == "plates") return PlateStack{number(j, "q1"), number(j, "h"), number(j, "q2")};
  if (type == "matrix") return matrix_from_json(field(j, "m"));
  parse_fail("unitary type must be \"plates\" or \"matrix\"");
}

Json unitary_to_json(const UnitarySpec& u) {
  if (const auto* p = std::get_if<PlateStack>(&u)) {
    return {{"type", "plates"}, {"q1", p->quarter1}, {"h", p->half}, {"q2", p->quarter2}};
  }
  return {{"type", "matrix"}, {"m", to_json(std::get<Complex2x2>(u))}};
}

Ket ket_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) parse_fail("ket must be an array of two complex entries");
  return {complex_from_json(j[0]), complex_from_json(j[1])};
}

std::vector<Complex2x2> matrices(const Json& j, const char* key) {
  const Json& list = field(j, key);
  if (!list.is_array()) parse_fail(std::string("field \"") + key + "\" must be an array");
  std::vector<Complex2x2> out;
  for (const Json& m : list) out.push_back(matrix_from_json(m));
  return out;
}

Json matrix_list(const std::vector<Complex2x2>& ms) {
  Json a = Json::array();
  for (const Complex2x2& m : ms) a.push_back(to_json(m));
  return a;
}

void add_characterization(Json& j, const SastomCharacterization& c) {
  j["epsilon"] = c.epsilon;
  j["theta"] = c.theta;
  j["phi"] = c.phi;
  j["w"] = to_json(c.w);
  j["mPlus"] = to_json(c.m_plus);
  j["mMinus"] = to_json(c.m_minus);
}

MultiOutcomePovm as_chain(const Complex2x2& m1, const Complex2x2& m2) {
  return chain_from_stage_operators({ChainStage{m1, m2}});
}

}  // namespace

Json to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const Complex2x2& m) {
  Json a = Json::array();
  for (const Complex& z : m.entries()) a.push_back(to_json(z));
  return a;
}

Json to_json(const Ket& v) { return Json::array({to_json(v[0]), to_json(v[1])}); }

Json to_json(const PolarizationState& s) { return {{"cH", to_json(s.c_h())}, {"cV", to_json(s.c_v())}}; }

Json to_json(const SastomConfig& cfg) {
  return {{"kind", "sastom"}, {"r", cfg.r}, {"u1", unitary_to_json(cfg.u1)}, {"u2", unitary_to_json(cfg.u2)}};
}

Json to_json(const GtomConfig& cfg) {
  Json j = to_json(cfg.sastom);
  j["kind"] = "gtom";
  j["rPrime"] = cfg.r_prime;
  if (cfg.swap_outputs) j["swapOutputs"] = true;
  return j;
}

Json to_json(const ChainConfig& cfg) {
  Json stages = Json::array();
  for (const GtomConfig& s : cfg.stages) stages.push_back(to_json(s));
  Json j{{"kind", "chain"}, {"stages", stages}};
  if (!cfg.pre_rotations.empty()) {
    Json rot = Json::array();
    for (const auto& r : cfg.pre_rotations) rot.push_back(r ? to_json(*r) : Json(nullptr));
    j["preRotations"] = rot;
  }
  return j;
}

Json to_json(const SolidStateConfig& cfg) {
  return {{"kind", "solidstate"}, {"alpha", cfg.alpha}, {"xi", cfg.xi}};
}

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return j.get<double>();
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    parse_fail("complex number must be [re, im]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

Complex2x2 matrix_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 4) parse_fail("matrix must be an array of four [re, im] entries");
  Complex2x2 m{complex_from_json(j[0]), complex_from_json(j[1]), complex_from_json(j[2]),
               complex_from_json(j[3])};
  if (!m.is_finite()) throw Error(ErrorCode::kNonFinite, "matrix has non-finite entries");
  return m;
}

PolarizationState state_from_json(const Json& j) {
  if (j.is_string()) return PolarizationState::preset(j.get<std::string>());
  return PolarizationState::from_amplitudes(complex_from_json(field(j, "cH")),
                                            complex_from_json(field(j, "cV")));
}

SastomConfig sastom_config_from_json(const Json& j) {
  if (!j.is_object()) parse_fail("config must be an object");
  if (j.contains("preset")) {
    if (j.at("preset") != "iinuma") parse_fail("unknown preset");
    return iinuma_config(number(j, "eta"));
  }
  SastomConfig cfg;
  cfg.r = number(j, "r");
  if (j.contains("u1")) cfg.u1 = unitary_from_json(j.at("u1"));
  if (j.contains("u2")) cfg.u2 = unitary_from_json(j.at("u2"));
  return cfg;
}

GtomConfig gtom_config_from_json(const Json& j) {
  GtomConfig cfg;
  cfg.sastom = sastom_config_from_json(j);
  cfg.r_prime = number_or(j, "rPrime", 1.0);
  cfg.swap_outputs = bool_or(j, "swapOutputs", false);
  return cfg;
}

ChainConfig chain_config_from_json(const Json& j) {
  ChainConfig cfg;
  const Json& stages = field(j, "stages");
  if (!stages.is_array()) parse_fail("\"stages\" must be an array");
  for (const Json& s : stages) cfg.stages.push_back(gtom_config_from_json(s));
  if (j.contains("preRotations")) {
    const Json& rot = j.at("preRotations");
    if (!rot.is_array()) parse_fail("\"preRotations\" must be an array");
    for (const Json& r : rot) {
      cfg.pre_rotations.push_back(r.is_null() ? std::nullopt
                                              : std::optional<Complex2x2>(matrix_from_json(r)));
    }
  }
  return cfg;
}

SolidStateConfig solidstate_config_from_json(const Json& j) {
  return {number(j, "alpha"), number_or(j, "xi", std::numbers::pi / 2.0)};
}

Measurement build_measurement(const Json& config, const BuildOptions& opts) {
  if (!config.is_object() || !config.contains("kind") || !config.at("kind").is_string()) {
    parse_fail("config needs a string \"kind\"");
  }
  Measurement m;
  m.kind = config.at("kind").get<std::string>();
  Json& a = m.artifact;
  a["kind"] = m.kind;

  if (m.kind == "sastom") {
    const SastomConfig cfg = sastom_config_from_json(config);
    const MeasurementPair p = build_sastom(cfg, opts);
    m.operators = {p.m1, p.m2};
    a["config"] = to_json(cfg);
    a["M1"] = to_json(p.m1);
    a["M2"] = to_json(p.m2);
    a["V1"] = to_json(p.v1);
    a["V2"] = to_json(p.v2);
    add_characterization(a, p.characterization);
  } else if (m.kind == "gtom") {
    const GtomConfig cfg = gtom_config_from_json(config);
    const GtomResult g = build_gtom(cfg, opts);
    m.operators = {g.m1, g.m2};
    a["config"] = to_json(cfg);
    a["M1"] = to_json(g.m1);
    a["M2"] = to_json(g.m2);
    a["X1"] = to_json(g.x1);
    a["X2"] = to_json(g.x2);
    a["sGate"] = to_json(g.s_gate);
    a["gate"] = gate_name(g.gate_kind);
    a["phaseGatePredicted"] = g.phase_gate_predicted;
    a["onBoundary"] = g.on_boundary;
    a["p"] = g.p;
    a["q"] = g.q;
    a["delta"] = g.delta;
    add_characterization(a, g.characterization);
  } else if (m.kind == "chain") {
    const ChainConfig cfg = chain_config_from_json(config);
    m.chain = build_chain(cfg, opts);
    m.operators = m.chain.k_ops;
    a["config"] = to_json(cfg);
    a["K"] = matrix_list(m.chain.k_ops);
    a["Y"] = matrix_list(m.chain.y_ops);
    a["W"] = matrix_list(m.chain.w_ops);
    Json stages = Json::array();
    for (const ChainStage& s : m.chain.stages) stages.push_back({{"M1", to_json(s.m1)}, {"M2", to_json(s.m2)}});
    a["stages"] = stages;
    a["gram"] = povm_gram(m.chain);
    return m;
  } else if (m.kind == "solidstate") {
    const SolidStateConfig cfg = solidstate_config_from_json(config);
    const SolidStateResult s = partial_cnot_measurement(cfg);
    m.operators = {s.m0, s.m1};
    a["config"] = to_json(cfg);
    a["basis"] = "plus-minus";
    a["M0"] = to_json(s.m0);
    a["M1"] = to_json(s.m1);
    a["correction0"] = to_json(s.correction0);
    a["correction1"] = to_json(s.correction1);
    a["X0"] = to_json(s.x0);
    a["X1"] = to_json(s.x1);
    a["alphaPrime"] = s.alpha_prime;
  } else {
    parse_fail("unknown kind \"" + m.kind + "\"");
  }
  m.chain = as_chain(m.operators[0], m.operators[1]);
  return m;
}

namespace {

void require(bool ok, const std::string& invariant) {
  if (!ok) throw Error(ErrorCode::kValidation, "invariant violated: " + invariant);
}

void require_psd(const std::vector<Complex2x2>& ops, const char* name, double tol) {
  for (std::size_t i = 0; i < ops.size(); ++i) {
    require(ops[i].is_psd(tol), std::string(name) + std::to_string(i + 1) + " positive semidefinite");
  }
}

void require_complete(const std::vector<Complex2x2>& ops, double tol) {
  require(completeness_error(ops) <= tol, "completeness sum M†M = I");
}

void require_matches(const std::vector<Complex2x2>& got, const std::vector<Complex2x2>& want, double tol) {
  require(got.size() == want.size(), "operator count matches rebuild from config");
  for (std::size_t i = 0; i < got.size(); ++i) {
    require(max_abs_diff(got[i], want[i]) <= tol, "operators match rebuild from config");
  }
}

double real_trace(const Complex2x2& m) { return m.trace().real(); }

}  // namespace

void validate_artifact(const Json& a, double tol) {
  if (!a.is_object() || !a.contains("kind") || !a.at("kind").is_string()) {
    parse_fail("artifact needs a string \"kind\"");
  }
  const std::string kind = a.at("kind").get<std::string>();
  BuildOptions opts;
  opts.dual_path_check = false;
  const Measurement rebuilt = build_measurement(field(a, "config"), opts);
  require(rebuilt.kind == kind, "kind matches config");

  if (kind == "sastom") {
    const Complex2x2 m1 = matrix_from_json(field(a, "M1"));
    const Complex2x2 m2 = matrix_from_json(field(a, "M2"));
    const Complex2x2 v1 = matrix_from_json(field(a, "V1"));
    const Complex2x2 v2 = matrix_from_json(field(a, "V2"));
    const double eps = number(a, "epsilon");
    require_psd({m1, m2}, "M", tol);
    require_complete({m1, m2}, tol);
    require(max_abs(commutator(m1, m2)) <= tol, "[M1, M2] = 0");
    require(std::abs(real_trace(gram(m1)) - 1.0) <= tol && std::abs(real_trace(gram(m2)) - 1.0) <= tol,
            "Tr M1†M1 = Tr M2†M2 = 1");
    require(std::abs(hs_inner(gram(m1), gram(m2)).real() - (1.0 - eps * eps) / 2.0) <= tol,
            "Tr E1†E2 = (1 - eps^2)/2");
    require(v1.is_unitary(tol) && v2.is_unitary(tol), "V1, V2 unitary");
    const BranchOperators x = interferometer_branches(sastom_config_from_json(a.at("config")));
    require(max_abs_diff(v1.adjoint() * m1, x.x1) <= tol && max_abs_diff(v2.adjoint() * m2, x.x2) <= tol,
            "X_n = V_n† M_n");
    // 1 - eps comes from the rebuild; eps itself is compared with it below
    SastomCharacterization c = characterize_sastom(sastom_config_from_json(a.at("config")));
    c.epsilon = eps;
    c.m_plus = ket_from_json(field(a, "mPlus"));
    c.m_minus = ket_from_json(field(a, "mMinus"));
    require(std::abs(inner(c.m_plus, c.m_minus)) <= tol, "<m+|m-> = 0");
    const auto [a1, a2] = sastom_operators(c);
    require(max_abs_diff(a1, m1) <= tol && max_abs_diff(a2, m2) <= tol,
            "M1, M2 equal the analytic eigen-expansion");
    require(std::abs(eps - rebuilt.artifact.at("epsilon").get<double>()) <= tol, "epsilon matches rebuild");
    require_matches({m1, m2}, rebuilt.operators, tol);
  } else if (kind == "gtom") {
    const Complex2x2 m1 = matrix_from_json(field(a, "M1"));
    const Complex2x2 m2 = matrix_from_json(field(a, "M2"));
    const Complex2x2 s = matrix_from_json(field(a, "sGate"));
    const double p = number(a, "p");
    const double q = number(a, "q");
    const double delta = number(a, "delta");
    require_psd({m1, m2}, "M", tol);
    require_complete({m1, m2}, tol);
    require(std::abs(delta - (p + q - 1.0)) <= tol, "delta = p + q - 1");
    require(std::abs(real_trace(gram(m1)) - (1.0 + delta)) <= tol, "Tr M1'†M1' = 1 + delta");
    require(std::abs(real_trace(gram(m2)) - (1.0 - delta)) <= tol, "Tr M2'†M2' = 1 - delta");
    require(std::abs(hs_inner(gram(m1), gram(m2)).real() - (p * (1 - p) + q * (1 - q))) <= tol,
            "Tr E1'†E2' = p(1-p) + q(1-q)");
    require(s.is_unitary(tol), "S unitary");
    const bool swap = gtom_config_from_json(a.at("config")).swap_outputs;
    const Complex2x2 x_sub = matrix_from_json(field(a, swap ? "X1" : "X2"));
    require(max_abs_diff(s * x_sub, swap ? m1 : m2) <= tol, "S X' equals the compensated operator");
    require_matches({m1, m2}, rebuilt.operators, tol);
  } else if (kind == "chain") {
    const std::vector<Complex2x2> k = matrices(a, "K");
    const std::vector<Complex2x2> y = matrices(a, "Y");
    const std::vector<Complex2x2> w = matrices(a, "W");
    require(k.size() >= 2 && y.size() == k.size() && w.size() == k.size(), "K, Y, W lists of length N");
    require_psd(k, "K", tol);
    require_complete(k, tol);
    for (std::size_t l = 0; l + 1 < k.size(); ++l) {
      require(max_abs_diff(gram(k[l]) + gram(y[l + 1]), gram(y[l])) <= tol,
              "K_l†K_l + Y_{l+1}†Y_{l+1} = Y_l†Y_l at stage " + std::to_string(l + 1));
    }
    for (const Complex2x2& u : w) require(u.is_unitary(tol), "W_l unitary");
    require(max_abs_diff(y[0], Complex2x2::identity()) <= tol, "Y_1 = I");
    require_matches(k, rebuilt.operators, tol);
    require_matches(y, rebuilt.chain.y_ops, tol);
  } else if (kind == "solidstate") {
    const Complex2x2 m0 = matrix_from_json(field(a, "M0"));
    const Complex2x2 m1 = matrix_from_json(field(a, "M1"));
    const Complex2x2 c0 = matrix_from_json(field(a, "correction0"));
    const Complex2x2 c1 = matrix_from_json(field(a, "correction1"));
    const Complex2x2 x0 = matrix_from_json(field(a, "X0"));
    const Complex2x2 x1 = matrix_from_json(field(a, "X1"));
    const SolidStateConfig cfg = solidstate_config_from_json(a.at("config"));
    require_psd({m0, m1}, "M", tol);
    require_complete({m0, m1}, tol);
    require(std::abs(number(a, "alphaPrime") - alpha_prime(cfg.alpha, cfg.xi)) <= 1e-12,
            "alpha' closed form");
    require(c0.is_unitary(tol) && c1.is_unitary(tol), "corrections unitary");
    require(max_abs_diff(c0.adjoint() * m0, x0) <= tol && max_abs_diff(c1.adjoint() * m1, x1) <= tol,
            "X_a = C_a† M_a");
    require_matches({m0, m1}, rebuilt.operators, tol);
  }
}

}  // namespace povm
