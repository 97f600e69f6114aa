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

#include "povm/povm_forge.h"

#include <cstring>
#include <new>
#include <stdexcept>
#include <string>

#include "povm/artifact.hpp"
#include "povm/curves.hpp"
#include "povm/error.hpp"
#include "povm/inverse.hpp"
#include "povm/sampler.hpp"

struct povm_measurement {
  povm::Measurement m;
};

namespace {

thread_local std::string g_last_error;

template <class F>
povm_status guarded(F&& f) {
  try {
    f();
    g_last_error.clear();
    return POVM_OK;
  } catch (const povm::Error& e) {
    g_last_error = e.what();
    return static_cast<povm_status>(e.code());
  } catch (const nlohmann::json::exception& e) {
    g_last_error = e.what();
    return POVM_ERR_PARSE;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return POVM_ERR_INVALID_ARGUMENT;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return POVM_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return POVM_ERR_INTERNAL;
  }
}

void need(const void* p, const char* what) {
  if (p == nullptr) throw std::invalid_argument(std::string(what) + " is NULL");
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

povm::PolarizationState parse_state(const char* text) {
  need(text, "state");
  std::string s(text);
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (s[first] == '{' || s[first] == '"')) {
    return povm::state_from_json(povm::Json::parse(s));
  }
  return povm::PolarizationState::preset(s);
}

povm::Json parse_json(const char* text) {
  need(text, "json text");
  try {
    return povm::Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw povm::Error(povm::ErrorCode::kParse, e.what());
  }
}

std::vector<povm::Complex2x2> target_operators(const povm::Json& j) {
  std::vector<povm::Complex2x2> out;
  auto take = [&](const povm::Json& list) {
    if (!list.is_array()) throw povm::Error(povm::ErrorCode::kParse, "operator list must be an array");
    for (const povm::Json& m : list) out.push_back(povm::matrix_from_json(m));
  };
  if (j.is_array()) {
    take(j);
  } else if (j.is_object() && j.contains("operators")) {
    take(j.at("operators"));
  } else if (j.is_object() && j.contains("K")) {
    take(j.at("K"));
  } else if (j.is_object() && j.contains("M0")) {
    out = {povm::matrix_from_json(j.at("M0")), povm::matrix_from_json(j.at("M1"))};
  } else if (j.is_object() && j.contains("M1") && j.contains("M2")) {
    out = {povm::matrix_from_json(j.at("M1")), povm::matrix_from_json(j.at("M2"))};
  } else {
    throw povm::Error(povm::ErrorCode::kParse, "no operator list found in targets");
  }
  return out;
}

}  // namespace

extern "C" {

const char* povm_version(void) { return "1.0.0"; }

const char* povm_status_name(povm_status status) {
  switch (status) {
    case POVM_OK:
      return "Ok";
    case POVM_ERR_INVALID_ARGUMENT:
      return "InvalidArgument";
    case POVM_ERR_INTERNAL:
      return "Internal";
    default:
      if (status >= POVM_ERR_NOT_HERMITIAN && status <= POVM_ERR_IO) {
        return povm::error_code_name(static_cast<povm::ErrorCode>(status));
      }
      return "Unknown";
  }
}

const char* povm_last_error(void) { return g_last_error.c_str(); }

double povm_default_tolerance(void) { return povm::kDefaultTol; }

void povm_string_free(char* s) { delete[] s; }

povm_status povm_build_json(const char* config_json, double tol, int dual_path_check,
                            povm_measurement** out) {
  if (out == nullptr) {
    g_last_error = "out is NULL";
    return POVM_ERR_INVALID_ARGUMENT;
  }
  *out = nullptr;
  return guarded([&] {
    povm::BuildOptions opts;
    opts.dual_path_check = dual_path_check != 0;
    if (tol > 0.0) opts.tol = tol;
    auto* h = new povm_measurement{povm::build_measurement(parse_json(config_json), opts)};
    *out = h;
  });
}

void povm_measurement_free(povm_measurement* m) { delete m; }

povm_status povm_measurement_kind(const povm_measurement* m, const char** out) {
  return guarded([&] {
    need(m, "measurement");
    need(out, "out");
    *out = m->m.kind.c_str();
  });
}

povm_status povm_measurement_outcomes(const povm_measurement* m, size_t* out) {
  return guarded([&] {
    need(m, "measurement");
    need(out, "out");
    *out = m->m.operators.size();
  });
}

povm_status povm_measurement_operator(const povm_measurement* m, size_t k, double out[8]) {
  return guarded([&] {
    need(m, "measurement");
    need(out, "out");
    if (k >= m->m.operators.size()) throw povm::Error(povm::ErrorCode::kOutOfRange, "outcome index out of range");
    const auto& e = m->m.operators[k].entries();
    for (int i = 0; i < 4; ++i) {
      out[2 * i] = e[i].real();
      out[2 * i + 1] = e[i].imag();
    }
  });
}

povm_status povm_measurement_to_json(const povm_measurement* m, char** out) {
  return guarded([&] {
    need(m, "measurement");
    need(out, "out");
    *out = dup_string(m->m.artifact.dump());
  });
}

povm_status povm_probabilities(const povm_measurement* m, const char* state, double* out, size_t n) {
  return guarded([&] {
    need(m, "measurement");
    need(out, "out");
    const auto p = povm::born_probabilities(parse_state(state), m->m.operators);
    if (n < p.size()) throw std::invalid_argument("output buffer too small");
    std::copy(p.begin(), p.end(), out);
  });
}

povm_status povm_chain_probabilities(const povm_measurement* m, const char* state, double* out,
                                     size_t n) {
  return guarded([&] {
    need(m, "measurement");
    need(out, "out");
    const auto p = povm::chain_path_probabilities(parse_state(state), m->m.chain);
    if (n < p.size()) throw std::invalid_argument("output buffer too small");
    std::copy(p.begin(), p.end(), out);
  });
}

povm_status povm_expected_measurements(const povm_measurement* m, const char* state, double* out) {
  return guarded([&] {
    need(m, "measurement");
    need(out, "out");
    *out = povm::expected_measurement_count(povm::born_probabilities(parse_state(state), m->m.operators));
  });
}

povm_status povm_sample(const povm_measurement* m, const char* state, uint64_t seed, size_t shots,
                        povm_sample_mode mode, uint32_t* outcomes, uint32_t* n_meas) {
  return guarded([&] {
    need(m, "measurement");
    if (shots > 0) need(outcomes, "outcomes");
    const povm::PolarizationState psi = parse_state(state);
    const std::size_t n = m->m.operators.size();
    if (mode == POVM_SAMPLE_DIRECT) {
      const auto recs = povm::sample_shots(psi, m->m.operators, seed, shots);
      for (std::size_t i = 0; i < shots; ++i) {
        outcomes[i] = static_cast<uint32_t>(recs[i].outcome_index);
        if (n_meas) n_meas[i] = static_cast<uint32_t>(std::min(recs[i].outcome_index + 1, n - 1));
      }
    } else if (mode == POVM_SAMPLE_CHAIN) {
      const auto recs = povm::run_chain_shots(psi, m->m.chain, seed, shots);
      for (std::size_t i = 0; i < shots; ++i) {
        outcomes[i] = static_cast<uint32_t>(recs[i].outcome_index);
        if (n_meas) n_meas[i] = static_cast<uint32_t>(recs[i].measurements_performed);
      }
    } else {
      throw std::invalid_argument("unknown sample mode");
    }
  });
}

povm_status povm_chi_square_gof(const uint64_t* counts, const double* probabilities, size_t n,
                                double* statistic, int* dof, double* p_value) {
  return guarded([&] {
    need(counts, "counts");
    need(probabilities, "probabilities");
    const auto r = povm::chi_square_gof(std::vector<std::uint64_t>(counts, counts + n),
                                        std::vector<double>(probabilities, probabilities + n));
    if (statistic) *statistic = r.statistic;
    if (dof) *dof = r.dof;
    if (p_value) *p_value = r.p_value;
  });
}

povm_status povm_validate_json(const char* artifact_json, double tol) {
  return guarded([&] { povm::validate_artifact(parse_json(artifact_json), tol > 0.0 ? tol : povm::kDefaultTol); });
}

povm_status povm_invert_sastom(double epsilon, double theta, double phi, char** config_json) {
  return guarded([&] {
    need(config_json, "config_json");
    *config_json = dup_string(povm::to_json(povm::solve_sastom_params({epsilon, theta, phi})).dump());
  });
}

povm_status povm_invert_gtom(double p, double q, double theta, double phi, int allow_swap,
                             char** config_json) {
  return guarded([&] {
    need(config_json, "config_json");
    const auto cfg = povm::solve_gtom_params({p, q, theta, phi}, allow_swap != 0);
    *config_json = dup_string(povm::to_json(cfg).dump());
  });
}

povm_status povm_invert_povm_json(const char* targets_json, char** config_json) {
  return guarded([&] {
    need(config_json, "config_json");
    const auto cfg = povm::decompose_povm_to_chain(target_operators(parse_json(targets_json)));
    *config_json = dup_string(povm::to_json(cfg).dump());
  });
}

povm_status povm_theta_curves_csv(const double* eps, size_t n, int grid, char** csv) {
  return guarded([&] {
    need(eps, "eps");
    need(csv, "csv");
    *csv = dup_string(povm::curves_csv(povm::theta_curves(std::vector<double>(eps, eps + n), grid)));
  });
}

}  // extern "C"
