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

// povm-forge: build, sample, invert, validate measurements and emit theta(r)
// curve tables. Exit 0 on success, 1 on validation or library failure, 2 on
// usage errors. Errors go to stderr as one JSON line.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "povm/povm_forge.h"

namespace {

using nlohmann::json;

struct Failure {
  int exit_code;
  std::string error;
  std::string message;
};

[[noreturn]] void usage(const std::string& msg) { throw Failure{2, "Usage", msg}; }

void check(povm_status st) {
  if (st == POVM_OK) return;
  const bool user_side = st == POVM_ERR_PARSE || st == POVM_ERR_INVALID_ARGUMENT || st == POVM_ERR_IO;
  throw Failure{user_side ? 2 : 1, povm_status_name(st), povm_last_error()};
}

struct OwnedString {
  char* p = nullptr;
  ~OwnedString() { povm_string_free(p); }
  std::string str() const { return p ? std::string(p) : std::string(); }
};

struct Handle {
  povm_measurement* m = nullptr;
  ~Handle() { povm_measurement_free(m); }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) usage("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::fwrite(text.data(), 1, text.size(), stdout);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) usage("cannot write " + path);
  out << text;
}

double env_tolerance() {
  const char* v = std::getenv("POVM_FORGE_TOL");
  if (v == nullptr || *v == '\0') return povm_default_tolerance();
  char* end = nullptr;
  const double tol = std::strtod(v, &end);
  if (end == v || *end != '\0' || !(tol > 0.0)) usage("POVM_FORGE_TOL must be a positive number");
  return tol;
}

std::map<std::string, double> parse_target(const std::string& text) {
  std::map<std::string, double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) usage("target entries look like key=value: " + item);
    const std::string key = item.substr(0, eq);
    const std::string val = item.substr(eq + 1);
    char* end = nullptr;
    const double d = std::strtod(val.c_str(), &end);
    if (val.empty() || *end != '\0') usage("not a number in target: " + item);
    if (out.count(key)) usage("duplicate target key: " + key);
    out[key] = d;
  }
  return out;
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    char* end = nullptr;
    const double d = std::strtod(item.c_str(), &end);
    if (item.empty() || *end != '\0') usage("not a number: " + item);
    out.push_back(d);
  }
  if (out.empty()) usage("empty list");
  return out;
}

std::string state_arg(const std::string& s) {
  // A file holding a state JSON is accepted as well as a preset name.
  if (!s.empty() && s.front() != '{' && s.size() > 1) {
    std::ifstream in(s);
    if (in) return read_file(s);
  }
  return s;
}

int cmd_build(const std::string& config, const std::string& output, bool check_paths) {
  Handle h;
  check(povm_build_json(read_file(config).c_str(), env_tolerance(), check_paths ? 1 : 0, &h.m));
  OwnedString js;
  check(povm_measurement_to_json(h.m, &js.p));
  write_output(output, json::parse(js.str()).dump(2) + "\n");
  return 0;
}

int cmd_sample(const std::string& config, const std::string& state_text, std::size_t shots,
               std::uint64_t seed, const std::string& mode, const std::string& output,
               bool summary_only) {
  povm_sample_mode m;
  if (mode == "direct") {
    m = POVM_SAMPLE_DIRECT;
  } else if (mode == "chain") {
    m = POVM_SAMPLE_CHAIN;
  } else {
    usage("mode must be direct or chain");
  }
  Handle h;
  check(povm_build_json(read_file(config).c_str(), env_tolerance(), 0, &h.m));
  const std::string state = state_arg(state_text);
  std::size_t n = 0;
  check(povm_measurement_outcomes(h.m, &n));
  std::vector<double> probs(n);
  check(povm_probabilities(h.m, state.c_str(), probs.data(), n));
  double expected = 0.0;
  check(povm_expected_measurements(h.m, state.c_str(), &expected));

  std::vector<uint32_t> outcomes(shots), nmeas(shots);
  check(povm_sample(h.m, state.c_str(), seed, shots, m, outcomes.data(), nmeas.data()));

  std::string text;
  std::vector<uint64_t> counts(n, 0);
  double total_meas = 0.0;
  for (std::size_t i = 0; i < shots; ++i) {
    ++counts[outcomes[i]];
    total_meas += nmeas[i];
    if (!summary_only) {
      text += "{\"outcome\":" + std::to_string(outcomes[i]) + ",\"nMeas\":" + std::to_string(nmeas[i]) + "}\n";
    }
  }
  double stat = 0.0, pvalue = 1.0;
  int dof = 0;
  check(povm_chi_square_gof(counts.data(), probs.data(), n, &stat, &dof, &pvalue));

  json freq = json::array();
  for (uint64_t c : counts) freq.push_back(shots ? static_cast<double>(c) / static_cast<double>(shots) : 0.0);
  json summary{{"shots", shots},
               {"seed", seed},
               {"rng", "philox4x32-10"},
               {"mode", mode},
               {"counts", counts},
               {"frequencies", freq},
               {"probabilities", probs},
               {"chiSquare", stat},
               {"dof", dof},
               {"pValue", pvalue},
               {"meanMeasurements", shots ? total_meas / static_cast<double>(shots) : 0.0},
               {"expectedMeasurements", expected}};
  text += json{{"summary", summary}}.dump() + "\n";
  write_output(output, text);
  return 0;
}

int cmd_invert(const std::string& target, const std::string& povm_file, bool allow_swap,
               const std::string& output) {
  if (target.empty() == povm_file.empty()) usage("give exactly one of --target or --povm");
  OwnedString cfg;
  if (!povm_file.empty()) {
    check(povm_invert_povm_json(read_file(povm_file).c_str(), &cfg.p));
  } else {
    auto t = parse_target(target);
    auto take = [&](const char* k, bool required, double fallback) {
      auto it = t.find(k);
      if (it == t.end()) {
        if (required) usage(std::string("target is missing ") + k);
        return fallback;
      }
      const double v = it->second;
      t.erase(it);
      return v;
    };
    if (t.count("eps")) {
      const double eps = take("eps", true, 0.0);
      const double theta = take("theta", true, 0.0);
      const double phi = take("phi", false, 0.0);
      if (!t.empty()) usage("unknown target key: " + t.begin()->first);
      check(povm_invert_sastom(eps, theta, phi, &cfg.p));
    } else {
      const double p = take("p", true, 0.0);
      const double q = take("q", true, 0.0);
      const double theta = take("theta", false, 0.0);
      const double phi = take("phi", false, 0.0);
      if (!t.empty()) usage("unknown target key: " + t.begin()->first);
      check(povm_invert_gtom(p, q, theta, phi, allow_swap ? 1 : 0, &cfg.p));
    }
  }
  write_output(output, json::parse(cfg.str()).dump(2) + "\n");
  return 0;
}

int cmd_curves(const std::string& eps, int grid, const std::string& output) {
  const std::vector<double> e = parse_list(eps);
  OwnedString csv;
  check(povm_theta_curves_csv(e.data(), e.size(), grid, &csv.p));
  write_output(output, csv.str());
  return 0;
}

int cmd_validate(const std::string& artifact, double tol) {
  check(povm_validate_json(read_file(artifact).c_str(), tol > 0.0 ? tol : env_tolerance()));
  std::cout << json{{"valid", true}}.dump() << "\n";
  return 0;
}

void report(const std::string& error, const std::string& message) {
  std::cerr << json{{"error", error}, {"message", message}}.dump() << std::endl;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Construct, simulate and inverse-design single-qubit measurements"};
  app.require_subcommand(1);

  std::string config, output, state = "H", mode = "direct", target, povm_file, eps = "0.3,0.6,0.9";
  std::size_t shots = 1000;
  std::uint64_t seed = 0;
  int grid = 400;
  double tol = 0.0;
  bool summary_only = false, allow_swap = false, no_check = false;

  auto* build = app.add_subcommand("build", "Build a measurement from a config file");
  build->add_option("-c,--config", config, "config JSON")->required();
  build->add_option("-o,--output", output, "output file (default stdout)");
  build->add_flag("--no-check", no_check, "skip the analytic cross-check");

  auto* sample = app.add_subcommand("sample", "Monte Carlo outcomes for a state");
  sample->add_option("-c,--config", config, "config JSON")->required();
  sample->add_option("--state", state, "preset name, state JSON or state file");
  sample->add_option("--shots", shots, "number of shots");
  sample->add_option("--seed", seed, "RNG seed");
  sample->add_option("--mode", mode, "direct or chain");
  sample->add_option("-o,--output", output, "output file (default stdout)");
  sample->add_flag("--summary-only", summary_only, "print only the summary record");

  auto* invert = app.add_subcommand("invert", "Find settings for a target measurement");
  invert->add_option("--target", target, "eps=..,theta=..,phi=.. or p=..,q=..,theta=..,phi=..");
  invert->add_option("--povm", povm_file, "JSON list of target operators");
  invert->add_flag("--allow-swap", allow_swap, "allow exchanged output ports (p + q < 1)");
  invert->add_option("-o,--output", output, "output file (default stdout)");

  auto* curves = app.add_subcommand("curves", "theta(r) curve table as CSV");
  curves->add_option("--eps", eps, "comma-separated strengths");
  curves->add_option("--grid", grid, "number of r grid points");
  curves->add_option("-o,--output", output, "output file (default stdout)");

  auto* validate = app.add_subcommand("validate", "Re-check a built artifact");
  validate->add_option("-c,--config", config, "artifact JSON")->required();
  validate->add_option("--tol", tol, "tolerance (default POVM_FORGE_TOL or 1e-10)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    report("Usage", e.what());
    return 2;
  }

  try {
    if (*build) return cmd_build(config, output, !no_check);
    if (*sample) return cmd_sample(config, state, shots, seed, mode, output, summary_only);
    if (*invert) return cmd_invert(target, povm_file, allow_swap, output);
    if (*curves) return cmd_curves(eps, grid, output);
    if (*validate) return cmd_validate(config, tol);
  } catch (const Failure& f) {
    report(f.error, f.message);
    return f.exit_code;
  } catch (const std::exception& e) {
    report("Internal", e.what());
    return 1;
  }
  return 2;
}
